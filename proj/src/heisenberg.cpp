#include "relmin/heisenberg.hpp"

#include <string>

namespace relmin {

namespace {

void check_vector(const BiadditiveMap& w, std::span<const CDElement> v, const char* what) {
    if (v.size() != w.dim)
        throw ShapeError(std::string(what) + " has length " + std::to_string(v.size()) +
                         ", descriptor wants " + std::to_string(w.dim));
    for (const CDElement& c : v)
        if (c.level() != w.scalar_level)
            throw ShapeError(std::string(what) + " entry level " + std::to_string(c.level()) +
                             " does not match descriptor level " + std::to_string(w.scalar_level));
}

std::vector<CDElement> vec_add(std::span<const CDElement> a, std::span<const CDElement> b) {
    std::vector<CDElement> out;
    out.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] + b[k]);
    return out;
}

std::vector<CDElement> vec_neg(std::span<const CDElement> a) {
    std::vector<CDElement> out;
    out.reserve(a.size());
    for (const CDElement& c : a) out.push_back(-c);
    return out;
}

bool vec_is_zero(std::span<const CDElement> a) {
    for (const CDElement& c : a)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

BiadditiveMap::BiadditiveMap(int scalar_level_, std::size_t dim_, PairingOrder order_)
    : scalar_level(scalar_level_), dim(dim_), order(order_) {
    if (scalar_level < 0 || scalar_level > 3)
        throw ShapeError("biadditive map scalar level must be in 0..3");
    if (dim < 1) throw ShapeError("biadditive map dimension must be ≥ 1");
}

void validate_element(const BiadditiveMap& w, const HeisenbergElement& u) {
    if (u.a.level() != w.scalar_level)
        throw ShapeError("scalar part level does not match descriptor");
    check_vector(w, u.x, "x part");
    check_vector(w, u.f, "f part");
}

CDElement w_eval(const BiadditiveMap& w, std::span<const CDElement> x, std::span<const CDElement> f) {
    check_vector(w, x, "x argument");
    check_vector(w, f, "f argument");
    CDElement sum(w.scalar_level);
    for (std::size_t k = 0; k < w.dim; ++k) {
        sum = sum + (w.order == PairingOrder::x_then_f ? cd_mul(x[k], f[k]) : cd_mul(f[k], x[k]));
    }
    return sum;
}

HeisenbergElement h_identity(const BiadditiveMap& w) {
    return HeisenbergElement{CDElement(w.scalar_level),
                             std::vector<CDElement>(w.dim, CDElement(w.scalar_level)),
                             std::vector<CDElement>(w.dim, CDElement(w.scalar_level))};
}

HeisenbergElement h_mul(const BiadditiveMap& w, const HeisenbergElement& u1, const HeisenbergElement& u2) {
    validate_element(w, u1);
    validate_element(w, u2);
    return HeisenbergElement{u1.a + u2.a + w_eval(w, u2.x, u1.f), vec_add(u1.x, u2.x), vec_add(u1.f, u2.f)};
}

HeisenbergElement h_inverse(const BiadditiveMap& w, const HeisenbergElement& u) {
    validate_element(w, u);
    return HeisenbergElement{-u.a + w_eval(w, u.x, u.f), vec_neg(u.x), vec_neg(u.f)};
}

HeisenbergElement h_commutator(const BiadditiveMap& w, const HeisenbergElement& u1, const HeisenbergElement& u2) {
    return h_mul(w, h_mul(w, h_mul(w, u1, u2), h_inverse(w, u1)), h_inverse(w, u2));
}

std::pair<std::vector<CDElement>, std::vector<CDElement>>
separatedness_witness(const BiadditiveMap& w, std::span<const CDElement> x0, std::span<const CDElement> f0) {
    check_vector(w, x0, "x0");
    check_vector(w, f0, "f0");
    if (vec_is_zero(x0)) throw PreconditionError("separatedness witness needs nonzero x0");
    if (vec_is_zero(f0)) throw PreconditionError("separatedness witness needs nonzero f0");

    std::size_t i = 0, j = 0;
    while (x0[i].is_zero()) ++i;
    while (f0[j].is_zero()) ++j;

    // (x, f) = (e_j, e_i): then w(x0, f) picks out x0_i and w(x, f0) picks
    // out f0_j, both nonzero regardless of pairing order.
    std::vector<CDElement> x(w.dim, CDElement(w.scalar_level));
    std::vector<CDElement> f(w.dim, CDElement(w.scalar_level));
    x[j] = CDElement::scalar(w.scalar_level, Rational(1));
    f[i] = CDElement::scalar(w.scalar_level, Rational(1));
    return {std::move(x), std::move(f)};
}

bool subgroup_membership(const HeisenbergElement& u, SubgroupFamily family) {
    const bool a0 = u.a.is_zero();
    const bool x0 = vec_is_zero(u.x);
    const bool f0 = vec_is_zero(u.f);
    switch (family) {
        case SubgroupFamily::center_A: return x0 && f0;
        case SubgroupFamily::A_cross_E: return f0;
        case SubgroupFamily::A_cross_F: return x0;
        case SubgroupFamily::E_only: return a0 && f0;
        case SubgroupFamily::F_only: return a0 && x0;
        case SubgroupFamily::E_cross_F: return a0;
    }
    throw DomainError("unknown subgroup family");
}

}  // namespace relmin
