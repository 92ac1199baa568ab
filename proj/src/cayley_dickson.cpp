#include "relmin/cayley_dickson.hpp"

#include <algorithm>
#include <string>

namespace relmin {

namespace {

void check_level(int level) {
    if (level < 0 || level > kMaxCayleyDicksonLevel)
        throw ShapeError("algebra level must be in 0.." + std::to_string(kMaxCayleyDicksonLevel) +
                         ", got " + std::to_string(level));
}

void check_same_level(const CDElement& a, const CDElement& b) {
    if (a.level() != b.level())
        throw ShapeError("algebra level mismatch: " + std::to_string(a.level()) + " vs " +
                         std::to_string(b.level()));
}

bool block_is_zero(const Rational* x, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        if (!x[k].is_zero()) return false;
    return true;
}

// Conjugation in coefficient form: negate everything after slot 0.
void conjugate_block(const Rational* x, Rational* out, std::size_t n) {
    out[0] = x[0];
    for (std::size_t k = 1; k < n; ++k) out[k] = -x[k];
}

// out = x·y on blocks of length n = 2^level. The recursion carves its
// temporaries out of `scratch` (2n rationals per level, 4n in total), so a
// product performs no allocations beyond the caller's workspace.
void mul_block(const Rational* x, const Rational* y, Rational* out, std::size_t n, Rational* scratch) {
    if (block_is_zero(x, n) || block_is_zero(y, n)) {
        std::fill_n(out, n, Rational(0));
        return;
    }
    if (n == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const std::size_t h = n / 2;
    const Rational* a = x;
    const Rational* b = x + h;
    const Rational* c = y;
    const Rational* d = y + h;

    Rational* a_conj = scratch;
    Rational* b_conj = scratch + h;
    Rational* t1 = scratch + 2 * h;
    Rational* t2 = scratch + 3 * h;
    Rational* next = scratch + 4 * h;
    conjugate_block(a, a_conj, h);
    conjugate_block(b, b_conj, h);

    // first half: a·c − d·b*
    mul_block(a, c, t1, h, next);
    mul_block(d, b_conj, t2, h, next);
    for (std::size_t k = 0; k < h; ++k) out[k] = t1[k] - t2[k];

    // second half: a*·d + c·b
    mul_block(a_conj, d, t1, h, next);
    mul_block(c, b, t2, h, next);
    for (std::size_t k = 0; k < h; ++k) out[h + k] = t1[k] + t2[k];
}

}  // namespace

CDElement::CDElement(int level) : level_(level) {
    check_level(level);
    coeffs_.assign(std::size_t{1} << level, Rational(0));
}

CDElement::CDElement(int level, std::vector<Rational> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
    check_level(level);
    const std::size_t expected = std::size_t{1} << level;
    if (coeffs_.size() != expected)
        throw ShapeError("level " + std::to_string(level) + " element needs " + std::to_string(expected) +
                         " coefficients, got " + std::to_string(coeffs_.size()));
}

CDElement CDElement::scalar(int level, const Rational& value) {
    CDElement out(level);
    out.coeffs_[0] = value;
    return out;
}

CDElement CDElement::basis(int level, std::size_t k) {
    CDElement out(level);
    if (k >= out.dim()) throw ShapeError("basis index " + std::to_string(k) + " out of range");
    out.coeffs_[k] = Rational(1);
    return out;
}

bool CDElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool CDElement::is_one() const {
    if (!(coeffs_[0] == Rational(1))) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

CDElement CDElement::operator-() const {
    CDElement out(level_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

CDElement operator+(const CDElement& a, const CDElement& b) {
    check_same_level(a, b);
    CDElement out(a.level_);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
}

CDElement operator-(const CDElement& a, const CDElement& b) {
    check_same_level(a, b);
    CDElement out(a.level_);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
}

CDElement operator*(const Rational& s, const CDElement& x) {
    CDElement out(x.level_);
    for (std::size_t k = 0; k < x.coeffs_.size(); ++k) out.coeffs_[k] = s * x.coeffs_[k];
    return out;
}

CDElement cd_mul(const CDElement& x, const CDElement& y) {
    check_same_level(x, y);
    std::vector<Rational> out(x.dim());
    // Reused per thread; mul_block never calls back into cd_mul, so one
    // workspace per thread is enough and keeps the operation re-entrant.
    thread_local std::vector<Rational> scratch;
    if (scratch.size() < 4 * x.dim()) scratch.resize(4 * x.dim());
    mul_block(x.coeffs().data(), y.coeffs().data(), out.data(), x.dim(), scratch.data());
    return CDElement(x.level(), std::move(out));
}

CDElement cd_conjugate(const CDElement& x) {
    std::vector<Rational> out(x.dim());
    conjugate_block(x.coeffs().data(), out.data(), x.dim());
    return CDElement(x.level(), std::move(out));
}

Rational cd_norm_form(const CDElement& x) {
    Rational n(0);
    for (const Rational& c : x.coeffs()) n += c * c;
    return n;
}

CDElement cd_invert(const CDElement& x) {
    const Rational n = cd_norm_form(x);
    if (n.is_zero()) throw NotInvertibleError("element with zero norm form has no inverse");
    return n.reciprocal() * cd_conjugate(x);
}

CDElement cd_associator(const CDElement& x, const CDElement& y, const CDElement& z) {
    check_same_level(x, y);
    check_same_level(y, z);
    return cd_mul(cd_mul(x, y), z) - cd_mul(x, cd_mul(y, z));
}

std::optional<std::pair<CDElement, CDElement>>
find_composition_violation(int level, int coeff_bound) {
    check_level(level);
    if (coeff_bound < 1) throw DomainError("coeff_bound must be ≥ 1");

    const std::size_t dim = std::size_t{1} << level;
    std::vector<CDElement> candidates;
    for (std::size_t k = 0; k < dim; ++k)
        for (int c = 1; c <= coeff_bound; ++c)
            candidates.push_back(Rational(c) * CDElement::basis(level, k));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (int c1 = 1; c1 <= coeff_bound; ++c1)
                for (int c2 = -coeff_bound; c2 <= coeff_bound; ++c2) {
                    if (c2 == 0) continue;
                    candidates.push_back(Rational(c1) * CDElement::basis(level, i) +
                                         Rational(c2) * CDElement::basis(level, j));
                }

    for (const CDElement& x : candidates) {
        const Rational nx = cd_norm_form(x);
        for (const CDElement& y : candidates) {
            if (!(cd_norm_form(cd_mul(x, y)) == nx * cd_norm_form(y)))
                return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

}  // namespace relmin
