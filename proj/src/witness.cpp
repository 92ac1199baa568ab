#include "relmin/witness.hpp"

#include <string>
#include <utility>

namespace relmin {

namespace {

// sign of √2·q − r, decided in ℚ by squaring on the matching sign branch.
int cmp_sqrt2_mul(const Rational& q, const Rational& r) {
    const int sq = q.sign();
    const int sr = r.sign();
    if (sq == 0) return -sr;
    if (sq > 0) {
        if (sr <= 0) return 1;
        const Rational lhs = Rational(2) * q * q;
        const Rational rhs = r * r;
        return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    }
    if (sr >= 0) return -1;
    const Rational lhs = Rational(2) * q * q;  // |√2 q| vs |r|, both negative
    const Rational rhs = r * r;
    return lhs == rhs ? 0 : (lhs < rhs ? 1 : -1);
}

// floor(√2·x) for x ≥ 0: the largest n with n² ≤ 2·x², evaluated on
// integers as n·den ≤ isqrt(2·num²).
Int floor_sqrt2_mul(const Rational& x) {
    const Int num = x.numerator();
    const Int den = x.denominator();
    const Int root = isqrt(2 * num * num);
    return root / den;
}

}  // namespace

Rational dist_to_integers(const Rational& x) {
    const Int num = x.numerator();
    const Int den = x.denominator();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const Rational down = x - Rational(fl);
    const Rational up = Rational(Int(fl + 1)) - x;
    return down <= up ? down : up;
}

bool sqrt2_dist_below(const Rational& x, const Rational& bound) {
    if (bound.sign() <= 0) return false;
    const Rational ax = x.abs();
    if (ax.is_zero()) return true;
    const Int n = floor_sqrt2_mul(ax);
    // dist = min(√2·|x| − n, n+1 − √2·|x|); compare each to the bound.
    if (cmp_sqrt2_mul(ax, Rational(n) + bound) < 0) return true;       // √2|x| − n < bound
    return cmp_sqrt2_mul(ax, Rational(Int(n + 1)) - bound) > 0;             // n+1 − √2|x| < bound
}

KroneckerOracle::KroneckerOracle(const Rational& delta1, const Rational& delta2)
    : delta1_(delta1), delta2_(delta2) {
    const Rational half(1, 2);
    if (delta1.sign() <= 0 || delta2.sign() <= 0 || half < delta1 || half < delta2)
        throw PreconditionError("oracle radii must satisfy 0 < delta ≤ 1/2");
}

NeighborhoodParams KroneckerOracle::describe(const Id& v) const {
    if (v < 1) throw PreconditionError("invalid neighborhood id");
    const Rational scale(Int(1), v);
    return {delta1_ * scale, delta2_ * scale};
}

NeighborhoodOracle::Id KroneckerOracle::shrink(const Id& v, const Int& k) const {
    if (v < 1) throw PreconditionError("invalid neighborhood id");
    if (k < 1) throw PreconditionError("shrink factor must be ≥ 1");
    return v * k;
}

Rational KroneckerOracle::escape(const Id& w, const Rational& r) const {
    const NeighborhoodParams params = describe(w);
    // Walk the convergents p/q of √2 = [1;2,2,2,...]. Each satisfies
    // |q√2 − p| < 1/q (from p² − 2q² = ±1), so the first q with q ≥ r and
    // 1/q < δ2 is an integer member of W of absolute value ≥ r.
    Int p = 1, q = 1;
    while (Rational(q) < r || !(Rational(q) * params.delta2 > Rational(1))) {
        const Int p_next = p + 2 * q;
        const Int q_next = p + q;
        p = p_next;
        q = q_next;
    }
    // Confirm the bounds exactly (dist(q,ℤ) = 0 and dist(√2·q,ℤ) < δ2 via
    // the p² vs 2q² comparison) rather than rely on the 1/q estimate.
    const Rational out{q};
    if (!contains(w, out)) throw ContractError("convergent escape failed its exact bound check", out.str());
    return out;
}

bool KroneckerOracle::contains(const Id& v, const Rational& x) const {
    const NeighborhoodParams params = describe(v);
    if (!(dist_to_integers(x) < params.delta1)) return false;
    return sqrt2_dist_below(x, params.delta2);
}

std::unique_ptr<NeighborhoodOracle> kronecker_oracle(const Rational& delta1, const Rational& delta2) {
    return std::make_unique<KroneckerOracle>(delta1, delta2);
}

EscalationRequest::EscalationRequest(const Int& n0_, unsigned m_, const Rational& r_)
    : n0(n0_), c_squared(Rational(Int(n0_ * n0_))), m(m_), r(r_) {
    if (n0 < 2)
        throw PreconditionError("escalation base needs a natural n0 with A(n0) > 1, i.e. n0 ≥ 2");
    if (r.sign() <= 0) throw PreconditionError("escape radius must be positive");
}

Rational escalate_unbounded(const NeighborhoodOracle& oracle, const NeighborhoodOracle::Id& v,
                            const EscalationRequest& req) {
    const Int k = int_pow(req.n0, req.m);
    const NeighborhoodOracle::Id w = oracle.shrink(v, k);
    const Rational x0 = oracle.escape(w, req.r);

    if (!oracle.contains(w, x0))
        throw ContractError("oracle escape left its own neighborhood", x0.str());
    if (x0 * x0 < req.r * req.r)
        throw ContractError("oracle escape value below the requested norm", x0.str());

    // x = n0^m·x0 is a k-fold sum of a member of W, hence in V, and
    // A(x)² = (n0²)^m·A(x0)² ≥ c^{2m}·r².
    const Rational x = Rational(k) * x0;
    Rational required = req.r * req.r;
    for (unsigned e = 0; e < req.m; ++e) required *= req.c_squared;
    if (x * x < required)
        throw ContractError("escalated value misses the exact norm bound", x.str());
    return x;
}

std::vector<CDElement> break_compatibility(const BiadditiveMap& w, std::span<const CDElement> xbar,
                                           const Rational& eps0) {
    if (eps0.sign() <= 0) throw PreconditionError("eps0 must be positive");
    if (xbar.size() != w.dim) throw ShapeError("coordinate vector length does not match descriptor");

    const Rational threshold = (eps0 * eps0).reciprocal();  // A(x_i)² must exceed 1/eps0²
    Rational largest(0);
    std::size_t index = xbar.size();
    for (std::size_t i = 0; i < xbar.size(); ++i) {
        const Rational n = cd_norm_form(xbar[i]);
        if (largest < n) largest = n;
        if (index == xbar.size() && n > threshold) index = i;
    }
    if (index == xbar.size())
        throw NoEscapingCoordinateError(
            "no escaping coordinate: largest A(x_i)² = " + largest.str() + " ≤ " + threshold.str(),
            largest);

    std::vector<CDElement> abar(w.dim, CDElement(w.scalar_level));
    abar[index] = cd_invert(xbar[index]);

    // Exact postcondition checks: d(ā, 0̄) < eps0 in the max metric and
    // w(x̄, ā) = 1.
    if (!(cd_norm_form(abar[index]) < eps0 * eps0))
        throw ContractError("witness coordinate escaped the eps0 ball", abar[index].coeff(0).str());
    const CDElement pairing = w_eval(w, xbar, abar);
    if (!pairing.is_one())
        throw ContractError("witness pairing is not 1", cd_norm_form(pairing).str());
    return abar;
}

bool coset_projection_eq(std::span<const CDElement> g, std::span<const CDElement> g2, std::size_t j) {
    if (g.size() != g2.size()) throw ShapeError("coset comparison needs equal lengths");
    if (j < 1 || j > g.size()) throw PreconditionError("coordinate index out of range");
    return g[j - 1] == g2[j - 1];
}

}  // namespace relmin
