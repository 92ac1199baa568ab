#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "relmin/heisenberg.hpp"
#include "relmin/rational.hpp"

namespace relmin {

/// Parameter record of a neighborhood of 0: members x satisfy
/// dist(x, ℤ) < delta1 and dist(α·x, ℤ) < delta2 for the oracle's α.
struct NeighborhoodParams {
    Rational delta1;
    Rational delta2;
};

/// Operational stand-in for the neighborhood filter at 0 of a coarser group
/// topology on ℚ. Only the two capabilities the escalation argument needs
/// are exposed: shrink (iterated-sum containment) and escape (the returned
/// element leaves any norm ball). Neighborhoods are referred to by opaque
/// ids; implementations must be immutable after construction and re-entrant.
class NeighborhoodOracle {
public:
    using Id = Int;

    virtual ~NeighborhoodOracle() = default;

    virtual Id initial() const = 0;
    virtual NeighborhoodParams describe(const Id& v) const = 0;
    /// Returns W such that any sum of k members of W lies in V.
    virtual Id shrink(const Id& v, const Int& k) const = 0;
    /// Returns x ∈ W with x² ≥ r².
    virtual Rational escape(const Id& w, const Rational& r) const = 0;
    virtual bool contains(const Id& v, const Rational& x) const = 0;
};

/// The built-in strictly-coarser-topology instance: neighborhoods
/// V(δ1, δ2) = {x ∈ ℚ : dist(x, ℤ) < δ1 ∧ dist(√2·x, ℤ) < δ2}. Escape
/// values are continued-fraction convergent denominators q of √2, which are
/// integers (dist to ℤ is 0) of unbounded size with q·√2 within 1/q of an
/// integer; every bound is decided exactly by comparing p² against 2q².
/// Requires 0 < δ1, δ2 ≤ 1/2. The id of a neighborhood is its cumulative
/// shrink factor, so shrink is pure and the oracle stays immutable.
class KroneckerOracle final : public NeighborhoodOracle {
public:
    KroneckerOracle(const Rational& delta1, const Rational& delta2);

    Id initial() const override { return Int(1); }
    NeighborhoodParams describe(const Id& v) const override;
    Id shrink(const Id& v, const Int& k) const override;
    Rational escape(const Id& w, const Rational& r) const override;
    bool contains(const Id& v, const Rational& x) const override;

private:
    Rational delta1_;
    Rational delta2_;
};

std::unique_ptr<NeighborhoodOracle> kronecker_oracle(const Rational& delta1, const Rational& delta2);

/// dist(x, ℤ) as an exact rational.
Rational dist_to_integers(const Rational& x);

/// Decides dist(√2·x, ℤ) < bound exactly (bound > 0).
bool sqrt2_dist_below(const Rational& x, const Rational& bound);

/// One step of the unboundedness escalation: n0 with A(n0) = c > 1, an
/// exponent m, and the escape radius r.
struct EscalationRequest {
    EscalationRequest(const Int& n0, unsigned m, const Rational& r);

    Int n0;
    Rational c_squared;  // A(n0)² = n0², kept explicit; must exceed 1
    unsigned m;
    Rational r;  // > 0
};

/// Mechanizes the neighborhood-unboundedness argument: shrinks V by
/// k = n0^m, escapes W with norm ≥ r, and returns x = n0^m·x0, which lies in
/// V by the shrink contract and has A(x)² ≥ c²ᵐ·r² exactly. The escape
/// output is re-checked against the oracle's own membership and norm
/// contracts; a violation raises ContractError carrying the offending value.
Rational escalate_unbounded(const NeighborhoodOracle& oracle, const NeighborhoodOracle::Id& v,
                            const EscalationRequest& req);

/// Raised when no coordinate of x̄ satisfies the escape condition
/// A(x_i)² > 1/eps0²; carries the largest squared coordinate norm seen.
struct NoEscapingCoordinateError : PreconditionError {
    NoEscapingCoordinateError(const std::string& what, Rational largest)
        : PreconditionError(what), max_abs_sq(std::move(largest)) {}
    Rational max_abs_sq;
};

/// The compatibility-breaking witness: given x̄ with some coordinate of
/// squared norm > 1/eps0², returns ā with a_i = x_i⁻¹ at the first such
/// index and 0 elsewhere. Exactly guaranteed: max_k N(a_k) < eps0² (the
/// max-metric ball condition) and w(x̄, ā) = 1.
std::vector<CDElement> break_compatibility(const BiadditiveMap& w, std::span<const CDElement> xbar,
                                           const Rational& eps0);

/// Whether g and g2 lie in the same coset of H = {v : v_j = 0} inside the
/// product group, decided as g_j = g2_j (j is 1-based). This is the
/// element-level content of G/H ≅ G_j.
bool coset_projection_eq(std::span<const CDElement> g, std::span<const CDElement> g2, std::size_t j);

}  // namespace relmin
