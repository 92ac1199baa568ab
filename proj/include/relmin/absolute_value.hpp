#pragma once

#include <optional>
#include <span>
#include <utility>

#include "relmin/cayley_dickson.hpp"
#include "relmin/rational.hpp"
#include "relmin/report.hpp"

namespace relmin {

/// Which absolute value is being talked about: the Euclidean one on a
/// Cayley-Dickson algebra, represented exactly through its square N(x),
/// or the p-adic one on ℚ, which is rational-valued outright.
class AbsValueDescriptor {
public:
    enum class Kind { euclidean_cd, padic };

    static AbsValueDescriptor euclidean(int level);
    /// Throws DomainError unless p is prime (trial division).
    static AbsValueDescriptor padic(const Int& p);

    Kind kind() const { return kind_; }
    int level() const { return level_; }
    const Int& prime() const { return prime_; }

private:
    AbsValueDescriptor(Kind kind, int level, Int prime)
        : kind_(kind), level_(level), prime_(std::move(prime)) {}
    Kind kind_;
    int level_ = 0;  // euclidean_cd only
    Int prime_ = 0;  // padic only
};

/// A(x)² = N(x) for the Euclidean descriptor. Throws ShapeError when the
/// element level disagrees with the descriptor or the descriptor is p-adic.
Rational abs_squared(const AbsValueDescriptor& desc, const CDElement& x);

/// |q|_p = p^(−v) where q = p^v·(a/b) with p ∤ a, p ∤ b; |0|_p = 0.
Rational padic_abs(const Rational& q, const Int& p);

/// Least natural n ≤ bound with A(n·1) > 1, or nullopt. Decided exactly:
/// n² > 1 for the Euclidean case, p^(−v_p(n)) > 1 for the p-adic case
/// (which never happens: integers have nonnegative valuation).
std::optional<Int> archimedean_witness(const AbsValueDescriptor& desc, const Int& bound);

/// Exact axiom checks over the given sample pairs: positivity
/// (A(x) = 0 iff x = 0), multiplicativity, and the triangle inequality
/// (√N(x+y) ≤ √N(x) + √N(y) via sqrt_sum_leq for Euclidean; the strong form
/// |x+y|_p ≤ max ≤ sum for p-adic). Violations are report content, not
/// errors.
SuiteReport verify_axioms(const AbsValueDescriptor& desc,
                          std::span<const std::pair<CDElement, CDElement>> samples);
SuiteReport verify_axioms(const AbsValueDescriptor& desc,
                          std::span<const std::pair<Rational, Rational>> samples);

}  // namespace relmin
