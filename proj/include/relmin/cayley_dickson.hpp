#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "relmin/rational.hpp"

namespace relmin {

/// Highest supported doubling level. Level 4 (sedenions) is included as the
/// negative control: its norm form is not multiplicative.
inline constexpr int kMaxCayleyDicksonLevel = 4;

/// Element of the Cayley-Dickson algebra at a fixed doubling level over ℚ:
/// level 0 is ℚ itself, 1 the complex-like plane, 2 the quaternions,
/// 3 the octonions, 4 the sedenions. Coefficients are indexed so that the
/// recursive split of an element is (first half, second half).
class CDElement {
public:
    explicit CDElement(int level);
    CDElement(int level, std::vector<Rational> coeffs);

    static CDElement scalar(int level, const Rational& value);
    static CDElement basis(int level, std::size_t k);

    int level() const { return level_; }
    std::size_t dim() const { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t k) const { return coeffs_.at(k); }

    bool is_zero() const;
    bool is_one() const;

    friend bool operator==(const CDElement& a, const CDElement& b) = default;

    CDElement operator-() const;
    friend CDElement operator+(const CDElement& a, const CDElement& b);
    friend CDElement operator-(const CDElement& a, const CDElement& b);
    friend CDElement operator*(const Rational& s, const CDElement& x);

private:
    int level_;
    std::vector<Rational> coeffs_;
};

/// Product by the doubling recursion (a,b)(c,d) = (ac − db*, a*d + cb),
/// with rational multiplication at level 0. Bilinear over ℚ; not
/// commutative from level 2 on and not associative from level 3 on.
CDElement cd_mul(const CDElement& x, const CDElement& y);

/// (a,b)* = (a*, −b): negates every coefficient except coeffs[0].
CDElement cd_conjugate(const CDElement& x);

/// The quadratic norm form N(x) = Σ coeffs[k]², i.e. the exact square of the
/// Euclidean absolute value of x.
Rational cd_norm_form(const CDElement& x);

/// x⁻¹ = x* / N(x). A two-sided inverse for levels ≤ 3.
/// Throws NotInvertibleError when N(x) = 0.
CDElement cd_invert(const CDElement& x);

/// (x·y)·z − x·(y·z); identically zero up to level 2.
CDElement cd_associator(const CDElement& x, const CDElement& y, const CDElement& z);

/// Searches for a pair with N(x·y) ≠ N(x)·N(y) over the structured candidate
/// set: single basis terms c·e_k (1 ≤ c ≤ coeff_bound) and two-term sums
/// c₁·e_i + c₂·e_j (i < j, 1 ≤ c₁ ≤ coeff_bound, 0 < |c₂| ≤ coeff_bound;
/// the leading coefficient is kept positive since negating a factor cannot
/// change either side). Enumeration order is fixed, so the result is
/// deterministic: the first violating pair, or nullopt when the whole set is
/// exhausted. Levels ≤ 3 always exhaust; level 4 contains zero divisors of
/// the two-term form, so a violation exists already at coeff_bound 1.
std::optional<std::pair<CDElement, CDElement>>
find_composition_violation(int level, int coeff_bound);

}  // namespace relmin
