#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "relmin/errors.hpp"

namespace relmin {

/// Arbitrary-precision integer (GMP).
using Int = mpz_class;

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1 after every operation. GMP's mpq layer maintains the
/// canonical form; this wrapper pins the error and text conventions.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const Int& num, const Int& den);
    explicit Rational(const Int& n) : value_(n) {}

    /// Parses "p/q" or the integer shorthand "p"; sign attached to the
    /// numerator. Throws FormatError on malformed text, DivisionByZeroError
    /// on a zero denominator.
    static Rational parse(std::string_view text);

    Int numerator() const { return value_.get_num(); }
    Int denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string str() const;

    Rational operator-() const;
    Rational reciprocal() const;
    Rational abs() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
    Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
    Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Decides √q ≤ √s + √t exactly for nonnegative rationals, without leaving ℚ:
/// with L = q − s − t, the inequality holds iff L ≤ 0 or L² ≤ 4·s·t.
/// Throws DomainError on negative input.
bool sqrt_sum_leq(const Rational& q, const Rational& s, const Rational& t);

/// Deterministic primality by trial division.
bool is_prime(const Int& p);

/// Floor of the integer square root. Throws DomainError for negative input.
Int isqrt(const Int& n);

/// n^e for e ≥ 0.
Int int_pow(const Int& n, unsigned long e);

/// Multiplicity of the prime p in n (n ≠ 0).
unsigned long prime_multiplicity(const Int& n, const Int& p);

}  // namespace relmin
