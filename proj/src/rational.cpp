#include "relmin/rational.hpp"

#include <cctype>
#include <ostream>

namespace relmin {

namespace {

mpq_class make_canonical(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    mpq_class v;
    mpq_set_num(v.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(v.get_mpq_t(), den.get_mpz_t());
    v.canonicalize();
    return v;
}

}  // namespace

Rational::Rational(long num, long den) : value_(make_canonical(Int(num), Int(den))) {}

Rational::Rational(const Int& num, const Int& den) : value_(make_canonical(num, den)) {}

Rational Rational::parse(std::string_view text) {
    // Accepted grammar: ['-'] digits ['/' digits]; the denominator is unsigned.
    const auto bad = [&] { return FormatError("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::size_t pos = 0;
    if (text[pos] == '-') ++pos;
    const std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) throw bad();
    const std::string num_str(text.substr(0, pos));
    if (pos == text.size()) return Rational(Int(num_str), Int(1));
    if (text[pos] != '/') throw bad();
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) throw bad();
    const std::string den_str(text.substr(den_begin));
    return Rational(Int(num_str), Int(den_str));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZeroError("reciprocal of zero");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(inv));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZeroError("rational division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool sqrt_sum_leq(const Rational& q, const Rational& s, const Rational& t) {
    if (q.sign() < 0 || s.sign() < 0 || t.sign() < 0)
        throw DomainError("sqrt_sum_leq requires nonnegative inputs");
    const Rational gap = q - s - t;
    if (gap.sign() <= 0) return true;
    return gap * gap <= Rational(4) * s * t;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Int d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt of negative integer");
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

Int int_pow(const Int& n, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), e);
    return out;
}

unsigned long prime_multiplicity(const Int& n, const Int& p) {
    if (n == 0) throw DomainError("valuation of zero is undefined");
    Int reduced;
    const auto count = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return static_cast<unsigned long>(count);
}

}  // namespace relmin
