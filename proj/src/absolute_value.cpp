#include "relmin/absolute_value.hpp"

#include <string>

#include "relmin/json_io.hpp"

namespace relmin {

AbsValueDescriptor AbsValueDescriptor::euclidean(int level) {
    if (level < 0 || level > kMaxCayleyDicksonLevel)
        throw ShapeError("euclidean descriptor level must be in 0..4");
    return AbsValueDescriptor(Kind::euclidean_cd, level, Int(0));
}

AbsValueDescriptor AbsValueDescriptor::padic(const Int& p) {
    if (!is_prime(p)) throw DomainError("p-adic absolute value needs a prime, got " + p.get_str());
    return AbsValueDescriptor(Kind::padic, 0, p);
}

Rational abs_squared(const AbsValueDescriptor& desc, const CDElement& x) {
    if (desc.kind() != AbsValueDescriptor::Kind::euclidean_cd)
        throw ShapeError("abs_squared applies to the euclidean descriptor");
    if (desc.level() != x.level())
        throw ShapeError("descriptor level " + std::to_string(desc.level()) +
                         " does not match element level " + std::to_string(x.level()));
    return cd_norm_form(x);
}

Rational padic_abs(const Rational& q, const Int& p) {
    if (!is_prime(p)) throw DomainError("p-adic absolute value needs a prime, got " + p.get_str());
    if (q.is_zero()) return Rational(0);
    // v = v_p(num) − v_p(den); |q|_p = p^(−v). One of the two terms is 0
    // since num and den are coprime.
    const long v = static_cast<long>(prime_multiplicity(q.numerator(), p)) -
                   static_cast<long>(prime_multiplicity(q.denominator(), p));
    const Int power = int_pow(p, static_cast<unsigned long>(v < 0 ? -v : v));
    return v >= 0 ? Rational(Int(1), power) : Rational(power);
}

std::optional<Int> archimedean_witness(const AbsValueDescriptor& desc, const Int& bound) {
    if (bound < 1) throw PreconditionError("witness bound must be ≥ 1");
    for (Int n = 1; n <= bound; ++n) {
        if (desc.kind() == AbsValueDescriptor::Kind::euclidean_cd) {
            if (n * n > 1) return n;  // A(n·1)² = n²
        } else {
            if (padic_abs(Rational(n), desc.prime()) > Rational(1)) return n;  // never: v_p(n) ≥ 0
        }
    }
    return std::nullopt;
}

namespace {

struct PropertyTally {
    PropertyResult result;
    void record(bool ok, long index, const Json& witness) {
        ++result.checked;
        if (!ok) {
            ++result.failed;
            if (!result.counterexample) {
                Json ce = witness;
                ce["sample"] = index;
                result.counterexample = std::move(ce);
            }
        }
    }
};

}  // namespace

SuiteReport verify_axioms(const AbsValueDescriptor& desc,
                          std::span<const std::pair<CDElement, CDElement>> samples) {
    if (desc.kind() != AbsValueDescriptor::Kind::euclidean_cd)
        throw ShapeError("element pairs require the euclidean descriptor");
    PropertyTally positivity, multiplicativity, triangle;
    positivity.result.name = "positivity";
    multiplicativity.result.name = "multiplicativity";
    triangle.result.name = "triangle";

    long index = 0;
    for (const auto& [x, y] : samples) {
        const Rational nx = abs_squared(desc, x);
        const Rational ny = abs_squared(desc, y);
        const Json witness{{"x", cd_to_json(x)}, {"y", cd_to_json(y)}};
        positivity.record(nx.sign() >= 0 && ny.sign() >= 0 && (nx.is_zero() == x.is_zero()) &&
                              (ny.is_zero() == y.is_zero()),
                          index, witness);
        multiplicativity.record(cd_norm_form(cd_mul(x, y)) == nx * ny, index, witness);
        triangle.record(sqrt_sum_leq(cd_norm_form(x + y), nx, ny), index, witness);
        ++index;
    }
    return SuiteReport{"abs_axioms[euclidean]",
                       {positivity.result, multiplicativity.result, triangle.result}};
}

SuiteReport verify_axioms(const AbsValueDescriptor& desc,
                          std::span<const std::pair<Rational, Rational>> samples) {
    if (desc.kind() != AbsValueDescriptor::Kind::padic)
        throw ShapeError("rational pairs require the p-adic descriptor");
    const Int& p = desc.prime();
    PropertyTally positivity, multiplicativity, strong_triangle, triangle_equality;
    positivity.result.name = "positivity";
    multiplicativity.result.name = "multiplicativity";
    strong_triangle.result.name = "strong_triangle";
    triangle_equality.result.name = "strong_triangle_equality";

    long index = 0;
    for (const auto& [x, y] : samples) {
        const Rational ax = padic_abs(x, p);
        const Rational ay = padic_abs(y, p);
        const Rational asum = padic_abs(x + y, p);
        const Rational amax = ax < ay ? ay : ax;
        const Json witness{{"x", x.str()}, {"y", y.str()}};
        positivity.record(ax.sign() >= 0 && (ax.is_zero() == x.is_zero()), index, witness);
        multiplicativity.record(padic_abs(x * y, p) == ax * ay, index, witness);
        strong_triangle.record(asum <= amax && amax <= ax + ay, index, witness);
        // Ultrametric equality: when the two values differ, the sum attains
        // the max exactly. Equal values contribute a vacuous check.
        triangle_equality.record(ax == ay || asum == amax, index, witness);
        ++index;
    }
    return SuiteReport{"abs_axioms[padic]",
                       {positivity.result, multiplicativity.result, strong_triangle.result,
                        triangle_equality.result}};
}

}  // namespace relmin
