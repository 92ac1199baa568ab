#include <array>

#include <doctest.h>

#include "relmin/cayley_dickson.hpp"
#include "relmin/sampling.hpp"

using namespace relmin;

namespace {

CDElement q(long c0, long c1, long c2, long c3) {
    return CDElement(2, {Rational(c0), Rational(c1), Rational(c2), Rational(c3)});
}

// The level-2 basis table, expanded by hand from the doubling recursion
// (a,b)(c,d) = (ac − db*, a*d + cb) with the (first half, second half)
// split. Writing i=e1, j=e2, k=e3: products come out left-handed,
// i·j = −k, j·i = +k, and cyclically e_i·e_j = −e_k. Entry [i][j] holds
// (index, sign) of e_i·e_j, with sign 0 meaning −1·e_0... encoded below as
// index and sign with e_i² = −e_0.
struct TableEntry {
    int index;
    int sign;
};
constexpr TableEntry kQuaternionTable[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, -1}, {2, 1}},
    {{2, 1}, {3, 1}, {0, -1}, {1, -1}},
    {{3, 1}, {2, -1}, {1, 1}, {0, -1}},
};

}  // namespace

TEST_CASE("level 0 behaves as the base field") {
    const CDElement a = CDElement::scalar(0, Rational(3, 2));
    const CDElement b = CDElement::scalar(0, Rational(4, 3));
    CHECK(cd_mul(a, b) == CDElement::scalar(0, Rational(2)));
    CHECK(cd_conjugate(a) == a);
    CHECK(cd_invert(CDElement::scalar(0, Rational(3, 4))) == CDElement::scalar(0, Rational(4, 3)));
}

TEST_CASE("quaternion basis products match the hand-expanded table") {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const TableEntry expected = kQuaternionTable[i][j];
            CDElement want(2);
            want = Rational(expected.sign) * CDElement::basis(2, static_cast<std::size_t>(expected.index));
            CHECK(cd_mul(CDElement::basis(2, static_cast<std::size_t>(i)),
                         CDElement::basis(2, static_cast<std::size_t>(j))) == want);
        }
    }
    // The orientation in one line: i·j = −k while j·i = +k.
    CHECK(cd_mul(q(0, 1, 0, 0), q(0, 0, 1, 0)) == q(0, 0, 0, -1));
    CHECK(cd_mul(q(0, 0, 1, 0), q(0, 1, 0, 0)) == q(0, 0, 0, 1));
}

TEST_CASE("octonion structural facts") {
    // e0 is the unit; distinct imaginary units anticommute and square to −1.
    const CDElement one = CDElement::scalar(3, Rational(1));
    for (std::size_t i = 0; i < 8; ++i) {
        const CDElement ei = CDElement::basis(3, i);
        CHECK(cd_mul(one, ei) == ei);
        CHECK(cd_mul(ei, one) == ei);
        CHECK(cd_norm_form(ei) == Rational(1));
        if (i > 0) CHECK(cd_mul(ei, ei) == -one);
        for (std::size_t j = i + 1; j < 8; ++j) {
            if (i == 0) continue;
            const CDElement ej = CDElement::basis(3, j);
            CHECK(cd_mul(ei, ej) == -cd_mul(ej, ei));
        }
    }
    // unit times a second-half basis pair: (1,0)·(0,1) = (0,1)
    CHECK(cd_mul(CDElement::basis(3, 0), CDElement::basis(3, 4)) == CDElement::basis(3, 4));
}

TEST_CASE("conjugation") {
    CHECK(cd_conjugate(q(1, 1, 1, 1)) == q(1, -1, -1, -1));
    CHECK(cd_conjugate(CDElement::scalar(0, Rational(5))) == CDElement::scalar(0, Rational(5)));
    for (int i = 0; i < 200; ++i) {
        SplitMix64 rng = sample_rng(21, 0, static_cast<std::uint64_t>(i));
        const int level = static_cast<int>(uniform_below(rng, 5));
        const CDElement x = sample_cd(rng, level, 10);
        const CDElement y = sample_cd(rng, level, 10);
        CHECK(cd_conjugate(cd_conjugate(x)) == x);
        CHECK(cd_conjugate(cd_mul(x, y)) == cd_mul(cd_conjugate(y), cd_conjugate(x)));
    }
}

TEST_CASE("norm form") {
    CHECK(cd_norm_form(q(1, 1, 1, 1)) == Rational(4));
    CHECK(cd_norm_form(CDElement(3)) == Rational(0));
    for (std::size_t k = 0; k < 16; ++k) CHECK(cd_norm_form(CDElement::basis(4, k)) == Rational(1));
}

TEST_CASE("quadratic-algebra identity on all levels") {
    for (int i = 0; i < 300; ++i) {
        SplitMix64 rng = sample_rng(22, 0, static_cast<std::uint64_t>(i));
        const int level = static_cast<int>(uniform_below(rng, 5));
        const CDElement x = sample_cd(rng, level, 10);
        CHECK(cd_mul(x, cd_conjugate(x)) == CDElement::scalar(level, cd_norm_form(x)));
        const CDElement trace = x + cd_conjugate(x);
        for (std::size_t k = 1; k < trace.dim(); ++k) CHECK(trace.coeff(k).is_zero());
    }
}

TEST_CASE("inverses") {
    // i⁻¹ = −i, checked through the product
    const CDElement i_unit = q(0, 1, 0, 0);
    CHECK(cd_invert(i_unit) == q(0, -1, 0, 0));
    CHECK(cd_mul(i_unit, cd_invert(i_unit)) == q(1, 0, 0, 0));
    CHECK_THROWS_AS(cd_invert(CDElement(2)), NotInvertibleError);

    for (int i = 0; i < 200; ++i) {
        SplitMix64 rng = sample_rng(23, 0, static_cast<std::uint64_t>(i));
        const int level = static_cast<int>(uniform_below(rng, 4));
        const CDElement x = sample_cd_nonzero(rng, level, 10);
        const CDElement inv = cd_invert(x);
        CHECK(cd_mul(x, inv) == CDElement::scalar(level, Rational(1)));
        CHECK(cd_mul(inv, x) == CDElement::scalar(level, Rational(1)));
    }
}

TEST_CASE("quaternion basis triples associate exhaustively") {
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t c = 0; c < 4; ++c)
                CHECK(cd_associator(CDElement::basis(2, a), CDElement::basis(2, b), CDElement::basis(2, c))
                          .is_zero());
}

TEST_CASE("octonion basis pairs are alternative exhaustively") {
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            CHECK(cd_associator(CDElement::basis(3, a), CDElement::basis(3, a), CDElement::basis(3, b))
                      .is_zero());
}

TEST_CASE("associativity holds through level 2 and first fails at level 3") {
    for (int i = 0; i < 200; ++i) {
        SplitMix64 rng = sample_rng(24, 0, static_cast<std::uint64_t>(i));
        const int level = static_cast<int>(uniform_below(rng, 3));
        const CDElement x = sample_cd(rng, level, 10);
        const CDElement y = sample_cd(rng, level, 10);
        const CDElement z = sample_cd(rng, level, 10);
        CHECK(cd_associator(x, y, z).is_zero());
    }

    bool found = false;
    for (std::size_t a = 1; a < 8 && !found; ++a)
        for (std::size_t b = 1; b < 8 && !found; ++b)
            for (std::size_t c = 1; c < 8 && !found; ++c)
                found = !cd_associator(CDElement::basis(3, a), CDElement::basis(3, b), CDElement::basis(3, c))
                             .is_zero();
    CHECK(found);
}

TEST_CASE("alternativity holds through level 3 and fails at level 4") {
    for (int i = 0; i < 200; ++i) {
        SplitMix64 rng = sample_rng(25, 0, static_cast<std::uint64_t>(i));
        const int level = static_cast<int>(uniform_below(rng, 4));
        const CDElement x = sample_cd(rng, level, 10);
        const CDElement y = sample_cd(rng, level, 10);
        CHECK(cd_mul(x, cd_mul(x, y)) == cd_mul(cd_mul(x, x), y));
        CHECK(cd_mul(cd_mul(y, x), x) == cd_mul(y, cd_mul(x, x)));
        CHECK(cd_associator(x, x, y).is_zero());
    }

    // A zero-divisor left factor breaks the left alternative law: x(xy) = 0
    // but (xx)y = −N(x)·y ≠ 0.
    bool found = false;
    for (std::size_t a = 1; a < 16 && !found; ++a)
        for (std::size_t b = a + 1; b < 16 && !found; ++b)
            for (std::size_t c = 1; c < 16 && !found; ++c)
                for (std::size_t d = c + 1; d < 16 && !found; ++d)
                    for (const int sign : {1, -1}) {
                        const CDElement x = CDElement::basis(4, a) + Rational(sign) * CDElement::basis(4, b);
                        const CDElement y = CDElement::basis(4, c) + CDElement::basis(4, d);
                        if (!(cd_mul(x, cd_mul(x, y)) == cd_mul(cd_mul(x, x), y))) {
                            found = true;
                            break;
                        }
                    }
    CHECK(found);
}

TEST_CASE("composition identity through level 3") {
    for (int i = 0; i < 300; ++i) {
        SplitMix64 rng = sample_rng(26, 0, static_cast<std::uint64_t>(i));
        const int level = static_cast<int>(uniform_below(rng, 4));
        const CDElement x = sample_cd(rng, level, 10);
        const CDElement y = sample_cd(rng, level, 10);
        CHECK(cd_norm_form(cd_mul(x, y)) == cd_norm_form(x) * cd_norm_form(y));
    }
}

TEST_CASE("composition violation search") {
    CHECK(!find_composition_violation(2, 2).has_value());
    CHECK(!find_composition_violation(3, 2).has_value());

    const auto violation = find_composition_violation(4, 1);
    REQUIRE(violation.has_value());
    const auto& [x, y] = *violation;
    CHECK(!(cd_norm_form(cd_mul(x, y)) == cd_norm_form(x) * cd_norm_form(y)));
    CHECK(!cd_norm_form(x).is_zero());
    CHECK(!cd_norm_form(y).is_zero());
}

TEST_CASE("sedenions admit zero divisors in the two-term candidate set") {
    bool found = false;
    for (std::size_t a = 1; a < 16 && !found; ++a)
        for (std::size_t b = a + 1; b < 16 && !found; ++b)
            for (std::size_t c = 1; c < 16 && !found; ++c)
                for (std::size_t d = c + 1; d < 16 && !found; ++d)
                    for (const int s1 : {1, -1})
                        for (const int s2 : {1, -1}) {
                            const CDElement x =
                                CDElement::basis(4, a) + Rational(s1) * CDElement::basis(4, b);
                            const CDElement y =
                                CDElement::basis(4, c) + Rational(s2) * CDElement::basis(4, d);
                            if (cd_mul(x, y).is_zero()) {
                                found = true;
                                CHECK(!x.is_zero());
                                CHECK(!y.is_zero());
                            }
                        }
    CHECK(found);
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(cd_mul(CDElement(2), CDElement(3)), ShapeError);
    CHECK_THROWS_AS(CDElement(5), ShapeError);
    CHECK_THROWS_AS(CDElement(2, {Rational(1)}), ShapeError);
    CHECK_THROWS_AS(find_composition_violation(4, 0), DomainError);
}
