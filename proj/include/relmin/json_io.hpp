#pragma once

#include <utility>

#include "relmin/cayley_dickson.hpp"
#include "relmin/heisenberg.hpp"
#include "relmin/report.hpp"
#include "relmin/unitriangular.hpp"

namespace relmin {

// Wire formats. Rationals travel as strings ("p/q" or integer shorthand),
// never as floats.
//
//   CD element     {"level": l, "coeffs": ["p/q", ...]}   (2^l entries)
//                  shorthand on input: a bare string is a scalar, a bare
//                  array is the coefficient list with the level implied
//   Heisenberg     {"a": CD, "x": [CD...], "f": [CD...],
//                   "level": l, "n": n, "pairing": "xf"|"fx"}
//   matrix         {"size": m, "level": l, "rows": [[CD...], ...]}

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json cd_to_json(const CDElement& x);
/// expected_level < 0 means: take the level from the payload (shorthand
/// forms then require an explicit object). Throws FormatError on schema
/// violations and level disagreements.
CDElement cd_from_json(const Json& j, int expected_level = -1);

Json cd_vector_to_json(std::span<const CDElement> v);
std::vector<CDElement> cd_vector_from_json(const Json& j, int expected_level);

Json h_to_json(const BiadditiveMap& w, const HeisenbergElement& u);
std::pair<BiadditiveMap, HeisenbergElement> h_from_json(const Json& j);

Json ut_to_json(const UniTriMatrix& m);
UniTriMatrix ut_from_json(const Json& j);

}  // namespace relmin
