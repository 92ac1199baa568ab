#include "relmin/json_io.hpp"

#include <string>

namespace relmin {

namespace {

int level_for_length(std::size_t len) {
    for (int level = 0; level <= kMaxCayleyDicksonLevel; ++level)
        if ((std::size_t{1} << level) == len) return level;
    throw FormatError("coefficient list length " + std::to_string(len) + " is not a power of two ≤ 16");
}

std::size_t get_size(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw FormatError(std::string("expected unsigned field '") + key + "'");
    return j[key].get<std::size_t>();
}

int get_level(const Json& j) {
    if (!j.contains("level") || !j["level"].is_number_integer())
        throw FormatError("expected integer field 'level'");
    return j["level"].get<int>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw FormatError("rationals are encoded as strings, got " + std::string(j.type_name()));
}

Json cd_to_json(const CDElement& x) {
    Json coeffs = Json::array();
    for (const Rational& c : x.coeffs()) coeffs.push_back(c.str());
    return Json{{"level", x.level()}, {"coeffs", std::move(coeffs)}};
}

CDElement cd_from_json(const Json& j, int expected_level) {
    if (j.is_string() || j.is_number_integer()) {
        if (expected_level < 0)
            throw FormatError("scalar shorthand needs a level from context");
        return CDElement::scalar(expected_level, rational_from_json(j));
    }
    const Json* coeffs = nullptr;
    int level = expected_level;
    if (j.is_array()) {
        coeffs = &j;
        if (level < 0) level = level_for_length(j.size());
    } else if (j.is_object()) {
        level = get_level(j);
        if (!j.contains("coeffs") || !j["coeffs"].is_array())
            throw FormatError("expected array field 'coeffs'");
        coeffs = &j["coeffs"];
    } else {
        throw FormatError("cannot read a Cayley-Dickson element from " + std::string(j.type_name()));
    }
    if (expected_level >= 0 && level != expected_level)
        throw FormatError("element level " + std::to_string(level) + " does not match expected " +
                          std::to_string(expected_level));
    std::vector<Rational> out;
    out.reserve(coeffs->size());
    for (const Json& c : *coeffs) out.push_back(rational_from_json(c));
    try {
        return CDElement(level, std::move(out));
    } catch (const ShapeError& e) {
        throw FormatError(e.what());
    }
}

Json cd_vector_to_json(std::span<const CDElement> v) {
    Json out = Json::array();
    for (const CDElement& c : v) out.push_back(cd_to_json(c));
    return out;
}

std::vector<CDElement> cd_vector_from_json(const Json& j, int expected_level) {
    if (!j.is_array()) throw FormatError("expected an array of elements");
    std::vector<CDElement> out;
    out.reserve(j.size());
    for (const Json& c : j) out.push_back(cd_from_json(c, expected_level));
    return out;
}

Json h_to_json(const BiadditiveMap& w, const HeisenbergElement& u) {
    return Json{{"a", cd_to_json(u.a)},
                {"x", cd_vector_to_json(u.x)},
                {"f", cd_vector_to_json(u.f)},
                {"level", w.scalar_level},
                {"n", w.dim},
                {"pairing", w.order == PairingOrder::x_then_f ? "xf" : "fx"}};
}

std::pair<BiadditiveMap, HeisenbergElement> h_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("expected a Heisenberg element object");
    const int level = get_level(j);
    const std::size_t n = get_size(j, "n");
    PairingOrder order = PairingOrder::x_then_f;
    if (j.contains("pairing")) {
        const std::string p = j["pairing"].get<std::string>();
        if (p == "xf") order = PairingOrder::x_then_f;
        else if (p == "fx") order = PairingOrder::f_then_x;
        else throw FormatError("pairing must be \"xf\" or \"fx\"");
    }
    try {
        BiadditiveMap w(level, n, order);
        HeisenbergElement u{j.contains("a") ? cd_from_json(j.at("a"), level) : CDElement(level),
                            cd_vector_from_json(j.at("x"), level),
                            cd_vector_from_json(j.at("f"), level)};
        validate_element(w, u);
        return {w, std::move(u)};
    } catch (const Json::exception& e) {
        throw FormatError(std::string("bad Heisenberg element: ") + e.what());
    } catch (const ShapeError& e) {
        throw FormatError(e.what());
    }
}

Json ut_to_json(const UniTriMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(cd_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"size", m.size()}, {"level", m.level()}, {"rows", std::move(rows)}};
}

UniTriMatrix ut_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("expected a matrix object");
    const std::size_t size = get_size(j, "size");
    const int level = get_level(j);
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != size)
        throw FormatError("expected 'rows' with exactly 'size' rows");
    std::vector<CDElement> entries;
    entries.reserve(size * size);
    for (const Json& row : j["rows"]) {
        if (!row.is_array() || row.size() != size)
            throw FormatError("matrix rows must have exactly 'size' entries");
        for (const Json& e : row) entries.push_back(cd_from_json(e, level));
    }
    try {
        return UniTriMatrix(size, level, std::move(entries));
    } catch (const ShapeError& e) {
        throw FormatError(e.what());
    }
}

Json report_to_json(const SuiteReport& report) {
    Json properties = Json::array();
    for (const PropertyResult& p : report.properties) {
        properties.push_back(Json{{"name", p.name},
                                  {"checked", p.checked},
                                  {"failed", p.failed},
                                  {"counterexample", p.counterexample ? *p.counterexample : Json(nullptr)}});
    }
    return Json{{"suite", report.suite}, {"properties", std::move(properties)}, {"exit", report.exit_code()}};
}

}  // namespace relmin
