// relmin: exact experiments with Cayley-Dickson algebras, generalized
// Heisenberg groups, and unitriangular matrix groups.
//
// Exit codes: 0 all checks passed, 1 a checked property failed or a
// precondition was violated, 2 malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "relmin/absolute_value.hpp"
#include "relmin/json_io.hpp"
#include "relmin/verify.hpp"
#include "relmin/witness.hpp"

namespace {

using relmin::Json;

struct OutputOptions {
    std::string json_out;
};

void emit(const Json& payload, const OutputOptions& out) {
    const std::string text = payload.dump(2) + "\n";
    std::cout << text;
    if (!out.json_out.empty()) {
        std::ofstream file(out.json_out, std::ios::binary);
        if (!file) throw relmin::FormatError("cannot open output file '" + out.json_out + "'");
        file << text;
    }
}

Json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw relmin::FormatError("cannot open input file '" + path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw relmin::FormatError(std::string("input is not valid JSON: ") + e.what());
    }
}

// Coordinates travel as plain rational strings over the base field and as
// full element objects above it.
Json coordinate_to_json(const relmin::CDElement& c) {
    if (c.level() == 0) return c.coeff(0).str();
    return relmin::cd_to_json(c);
}

Json coordinates_to_json(std::span<const relmin::CDElement> v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(coordinate_to_json(c));
    return out;
}

int run_witness(const std::string& kind, const Json& args, const OutputOptions& out) {
    if (kind == "break_compat") {
        if (!args.is_object()) throw relmin::FormatError("break_compat expects an object");
        const int level = args.contains("level") ? args.at("level").get<int>() : 0;
        if (!args.contains("x") || !args.at("x").is_array())
            throw relmin::FormatError("break_compat needs an array field 'x'");
        const auto xbar = relmin::cd_vector_from_json(args.at("x"), level);
        const auto n = args.contains("n") ? args.at("n").get<std::size_t>() : xbar.size();
        relmin::PairingOrder order = relmin::PairingOrder::x_then_f;
        if (args.contains("pairing") && args.at("pairing").get<std::string>() == "fx")
            order = relmin::PairingOrder::f_then_x;
        const relmin::Rational eps0 = relmin::rational_from_json(args.at("eps0"));

        const relmin::BiadditiveMap w(level, n, order);
        const auto abar = relmin::break_compatibility(w, xbar, eps0);

        relmin::Rational max_abs_sq(0);
        for (const auto& c : abar) {
            const relmin::Rational nm = relmin::cd_norm_form(c);
            if (max_abs_sq < nm) max_abs_sq = nm;
        }
        emit(Json{{"a", coordinates_to_json(abar)},
                  {"w_value", coordinate_to_json(w_eval(w, xbar, abar))},
                  {"max_abs_sq", max_abs_sq.str()}},
             out);
        return 0;
    }
    if (kind == "escalate") {
        if (!args.is_object()) throw relmin::FormatError("escalate expects an object");
        const relmin::Rational half(1, 2);
        const relmin::Rational d1 =
            args.contains("delta1") ? relmin::rational_from_json(args.at("delta1")) : half;
        const relmin::Rational d2 =
            args.contains("delta2") ? relmin::rational_from_json(args.at("delta2")) : half;
        const relmin::Int n0(args.at("n0").get<long>());
        const auto m = args.at("m").get<unsigned>();
        const relmin::Rational r = relmin::rational_from_json(args.at("r"));

        const relmin::KroneckerOracle oracle(d1, d2);
        const relmin::EscalationRequest req(n0, m, r);
        const relmin::Rational x = relmin::escalate_unbounded(oracle, oracle.initial(), req);

        relmin::Rational required = r * r;
        for (unsigned k = 0; k < m; ++k) required *= req.c_squared;
        emit(Json{{"x", x.str()},
                  {"norm_sq", (x * x).str()},
                  {"required_norm_sq", required.str()},
                  {"neighborhood", Json{{"delta1", d1.str()}, {"delta2", d2.str()}}}},
             out);
        return 0;
    }
    throw relmin::FormatError("unknown witness kind '" + kind + "' (break_compat, escalate)");
}

int run_compute(const std::string& kind, const Json& args, const OutputOptions& out) {
    if (kind == "h_mul") {
        auto [w1, u1] = relmin::h_from_json(args.at("u1"));
        auto [w2, u2] = relmin::h_from_json(args.at("u2"));
        if (w1.scalar_level != w2.scalar_level || w1.dim != w2.dim || w1.order != w2.order)
            throw relmin::FormatError("operands live over different descriptors");
        emit(relmin::h_to_json(w1, relmin::h_mul(w1, u1, u2)), out);
        return 0;
    }
    if (kind == "ut_mul") {
        const auto lhs = relmin::ut_from_json(args.at("lhs"));
        const auto rhs = relmin::ut_from_json(args.at("rhs"));
        emit(relmin::ut_to_json(relmin::ut_mul(lhs, rhs)), out);
        return 0;
    }
    if (kind == "realize") {
        auto [w, u] = relmin::h_from_json(args);
        emit(relmin::ut_to_json(relmin::heisenberg_realization(w, u)), out);
        return 0;
    }
    if (kind == "reduce") {
        const auto matrix = relmin::ut_from_json(args.at("matrix"));
        const auto i = args.at("i").get<std::size_t>();
        emit(relmin::ut_to_json(relmin::delete_reduction(matrix, i)), out);
        return 0;
    }
    if (kind == "corner") {
        const auto n = args.at("n").get<std::size_t>();
        const auto i = args.at("i").get<std::size_t>();
        const auto j = args.at("j").get<std::size_t>();
        const auto a = relmin::cd_from_json(args.at("a"), 0);
        emit(relmin::ut_to_json(relmin::corner_elem(n, i, j, a)), out);
        return 0;
    }
    throw relmin::FormatError("unknown compute kind '" + kind +
                              "' (h_mul, ut_mul, realize, reduce, corner)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computational algebra: composition algebras, Heisenberg groups, unitriangular groups"};
    app.require_subcommand(1);

    std::string suite = "cd_axioms";
    relmin::VerifyConfig config;
    OutputOptions verify_out;
    auto* verify = app.add_subcommand("verify", "run a seeded property suite");
    verify->add_option("--suite", suite,
                       "cd_axioms | abs_axioms | heisenberg_axioms | matrix_realization | "
                       "reduction_iso | witnesses");
    verify->add_option("--samples", config.samples, "samples per property");
    verify->add_option("--seed", config.seed, "PRNG seed");
    verify->add_option("--level", config.level, "Cayley-Dickson level of the scalars");
    verify->add_option("--dim", config.dim, "coordinate dimension n");
    verify->add_option("--coeff-magnitude", config.coeff_magnitude, "max |numerator|, denominator of sampled coefficients");
    verify->add_option("--json-out", verify_out.json_out, "also write the report to this file");

    std::string witness_kind;
    std::string witness_input;
    OutputOptions witness_out;
    auto* witness = app.add_subcommand("witness", "construct a proof witness from JSON input");
    witness->add_option("kind", witness_kind, "break_compat | escalate")->required();
    witness->add_option("--input", witness_input, "JSON input file (default: stdin)");
    witness->add_option("--json-out", witness_out.json_out, "also write the result to this file");

    std::string compute_kind;
    std::string compute_input;
    OutputOptions compute_out;
    auto* compute = app.add_subcommand("compute", "evaluate a group/matrix operation from JSON input");
    compute->add_option("kind", compute_kind, "h_mul | ut_mul | realize | reduce | corner")->required();
    compute->add_option("--input", compute_input, "JSON input file (default: stdin)");
    compute->add_option("--json-out", compute_out.json_out, "also write the result to this file");

    int search_level = 4;
    int search_bound = 1;
    OutputOptions search_out;
    auto* search = app.add_subcommand("search", "search for a norm-multiplicativity violation");
    search->add_option("--level", search_level, "Cayley-Dickson level");
    search->add_option("--bound", search_bound, "coefficient bound of the candidate set");
    search->add_option("--json-out", search_out.json_out, "also write the result to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            config.suite = relmin::suite_from_name(suite);
            const relmin::SuiteReport report = relmin::run_verify(config);
            emit(relmin::report_to_json(report), verify_out);
            return report.exit_code();
        }
        if (witness->parsed()) return run_witness(witness_kind, read_input(witness_input), witness_out);
        if (compute->parsed()) return run_compute(compute_kind, read_input(compute_input), compute_out);
        if (search->parsed()) {
            const auto violation = relmin::find_composition_violation(search_level, search_bound);
            Json payload{{"level", search_level}, {"bound", search_bound}, {"found", violation.has_value()}};
            if (violation) {
                const auto& [x, y] = *violation;
                payload["x"] = relmin::cd_to_json(x);
                payload["y"] = relmin::cd_to_json(y);
                payload["norm_of_product"] = relmin::cd_norm_form(relmin::cd_mul(x, y)).str();
                payload["norm_product"] = (relmin::cd_norm_form(x) * relmin::cd_norm_form(y)).str();
            }
            emit(payload, search_out);
            return 0;
        }
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const relmin::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const relmin::NoEscapingCoordinateError& e) {
        std::cout << Json{{"error", "no escaping coordinate"},
                          {"message", e.what()},
                          {"max_abs_sq", e.max_abs_sq.str()}}
                         .dump(2)
                  << "\n";
        return 1;
    } catch (const relmin::ContractError& e) {
        std::cout << Json{{"error", "contract violation"}, {"message", e.what()}, {"offending", e.offending}}
                         .dump(2)
                  << "\n";
        return 1;
    } catch (const relmin::Error& e) {
        std::cout << Json{{"error", "precondition"}, {"message", e.what()}}.dump(2) << "\n";
        return 1;
    }
    return 2;
}
