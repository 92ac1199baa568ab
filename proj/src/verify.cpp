#include "relmin/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "relmin/absolute_value.hpp"
#include "relmin/cayley_dickson.hpp"
#include "relmin/heisenberg.hpp"
#include "relmin/json_io.hpp"
#include "relmin/sampling.hpp"
#include "relmin/unitriangular.hpp"
#include "relmin/witness.hpp"

namespace relmin {

namespace {

const char* const kSuiteNames[] = {"cd_axioms",          "abs_axioms",    "heisenberg_axioms",
                                   "matrix_realization", "reduction_iso", "witnesses"};

// Per-sample check: nullopt means pass, a json value is the counterexample.
using SampleCheck = std::function<std::optional<Json>(SplitMix64&)>;

class SuiteBuilder {
public:
    SuiteBuilder(std::string suite, const VerifyConfig& config)
        : report_{std::move(suite), {}}, config_(config) {}

    void property(const std::string& name, const SampleCheck& check, long samples = 0) {
        if (samples == 0) samples = config_.samples;
        PropertyResult result;
        result.name = name;
        for (long idx = 0; idx < samples; ++idx) {
            SplitMix64 rng = sample_rng(config_.seed, next_stream_, static_cast<std::uint64_t>(idx));
            ++result.checked;
            if (auto witness = check(rng)) {
                ++result.failed;
                if (!result.counterexample) {
                    (*witness)["sample"] = idx;
                    result.counterexample = std::move(*witness);
                }
            }
        }
        ++next_stream_;
        report_.properties.push_back(std::move(result));
    }

    /// A search property: passes when `witness_found` succeeds for at least
    /// one sample (used for the designed failure exhibits).
    void exists(const std::string& name, const SampleCheck& witness_found, long samples = 0) {
        if (samples == 0) samples = config_.samples;
        PropertyResult result;
        result.name = name;
        result.checked = samples;
        bool found = false;
        for (long idx = 0; idx < samples && !found; ++idx) {
            SplitMix64 rng = sample_rng(config_.seed, next_stream_, static_cast<std::uint64_t>(idx));
            found = witness_found(rng).has_value();
        }
        if (!found) {
            result.failed = 1;
            result.counterexample = Json{{"note", "no witness found within the sample budget"}};
        }
        ++next_stream_;
        report_.properties.push_back(std::move(result));
    }

    void merge(const SuiteReport& sub, const std::string& prefix) {
        for (PropertyResult p : sub.properties) {
            p.name = prefix + p.name;
            report_.properties.push_back(std::move(p));
        }
    }

    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
    VerifyConfig config_;
    std::uint64_t next_stream_ = 0;
};

const char* pairing_tag(PairingOrder order) { return order == PairingOrder::x_then_f ? "[xf]" : "[fx]"; }

HeisenbergElement sample_in_family(SplitMix64& rng, const BiadditiveMap& w, SubgroupFamily family,
                                   long magnitude) {
    HeisenbergElement u = sample_heisenberg(rng, w, magnitude);
    const CDElement zero_scalar(w.scalar_level);
    const std::vector<CDElement> zero_vec(w.dim, zero_scalar);
    switch (family) {
        case SubgroupFamily::center_A: u.x = zero_vec; u.f = zero_vec; break;
        case SubgroupFamily::A_cross_E: u.f = zero_vec; break;
        case SubgroupFamily::A_cross_F: u.x = zero_vec; break;
        case SubgroupFamily::E_only: u.a = zero_scalar; u.f = zero_vec; break;
        case SubgroupFamily::F_only: u.a = zero_scalar; u.x = zero_vec; break;
        case SubgroupFamily::E_cross_F: u.a = zero_scalar; break;
    }
    return u;
}

std::pair<std::size_t, std::size_t> sample_admissible_corner(SplitMix64& rng, std::size_t n) {
    const std::size_t m = n + 2;
    for (;;) {
        const auto i = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(m - 1)));
        const auto j = static_cast<std::size_t>(uniform_int(rng, static_cast<long>(i + 1), static_cast<long>(m)));
        if (!(i == 1 && j == m)) return {i, j};
    }
}

// A k-fold sum of members of W, assembled as a random composition of k over
// a few distinct members so huge k stays cheap.
Rational sample_sumset_member(SplitMix64& rng, const NeighborhoodOracle& oracle,
                              const NeighborhoodOracle::Id& w_id, unsigned long k) {
    const NeighborhoodParams params = oracle.describe(w_id);
    std::vector<Rational> members;
    members.push_back(Rational(0));
    const Rational bound = std::min(params.delta1, params.delta2 / Rational(2));
    for (int t = 0; t < 4; ++t) {
        const Rational u = bound * Rational(uniform_int(rng, -15, 15), 32);
        if (oracle.contains(w_id, u)) members.push_back(u);
    }
    members.push_back(oracle.escape(w_id, Rational(uniform_int(rng, 1, 50))));

    Rational sum(0);
    unsigned long remaining = k;
    for (std::size_t t = 0; t + 1 < members.size(); ++t) {
        const unsigned long count = uniform_below(rng, remaining + 1);
        sum += Rational(Int(count)) * members[t];
        remaining -= count;
    }
    sum += Rational(Int(remaining)) * members.back();
    return sum;
}

// ---------------------------------------------------------------- cd_axioms

SuiteReport run_cd_axioms(const VerifyConfig& config) {
    SuiteBuilder b(std::string(suite_name(Suite::cd_axioms)), config);
    const int level = config.level;
    const long mag = config.coeff_magnitude;

    const auto pair_witness = [](const CDElement& x, const CDElement& y) {
        return Json{{"x", cd_to_json(x)}, {"y", cd_to_json(y)}};
    };

    b.property("conjugation_involution", [&](SplitMix64& rng) -> std::optional<Json> {
        const CDElement x = sample_cd(rng, level, mag);
        if (cd_conjugate(cd_conjugate(x)) == x) return std::nullopt;
        return Json{{"x", cd_to_json(x)}};
    });

    b.property("conjugation_anti_automorphism", [&](SplitMix64& rng) -> std::optional<Json> {
        const CDElement x = sample_cd(rng, level, mag);
        const CDElement y = sample_cd(rng, level, mag);
        if (cd_conjugate(cd_mul(x, y)) == cd_mul(cd_conjugate(y), cd_conjugate(x))) return std::nullopt;
        return pair_witness(x, y);
    });

    b.property("quadratic_identity", [&](SplitMix64& rng) -> std::optional<Json> {
        const CDElement x = sample_cd(rng, level, mag);
        const CDElement trace = x + cd_conjugate(x);
        bool scalar_trace = true;
        for (std::size_t k = 1; k < trace.dim(); ++k)
            if (!trace.coeff(k).is_zero()) scalar_trace = false;
        if (scalar_trace && cd_mul(x, cd_conjugate(x)) == CDElement::scalar(level, cd_norm_form(x)))
            return std::nullopt;
        return Json{{"x", cd_to_json(x)}};
    });

    b.property("composition_identity", [&](SplitMix64& rng) -> std::optional<Json> {
        const CDElement x = sample_cd(rng, level, mag);
        const CDElement y = sample_cd(rng, level, mag);
        if (cd_norm_form(cd_mul(x, y)) == cd_norm_form(x) * cd_norm_form(y)) return std::nullopt;
        return pair_witness(x, y);
    });

    b.property("alternativity", [&](SplitMix64& rng) -> std::optional<Json> {
        const CDElement x = sample_cd(rng, level, mag);
        const CDElement y = sample_cd(rng, level, mag);
        if (cd_mul(x, cd_mul(x, y)) == cd_mul(cd_mul(x, x), y) &&
            cd_mul(cd_mul(y, x), x) == cd_mul(y, cd_mul(x, x)))
            return std::nullopt;
        return pair_witness(x, y);
    });

    if (level <= 3) {
        b.property("two_sided_inverse", [&](SplitMix64& rng) -> std::optional<Json> {
            const CDElement x = sample_cd_nonzero(rng, level, mag);
            const CDElement inv = cd_invert(x);
            if (cd_mul(x, inv).is_one() && cd_mul(inv, x).is_one()) return std::nullopt;
            return Json{{"x", cd_to_json(x)}};
        });
    }

    if (level <= 2) {
        b.property("associativity", [&](SplitMix64& rng) -> std::optional<Json> {
            const CDElement x = sample_cd(rng, level, mag);
            const CDElement y = sample_cd(rng, level, mag);
            const CDElement z = sample_cd(rng, level, mag);
            if (cd_associator(x, y, z).is_zero()) return std::nullopt;
            return Json{{"x", cd_to_json(x)}, {"y", cd_to_json(y)}, {"z", cd_to_json(z)}};
        });
    }

    return b.take();
}

// --------------------------------------------------------------- abs_axioms

SuiteReport run_abs_axioms(const VerifyConfig& config) {
    SuiteBuilder b(std::string(suite_name(Suite::abs_axioms)), config);
    const long mag = config.coeff_magnitude;

    {
        const AbsValueDescriptor euclid = AbsValueDescriptor::euclidean(config.level);
        std::vector<std::pair<CDElement, CDElement>> pairs;
        pairs.reserve(static_cast<std::size_t>(config.samples));
        for (long idx = 0; idx < config.samples; ++idx) {
            SplitMix64 rng = sample_rng(config.seed, 1000, static_cast<std::uint64_t>(idx));
            pairs.emplace_back(sample_cd(rng, config.level, mag), sample_cd(rng, config.level, mag));
        }
        b.merge(verify_axioms(euclid, pairs), "euclidean_");
    }

    for (const long p : {2L, 3L, 5L}) {
        const AbsValueDescriptor desc = AbsValueDescriptor::padic(Int(p));
        std::vector<std::pair<Rational, Rational>> pairs;
        pairs.reserve(static_cast<std::size_t>(config.samples));
        for (long idx = 0; idx < config.samples; ++idx) {
            SplitMix64 rng = sample_rng(config.seed, 1000 + static_cast<std::uint64_t>(p),
                                        static_cast<std::uint64_t>(idx));
            pairs.emplace_back(sample_rational(rng, mag), sample_rational(rng, mag));
        }
        b.merge(verify_axioms(desc, pairs), "padic[" + std::to_string(p) + "]_");
    }

    b.property(
        "archimedean_witness_euclidean",
        [&](SplitMix64&) -> std::optional<Json> {
            const auto witness = archimedean_witness(AbsValueDescriptor::euclidean(config.level), Int(10));
            if (witness && *witness == 2) return std::nullopt;
            return Json{{"witness", witness ? Json(witness->get_str()) : Json(nullptr)}};
        },
        1);

    b.property(
        "padic_no_archimedean_witness",
        [&](SplitMix64&) -> std::optional<Json> {
            for (const long p : {2L, 3L, 5L}) {
                const auto witness = archimedean_witness(AbsValueDescriptor::padic(Int(p)), Int(10000));
                if (witness) return Json{{"p", p}, {"witness", witness->get_str()}};
            }
            return std::nullopt;
        },
        1);

    return b.take();
}

// -------------------------------------------------------- heisenberg_axioms

SuiteReport run_heisenberg_axioms(const VerifyConfig& config) {
    SuiteBuilder b(std::string(suite_name(Suite::heisenberg_axioms)), config);
    const long mag = config.coeff_magnitude;

    for (const PairingOrder order : {PairingOrder::x_then_f, PairingOrder::f_then_x}) {
        const BiadditiveMap w(config.level, config.dim, order);
        const std::string tag = pairing_tag(order);
        const HeisenbergElement e = h_identity(w);

        b.property("associativity" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            const HeisenbergElement u1 = sample_heisenberg(rng, w, mag);
            const HeisenbergElement u2 = sample_heisenberg(rng, w, mag);
            const HeisenbergElement u3 = sample_heisenberg(rng, w, mag);
            if (h_mul(w, h_mul(w, u1, u2), u3) == h_mul(w, u1, h_mul(w, u2, u3))) return std::nullopt;
            return Json{{"u1", h_to_json(w, u1)}, {"u2", h_to_json(w, u2)}, {"u3", h_to_json(w, u3)}};
        });

        b.property("identity" + tag, [&, w, e](SplitMix64& rng) -> std::optional<Json> {
            const HeisenbergElement u = sample_heisenberg(rng, w, mag);
            if (h_mul(w, u, e) == u && h_mul(w, e, u) == u) return std::nullopt;
            return Json{{"u", h_to_json(w, u)}};
        });

        b.property("inverse" + tag, [&, w, e](SplitMix64& rng) -> std::optional<Json> {
            const HeisenbergElement u = sample_heisenberg(rng, w, mag);
            const HeisenbergElement inv = h_inverse(w, u);
            if (h_mul(w, u, inv) == e && h_mul(w, inv, u) == e) return std::nullopt;
            return Json{{"u", h_to_json(w, u)}};
        });

        b.property("commutator_closed_form" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            const HeisenbergElement u1 = sample_heisenberg(rng, w, mag);
            const HeisenbergElement u2 = sample_heisenberg(rng, w, mag);
            const HeisenbergElement chain = h_commutator(w, u1, u2);
            HeisenbergElement closed = h_identity(w);
            closed.a = w_eval(w, u2.x, u1.f) - w_eval(w, u1.x, u2.f);
            if (chain == closed) return std::nullopt;
            return Json{{"u1", h_to_json(w, u1)}, {"u2", h_to_json(w, u2)}, {"chain", h_to_json(w, chain)}};
        });

        b.property("commutator_central" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            const HeisenbergElement u1 = sample_heisenberg(rng, w, mag);
            const HeisenbergElement u2 = sample_heisenberg(rng, w, mag);
            if (subgroup_membership(h_commutator(w, u1, u2), SubgroupFamily::center_A)) return std::nullopt;
            return Json{{"u1", h_to_json(w, u1)}, {"u2", h_to_json(w, u2)}};
        });

        b.property("separatedness_witness" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            const auto x0 = sample_cd_vector_nonzero(rng, config.level, config.dim, mag);
            const auto f0 = sample_cd_vector_nonzero(rng, config.level, config.dim, mag);
            const auto [x, f] = separatedness_witness(w, x0, f0);
            if (!w_eval(w, x0, f).is_zero() && !w_eval(w, x, f0).is_zero()) return std::nullopt;
            return Json{{"x0", cd_vector_to_json(x0)}, {"f0", cd_vector_to_json(f0)}};
        });

        // The five genuine subgroups are closed under product and inverse.
        const struct {
            SubgroupFamily family;
            const char* name;
        } families[] = {{SubgroupFamily::center_A, "center_A"},
                        {SubgroupFamily::A_cross_E, "A_cross_E"},
                        {SubgroupFamily::A_cross_F, "A_cross_F"},
                        {SubgroupFamily::E_only, "E_only"},
                        {SubgroupFamily::F_only, "F_only"}};
        for (const auto& fam : families) {
            b.property(std::string("closure_") + fam.name + tag,
                       [&, w, fam](SplitMix64& rng) -> std::optional<Json> {
                           const HeisenbergElement u1 = sample_in_family(rng, w, fam.family, mag);
                           const HeisenbergElement u2 = sample_in_family(rng, w, fam.family, mag);
                           if (subgroup_membership(h_mul(w, u1, u2), fam.family) &&
                               subgroup_membership(h_inverse(w, u1), fam.family))
                               return std::nullopt;
                           return Json{{"u1", h_to_json(w, u1)}, {"u2", h_to_json(w, u2)}};
                       });
        }

        // E×F is only a subset: some product of two members regrows the
        // scalar slot. Passing means a concrete escaping product was found.
        b.exists("e_cross_f_product_escapes" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            const HeisenbergElement u1 = sample_in_family(rng, w, SubgroupFamily::E_cross_F, mag);
            const HeisenbergElement u2 = sample_in_family(rng, w, SubgroupFamily::E_cross_F, mag);
            const HeisenbergElement prod = h_mul(w, u1, u2);
            if (!subgroup_membership(prod, SubgroupFamily::E_cross_F))
                return Json{{"u1", h_to_json(w, u1)}, {"u2", h_to_json(w, u2)}};
            return std::nullopt;
        });
    }

    return b.take();
}

// ------------------------------------------------------- matrix_realization

SuiteReport run_matrix_realization(const VerifyConfig& config) {
    SuiteBuilder b(std::string(suite_name(Suite::matrix_realization)), config);
    const long mag = config.coeff_magnitude;

    std::vector<PairingOrder> valid_orders;
    if (config.level <= 1) {
        valid_orders = {PairingOrder::x_then_f, PairingOrder::f_then_x};
    } else {
        valid_orders = {PairingOrder::f_then_x};
    }

    for (const PairingOrder order : valid_orders) {
        const BiadditiveMap w(config.level, config.dim, order);
        const std::string tag = pairing_tag(order);

        b.property("homomorphism" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            const HeisenbergElement u1 = sample_heisenberg(rng, w, mag);
            const HeisenbergElement u2 = sample_heisenberg(rng, w, mag);
            const UniTriMatrix lhs = heisenberg_realization(w, h_mul(w, u1, u2));
            const UniTriMatrix rhs = ut_mul(heisenberg_realization(w, u1), heisenberg_realization(w, u2));
            if (lhs == rhs) return std::nullopt;
            return Json{{"u1", h_to_json(w, u1)}, {"u2", h_to_json(w, u2)}};
        });

        b.property("injectivity" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            const HeisenbergElement u1 = sample_heisenberg(rng, w, mag);
            const HeisenbergElement u2 = sample_heisenberg(rng, w, mag);
            if (u1 == u2) return std::nullopt;  // vacuous draw
            if (!(heisenberg_realization(w, u1) == heisenberg_realization(w, u2))) return std::nullopt;
            return Json{{"u1", h_to_json(w, u1)}, {"u2", h_to_json(w, u2)}};
        });

        b.property("e_only_last_column" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            HeisenbergElement u = h_identity(w);
            u.x = sample_cd_vector(rng, config.level, config.dim, mag);
            const UniTriMatrix m = heisenberg_realization(w, u);
            for (std::size_t r = 0; r < m.size(); ++r)
                for (std::size_t c = r + 1; c + 1 < m.size(); ++c)
                    if (!m.at(r, c).is_zero()) return Json{{"u", h_to_json(w, u)}};
            return std::nullopt;
        });

        b.property("f_only_first_row" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            HeisenbergElement u = h_identity(w);
            u.f = sample_cd_vector(rng, config.level, config.dim, mag);
            const UniTriMatrix m = heisenberg_realization(w, u);
            for (std::size_t r = 1; r < m.size(); ++r)
                for (std::size_t c = r + 1; c < m.size(); ++c)
                    if (!m.at(r, c).is_zero()) return Json{{"u", h_to_json(w, u)}};
            return std::nullopt;
        });
    }

    if (config.level >= 2) {
        // Under the wrong pairing the matrix picture stops being a
        // homomorphism; passing means a concrete breaking pair was found.
        const BiadditiveMap wrong(config.level, config.dim, PairingOrder::x_then_f);
        b.exists("wrong_pairing_counterexample[xf]", [&, wrong](SplitMix64& rng) -> std::optional<Json> {
            const HeisenbergElement u1 = sample_heisenberg(rng, wrong, mag);
            const HeisenbergElement u2 = sample_heisenberg(rng, wrong, mag);
            const UniTriMatrix lhs = heisenberg_matrix_layout(wrong, h_mul(wrong, u1, u2));
            const UniTriMatrix rhs =
                ut_mul(heisenberg_matrix_layout(wrong, u1), heisenberg_matrix_layout(wrong, u2));
            if (!(lhs == rhs)) return Json{{"u1", h_to_json(wrong, u1)}, {"u2", h_to_json(wrong, u2)}};
            return std::nullopt;
        });
    }

    return b.take();
}

// ------------------------------------------------------------ reduction_iso

SuiteReport run_reduction_iso(const VerifyConfig& config) {
    SuiteBuilder b(std::string(suite_name(Suite::reduction_iso)), config);
    const long mag = config.coeff_magnitude;
    const std::size_t n = config.dim;
    const std::size_t m = n + 2;

    b.property("ut_inverse_two_sided", [&](SplitMix64& rng) -> std::optional<Json> {
        const UniTriMatrix mat = sample_unitriangular(rng, m, 0, mag);
        const UniTriMatrix inv = ut_inverse(mat);
        const UniTriMatrix id = UniTriMatrix::identity(m, 0);
        if (ut_mul(mat, inv) == id && ut_mul(inv, mat) == id) return std::nullopt;
        return Json{{"matrix", ut_to_json(mat)}};
    });

    b.property("corner_closure_abelian", [&](SplitMix64& rng) -> std::optional<Json> {
        const auto [i, j] = sample_admissible_corner(rng, n);
        const CDElement a = CDElement::scalar(0, sample_rational(rng, mag));
        const CDElement c = CDElement::scalar(0, sample_rational(rng, mag));
        const UniTriMatrix ca = corner_elem(n, i, j, a);
        const UniTriMatrix cc = corner_elem(n, i, j, c);
        const bool ok = ut_mul(ca, cc) == corner_elem(n, i, j, a + c) && ut_mul(ca, cc) == ut_mul(cc, ca) &&
                        ut_inverse(ca) == corner_elem(n, i, j, -a);
        if (ok) return std::nullopt;
        return Json{{"i", i}, {"j", j}, {"a", cd_to_json(a)}, {"b", cd_to_json(c)}};
    });

    b.property(
        "corner_excluded_position",
        [&](SplitMix64& rng) -> std::optional<Json> {
            const CDElement a = CDElement::scalar(0, sample_nonzero_rational(rng, mag));
            try {
                corner_elem(n, 1, m, a);
            } catch (const PreconditionError&) {
                return std::nullopt;
            }
            return Json{{"note", "corner (1, n+2) was accepted"}};
        },
        1);

    b.property("tilde_reduction_homomorphism", [&](SplitMix64& rng) -> std::optional<Json> {
        const auto i = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long>(m - 1)));
        const UniTriMatrix p = sample_tilde(rng, m, 0, mag, i);
        const UniTriMatrix q = sample_tilde(rng, m, 0, mag, i);
        if (!tilde_membership(p, i) || !tilde_membership(q, i))
            return Json{{"note", "sampled matrix left the tilde subgroup"}};
        if (delete_reduction(ut_mul(p, q), i) == ut_mul(delete_reduction(p, i), delete_reduction(q, i)))
            return std::nullopt;
        return Json{{"i", i}, {"p", ut_to_json(p)}, {"q", ut_to_json(q)}};
    });

    if (n >= 2) {
        b.property("corner_mapping", [&](SplitMix64& rng) -> std::optional<Json> {
            // Interior corners 1 < i < j < n+2 reduce to first-row corners
            // of the smaller group at (1, j+1−i).
            const auto i = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long>(n)));
            const auto j = static_cast<std::size_t>(
                uniform_int(rng, static_cast<long>(i + 1), static_cast<long>(m - 1)));
            const CDElement a = CDElement::scalar(0, sample_rational(rng, mag));
            const UniTriMatrix reduced = delete_reduction(corner_elem(n, i, j, a), i);
            const UniTriMatrix expected = corner_elem(n + 1 - i, 1, j + 1 - i, a);
            if (reduced == expected) return std::nullopt;
            return Json{{"i", i}, {"j", j}, {"a", cd_to_json(a)}};
        });
    }

    b.property("reduction_bijectivity", [&](SplitMix64& rng) -> std::optional<Json> {
        // Surjectivity onto sampled targets via the padded preimage.
        const auto i = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long>(m - 1)));
        const std::size_t small = m - (i - 1);
        const UniTriMatrix target = sample_unitriangular(rng, small, 0, mag);
        UniTriMatrix padded = UniTriMatrix::identity(m, 0);
        for (std::size_t r = 0; r < small; ++r)
            for (std::size_t c = r + 1; c < small; ++c) padded.set_upper(r + (i - 1), c + (i - 1), target.at(r, c));
        if (!tilde_membership(padded, i)) return Json{{"note", "padding left the tilde subgroup"}};
        if (delete_reduction(padded, i) == target) return std::nullopt;
        return Json{{"i", i}, {"target", ut_to_json(target)}};
    });

    return b.take();
}

// ---------------------------------------------------------------- witnesses

SuiteReport run_witnesses(const VerifyConfig& config) {
    SuiteBuilder b(std::string(suite_name(Suite::witnesses)), config);
    const long mag = config.coeff_magnitude;

    for (const PairingOrder order : {PairingOrder::x_then_f, PairingOrder::f_then_x}) {
        const BiadditiveMap w(config.level, config.dim, order);
        const std::string tag = pairing_tag(order);

        b.property("break_compatibility" + tag, [&, w](SplitMix64& rng) -> std::optional<Json> {
            const long e = uniform_int(rng, 2, mag + 1);
            const Rational eps0(1, e);
            auto xbar = sample_cd_vector(rng, config.level, config.dim, mag);
            const auto hot = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(config.dim) - 1));
            const auto axis = static_cast<std::size_t>(uniform_below(rng, std::uint64_t{1} << config.level));
            xbar[hot] = Rational(e + 1) * CDElement::basis(config.level, axis);

            const auto abar = break_compatibility(w, xbar, eps0);
            Rational max_norm(0);
            for (const CDElement& c : abar) {
                const Rational nm = cd_norm_form(c);
                if (max_norm < nm) max_norm = nm;
            }
            if (max_norm < eps0 * eps0 && w_eval(w, xbar, abar).is_one()) return std::nullopt;
            return Json{{"x", cd_vector_to_json(xbar)}, {"eps0", eps0.str()}};
        });
    }

    b.property("break_compatibility_precondition", [&](SplitMix64& rng) -> std::optional<Json> {
        const BiadditiveMap w(config.level, config.dim, PairingOrder::x_then_f);
        const auto xbar = sample_cd_vector(rng, config.level, config.dim, mag);
        const Rational eps0(Int(1), Int(20) * Int(mag) * Int(mag));  // threshold beyond any sampled norm
        try {
            break_compatibility(w, xbar, eps0);
        } catch (const NoEscapingCoordinateError&) {
            return std::nullopt;
        }
        return Json{{"x", cd_vector_to_json(xbar)}, {"eps0", eps0.str()}};
    });

    b.property("escalation_norm_bound", [&](SplitMix64& rng) -> std::optional<Json> {
        const KroneckerOracle oracle(Rational(1, 2), Rational(1, 2));
        const auto m = static_cast<unsigned>(uniform_below(rng, 21));
        const long r_num = uniform_int(rng, 1, mag);
        const EscalationRequest req(Int(2), m, Rational(r_num));
        const Rational x = escalate_unbounded(oracle, oracle.initial(), req);
        Rational required = req.r * req.r;
        for (unsigned k = 0; k < m; ++k) required *= req.c_squared;
        if (x * x >= required && oracle.contains(oracle.initial(), x)) return std::nullopt;
        return Json{{"m", m}, {"r", req.r.str()}, {"x", x.str()}};
    });

    b.property("shrink_sumset", [&](SplitMix64& rng) -> std::optional<Json> {
        const KroneckerOracle oracle(Rational(1, 2), Rational(1, 2));
        const auto m = static_cast<unsigned>(uniform_below(rng, 13));
        const unsigned long k = 1UL << m;
        const auto w_id = oracle.shrink(oracle.initial(), Int(static_cast<long>(k)));
        const Rational sum = sample_sumset_member(rng, oracle, w_id, k);
        if (oracle.contains(oracle.initial(), sum)) return std::nullopt;
        return Json{{"k", k}, {"sum", sum.str()}};
    });

    b.property("escape_unbounded", [&](SplitMix64& rng) -> std::optional<Json> {
        const KroneckerOracle oracle(Rational(1, 2), Rational(1, 2));
        const Rational r(uniform_int(rng, 1, 100000));
        const Rational x = oracle.escape(oracle.initial(), r);
        if (x >= r && oracle.contains(oracle.initial(), x)) return std::nullopt;
        return Json{{"r", r.str()}, {"x", x.str()}};
    });

    b.property("coset_projection_equivalence", [&](SplitMix64& rng) -> std::optional<Json> {
        const std::size_t len = config.dim;
        const auto j = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(len)));
        const auto g = sample_cd_vector(rng, config.level, len, mag);
        auto h = sample_cd_vector(rng, config.level, len, mag);
        h[j - 1] = CDElement(config.level);  // member of H = {v : v_j = 0}
        std::vector<CDElement> g_plus_h;
        for (std::size_t k = 0; k < len; ++k) g_plus_h.push_back(g[k] + h[k]);
        const bool ok = coset_projection_eq(g, g, j) && coset_projection_eq(g, g_plus_h, j) &&
                        coset_projection_eq(g_plus_h, g, j);
        if (ok) return std::nullopt;
        return Json{{"g", cd_vector_to_json(g)}, {"h", cd_vector_to_json(h)}, {"j", j}};
    });

    return b.take();
}

}  // namespace

Suite suite_from_name(std::string_view name) {
    for (std::size_t k = 0; k < std::size(kSuiteNames); ++k)
        if (name == kSuiteNames[k]) return static_cast<Suite>(k);
    throw FormatError("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite suite) { return kSuiteNames[static_cast<std::size_t>(suite)]; }

SuiteReport run_verify(const VerifyConfig& config) {
    if (config.samples < 1) throw FormatError("samples must be ≥ 1");
    if (config.coeff_magnitude < 1) throw FormatError("coeff_magnitude must be ≥ 1");
    if (config.dim < 1) throw FormatError("dim must be ≥ 1");
    const int max_level = (config.suite == Suite::cd_axioms || config.suite == Suite::abs_axioms) ? 4 : 3;
    if (config.level < 0 || config.level > max_level) throw FormatError("level out of range for this suite");
    if (config.suite == Suite::reduction_iso && config.level != 0)
        throw FormatError("reduction_iso runs over the base field (level 0)");

    switch (config.suite) {
        case Suite::cd_axioms: return run_cd_axioms(config);
        case Suite::abs_axioms: return run_abs_axioms(config);
        case Suite::heisenberg_axioms: return run_heisenberg_axioms(config);
        case Suite::matrix_realization: return run_matrix_realization(config);
        case Suite::reduction_iso: return run_reduction_iso(config);
        case Suite::witnesses: return run_witnesses(config);
    }
    throw FormatError("unknown suite");
}

}  // namespace relmin
