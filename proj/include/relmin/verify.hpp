#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "relmin/report.hpp"

namespace relmin {

enum class Suite {
    cd_axioms,
    abs_axioms,
    heisenberg_axioms,
    matrix_realization,
    reduction_iso,
    witnesses,
};

/// Throws FormatError for an unknown name.
Suite suite_from_name(std::string_view name);
std::string_view suite_name(Suite suite);

/// A verification run is fully determined by this record: the same config
/// yields a byte-identical report. Counterexamples always carry the
/// smallest failing sample index, so the result does not depend on the
/// order properties are evaluated in.
struct VerifyConfig {
    Suite suite = Suite::cd_axioms;
    long samples = 500;
    std::uint64_t seed = 1;
    int level = 0;
    std::size_t dim = 1;
    long coeff_magnitude = 10;
};

/// Runs the named property suite with seeded deterministic sampling.
/// Throws FormatError on an invalid config (callers map that to exit 2);
/// property violations are report content.
SuiteReport run_verify(const VerifyConfig& config);

}  // namespace relmin
