#pragma once

#include <cstdint>

#include "relmin/cayley_dickson.hpp"
#include "relmin/heisenberg.hpp"
#include "relmin/unitriangular.hpp"

namespace relmin {

/// SplitMix64: tiny, fast, and identical on every platform, which is what
/// the byte-reproducible reports need (the standard library distributions
/// are implementation-defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Unbiased uniform draw from [0, n).
std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t n);

/// Uniform draw from [lo, hi], inclusive.
long uniform_int(SplitMix64& rng, long lo, long hi);

/// Independent generator for sample `index` of stream `stream` under `seed`.
/// Derivation is by mixing, so results do not depend on evaluation order.
SplitMix64 sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Numerator uniform in {−M..M}, denominator uniform in {1..M}, reduced.
Rational sample_rational(SplitMix64& rng, long magnitude);
Rational sample_nonzero_rational(SplitMix64& rng, long magnitude);

CDElement sample_cd(SplitMix64& rng, int level, long magnitude);
CDElement sample_cd_nonzero(SplitMix64& rng, int level, long magnitude);

std::vector<CDElement> sample_cd_vector(SplitMix64& rng, int level, std::size_t dim, long magnitude);
std::vector<CDElement> sample_cd_vector_nonzero(SplitMix64& rng, int level, std::size_t dim, long magnitude);

HeisenbergElement sample_heisenberg(SplitMix64& rng, const BiadditiveMap& w, long magnitude);

UniTriMatrix sample_unitriangular(SplitMix64& rng, std::size_t size, int level, long magnitude);

/// Matrix with zero off-diagonal entries in rows 1..i−1 (1-based i).
UniTriMatrix sample_tilde(SplitMix64& rng, std::size_t size, int level, long magnitude, std::size_t i);

}  // namespace relmin
