#include "relmin/sampling.hpp"

namespace relmin {

namespace {

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t n) {
    if (n == 0) throw DomainError("uniform_below(0)");
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t v = rng.next();
        if (v >= threshold) return v % n;
    }
}

long uniform_int(SplitMix64& rng, long lo, long hi) {
    if (lo > hi) throw DomainError("empty sampling range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(uniform_below(rng, span));
}

SplitMix64 sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return SplitMix64(mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1)) ^ mix(index + 0x94d049bb133111ebULL));
}

Rational sample_rational(SplitMix64& rng, long magnitude) {
    if (magnitude < 1) throw DomainError("coefficient magnitude must be ≥ 1");
    const long num = uniform_int(rng, -magnitude, magnitude);
    const long den = uniform_int(rng, 1, magnitude);
    return Rational(num, den);
}

Rational sample_nonzero_rational(SplitMix64& rng, long magnitude) {
    for (;;) {
        Rational r = sample_rational(rng, magnitude);
        if (!r.is_zero()) return r;
    }
}

CDElement sample_cd(SplitMix64& rng, int level, long magnitude) {
    std::vector<Rational> coeffs;
    coeffs.reserve(std::size_t{1} << level);
    for (std::size_t k = 0; k < (std::size_t{1} << level); ++k)
        coeffs.push_back(sample_rational(rng, magnitude));
    return CDElement(level, std::move(coeffs));
}

CDElement sample_cd_nonzero(SplitMix64& rng, int level, long magnitude) {
    for (;;) {
        CDElement x = sample_cd(rng, level, magnitude);
        if (!x.is_zero()) return x;
    }
}

std::vector<CDElement> sample_cd_vector(SplitMix64& rng, int level, std::size_t dim, long magnitude) {
    std::vector<CDElement> out;
    out.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) out.push_back(sample_cd(rng, level, magnitude));
    return out;
}

std::vector<CDElement> sample_cd_vector_nonzero(SplitMix64& rng, int level, std::size_t dim, long magnitude) {
    for (;;) {
        auto v = sample_cd_vector(rng, level, dim, magnitude);
        for (const CDElement& c : v)
            if (!c.is_zero()) return v;
    }
}

HeisenbergElement sample_heisenberg(SplitMix64& rng, const BiadditiveMap& w, long magnitude) {
    return HeisenbergElement{sample_cd(rng, w.scalar_level, magnitude),
                             sample_cd_vector(rng, w.scalar_level, w.dim, magnitude),
                             sample_cd_vector(rng, w.scalar_level, w.dim, magnitude)};
}

UniTriMatrix sample_unitriangular(SplitMix64& rng, std::size_t size, int level, long magnitude) {
    UniTriMatrix out = UniTriMatrix::identity(size, level);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = r + 1; c < size; ++c) out.set_upper(r, c, sample_cd(rng, level, magnitude));
    return out;
}

UniTriMatrix sample_tilde(SplitMix64& rng, std::size_t size, int level, long magnitude, std::size_t i) {
    UniTriMatrix out = UniTriMatrix::identity(size, level);
    for (std::size_t r = i - 1; r < size; ++r)
        for (std::size_t c = r + 1; c < size; ++c) out.set_upper(r, c, sample_cd(rng, level, magnitude));
    return out;
}

}  // namespace relmin
