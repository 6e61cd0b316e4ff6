#pragma once

#include <cstdint>
#include <random>

namespace stabjgl {

using Rng = std::mt19937_64;

/// Mixes a base seed with a stream identifier (splitmix64 finalizer) so that
/// independent components can draw from uncorrelated generators.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return Rng{derive_seed(seed, stream)};
}

}  // namespace stabjgl
