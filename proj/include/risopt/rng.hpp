#ifndef RISOPT_RNG_HPP
#define RISOPT_RNG_HPP

#include <cstdint>

#include "risopt/linalg.hpp"

namespace risopt {

/// Splittable counter-seeded generator (splitmix64 core). A stream is fully
/// determined by (seed, stream index), so trial t of purpose p can own the
/// stream with index derived from (t, p) and replay identically regardless
/// of scheduling.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return index_; }

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on (0, 1].
    double uniform_pos();
    /// Standard normal, Box-Muller.
    double normal();
    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n);
    /// Gamma(shape, scale), Marsaglia-Tsang.
    double gamma(double shape, double scale);

private:
    std::uint64_t seed_ = 0;
    std::uint64_t index_ = 0;
    std::uint64_t state_ = 0;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// n i.i.d. circularly-symmetric complex Gaussian entries with unit variance
/// per complex entry (real and imaginary parts each have variance 1/2).
CVector complex_gaussian_vector(std::size_t n, RngStream& rng);

}  // namespace risopt

#endif
