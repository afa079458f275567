#ifndef HARNACK_RNG_HPP
#define HARNACK_RNG_HPP

#include <complex>
#include <cstdint>

namespace harnack {

/// Counter-based generator keyed by (seed, stream). The k-th output is a pure
/// function of (seed, stream, k), so identical states reproduce identical
/// sample sequences on every platform and under any thread schedule.
class RngState {
public:
    RngState(std::uint64_t seed, std::uint64_t stream)
        : key_(derive_key(seed, stream)), seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();
    double next_uniform();   // [0, 1)
    double next_gaussian();  // standard normal, Box-Muller
    std::complex<double> next_complex_gaussian();  // re, im ~ N(0, 1/2)

private:
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t key_;
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

} // namespace harnack

#endif
