#include "harnack/rng.hpp"

#include <cmath>
#include <numbers>

namespace harnack {

namespace {

// splitmix64 finalizer; full-avalanche 64-bit mixer
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t RngState::derive_key(std::uint64_t seed, std::uint64_t stream) {
    return mix64(mix64(seed) ^ mix64(stream + 0xD1B54A32D192ED03ULL));
}

std::uint64_t RngState::next_u64() {
    return mix64(key_ + counter_++ * 0x9E3779B97F4A7C15ULL);
}

double RngState::next_uniform() {
    // top 53 bits -> [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngState::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u1 = next_uniform();
    const double u2 = next_uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = r * std::sin(t);
    has_cached_gaussian_ = true;
    return r * std::cos(t);
}

std::complex<double> RngState::next_complex_gaussian() {
    const double s = std::numbers::sqrt2;
    const double re = next_gaussian() / s;
    const double im = next_gaussian() / s;
    return {re, im};
}

} // namespace harnack
