#ifndef MPSP_RNG_HPP
#define MPSP_RNG_HPP

#include <complex>
#include <cstdint>

namespace mpsp {

// Deterministic pseudo-random stream (splitmix64). Self-contained so that
// identical seeds give bit-identical sequences on every platform and build;
// std::uniform_real_distribution makes no such promise.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    // Independent stream for (master seed, index), so per-property streams
    // do not depend on evaluation order.
    static RngStream derived(std::uint64_t master, std::uint64_t index) {
        RngStream mix(master + 0x9e3779b97f4a7c15ULL * (index + 1));
        mix.next_u64();
        return RngStream(mix.next_u64());
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(next_u64() % n);
    }

    // uniform on the circle |z| = radius
    std::complex<double> circle(double radius = 1.0) {
        const double theta = uniform(0.0, 6.283185307179586476925286766559);
        return std::polar(radius, theta);
    }

    // area-uniform in the closed disk |z| <= radius
    std::complex<double> disk(double radius) {
        const double r = radius * std::sqrt(uniform01());
        return circle(r);
    }

private:
    std::uint64_t state_;
};

} // namespace mpsp

#endif
