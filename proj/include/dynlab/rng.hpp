#ifndef DYNLAB_RNG_HPP
#define DYNLAB_RNG_HPP

#include <cmath>
#include <cstdint>

namespace dynlab {

// splitmix64 finalizer; full-avalanche 64-bit mix.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// (master, stream) pair identifying an independent generator family.
struct SeedSpec {
    uint64_t master = 0;
    uint64_t stream = 0;

    SeedSpec derived(uint64_t tag) const { return {master, mix64(stream ^ mix64(tag))}; }
};

// Counter-based generator keyed by (master, stream, draw index).  Stateless
// across draws: the same key always reproduces the same variate sequence, so
// batches are reproducible for any scheduling of draws onto workers.
class CounterRng {
public:
    CounterRng(const SeedSpec& s, uint64_t draw_index)
        : key_(mix64(mix64(mix64(s.master) ^ s.stream) ^ mix64(draw_index ^ 0x5851f42d4c957f2dull))) {}

    uint64_t next_u64() { return mix64(key_ + (n_++) * 0x9e3779b97f4a7c15ull); }

    // uniform in [0,1), 53-bit resolution
    double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // unbiased uniform in {0, ..., m-1}
    uint32_t next_below(uint32_t m) {
        const uint64_t threshold = -uint64_t(m) % uint64_t(m);
        for (;;) {
            uint64_t u = next_u64();
            if (u >= threshold) return uint32_t(u % m);
        }
    }

    // standard normal via Box-Muller (second value cached)
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = next_unit(), u2 = next_unit();
        while (u1 <= 0.0) u1 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    uint64_t key_;
    uint64_t n_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace dynlab

#endif
