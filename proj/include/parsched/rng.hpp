#ifndef PARSCHED_RNG_HPP
#define PARSCHED_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace parsched {

// xoshiro256** seeded through splitmix64. Fixed cross-platform semantics:
// identical seeds produce identical streams everywhere, which the
// determinism guarantees of the harness rely on.
class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed = 0) {
        uint64_t x = seed;
        for (auto& word : state_) {
            // splitmix64
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform in (0, 1]: 53-bit mantissa, never zero
    double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    // integer in [0, n); slight modulo bias is irrelevant here
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<uint64_t, 4> state_{};
};

} // namespace parsched

#endif
