#pragma once

#include <cstdint>

namespace xorgame {

/// splitmix64 finalizer; used both as a seed expander and as the avalanche
/// mix for deriving independent per-trial sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic sub-seed for (master_seed, trial_index); independent of
/// scheduling so parallel runs reproduce serial ones.
inline std::uint64_t sub_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t s = master_seed ^ (index * 0xA24BAED4963EE407ULL + 0x9FB21C651E98DF25ULL);
    return splitmix64(s);
}

/// xoshiro256** generator (Blackman & Vigna), fully specified so output is
/// identical across platforms and standard-library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& si : s_) si = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, n) by masked rejection (no modulo bias, no
    /// implementation-defined distribution).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0};
        mask >>= 63 - bit_width_minus1(n - 1);
        for (;;) {
            const std::uint64_t v = next() & mask;
            if (v < n) return v;
        }
    }

    bool coin() { return next() >> 63; }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    static int bit_width_minus1(std::uint64_t x) {
        int b = 0;
        while (x >>= 1) ++b;
        return b;
    }

    std::uint64_t s_[4];
};

}  // namespace xorgame
