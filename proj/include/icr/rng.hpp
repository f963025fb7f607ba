// Counter-based splittable random number generation.
//
// Every consumer derives an independent substream from (master_seed, key
// words...) so that serial and parallel runs produce identical draws no
// matter how trials are partitioned across workers.
#pragma once

#include <cstdint>
#include <initializer_list>

#include "icr/types.hpp"

namespace icr {

// SplitMix64 step (Steele/Lea/Flood); used for seed expansion and key mixing.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with SplitMix64 seeding.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
    }

    // Substream for a (seed, key...) tuple; each key word is absorbed through
    // a SplitMix64 round so nearby keys land in unrelated states.
    static Rng from_key(std::uint64_t master_seed, std::initializer_list<std::uint64_t> key) {
        std::uint64_t s = master_seed;
        std::uint64_t h = splitmix64(s);
        for (std::uint64_t w : key) {
            s ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h = splitmix64(s);
        }
        return Rng(h);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform draw over (0, 1]; never returns 0 so log() stays finite.
    double uniform_open01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // Exp(1) variate.
    double exponential() { return -std::log(uniform_open01()); }

    // Circularly-symmetric complex Gaussian with unit variance: |z|^2 ~ Exp(1),
    // real and imaginary parts independent N(0, 1/2).
    std::complex<double> cn01() {
        double radius_sq = exponential();
        double angle = 6.283185307179586476925286766559 * uniform_open01();
        double r = std::sqrt(radius_sq);
        return {r * std::cos(angle), r * std::sin(angle)};
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4] = {};
};

// Eight i.i.d. CN(0,1) coefficients, consumed in a fixed order so seeded
// draws are reproducible across platforms and worker counts.
inline FadingDraw draw_fading(Rng& rng) {
    FadingDraw d;
    d.h11 = rng.cn01();
    d.h12 = rng.cn01();
    d.h13 = rng.cn01();
    d.h21 = rng.cn01();
    d.h22 = rng.cn01();
    d.h23 = rng.cn01();
    d.h31 = rng.cn01();
    d.h32 = rng.cn01();
    return d;
}

}  // namespace icr
