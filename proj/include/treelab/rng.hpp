#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "treelab/errors.hpp"

namespace treelab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// mt19937_64 with hand-rolled distributions. The engine's output sequence is
// pinned by the standard, and we avoid std::*_distribution because their
// algorithms vary across standard libraries; this keeps sampled trees
// bit-identical for a given seed everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform on [0,1) with 53 random bits
    double uniform01() { return double(eng_() >> 11) * 0x1.0p-53; }

    // uniform integer in [lo, hi], unbiased (rejection on the top range)
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = std::uint64_t(hi - lo) + 1;
        if (span == 0) return std::int64_t(eng_()); // full range
        const std::uint64_t limit = std::uint64_t(-span) % span; // 2^64 mod span
        std::uint64_t r;
        do {
            r = eng_();
        } while (r < limit);
        return lo + std::int64_t(r % span);
    }

    // Knuth's product method; fine for the small lambdas used here.
    int poisson(double lambda) {
        if (!(lambda > 0.0)) throw ValidationError("poisson: lambda must be positive");
        const double threshold = std::exp(-lambda);
        int k = 0;
        double p = 1.0;
        for (;;) {
            p *= uniform01();
            if (p <= threshold) return k;
            ++k;
        }
    }

  private:
    std::mt19937_64 eng_;
};

// Master seed plus replication-index substream derivation: identical
// (seed, index) gives an identical stream regardless of how replications are
// distributed over workers.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t master) : master_(master) {}

    std::uint64_t master() const { return master_; }

    Rng substream(std::uint64_t index) const {
        return Rng(splitmix64(master_ ^ splitmix64(index + 0x51ed5eedULL)));
    }

    // two-level derivation, e.g. (grid point, replication)
    Rng substream(std::uint64_t a, std::uint64_t b) const {
        return Rng(splitmix64(splitmix64(master_ ^ splitmix64(a + 1)) ^ splitmix64(b + 0x51ed5eedULL)));
    }

  private:
    std::uint64_t master_;
};

} // namespace treelab
