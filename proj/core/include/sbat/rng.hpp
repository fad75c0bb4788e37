#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace sbat {

/// Deterministic random source. The mt19937_64 engine is specified bit-for-bit
/// by the standard; the derived draws (uniform doubles, gaussians, shuffles)
/// are implemented here instead of relying on std distributions, whose output
/// is implementation-defined. Same seed, same platform-independent stream.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] inclusive, rejection-sampled (unbiased).
    int uniform_int(int lo, int hi) {
        const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    /// Standard normal via Box-Muller with a cached spare.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u = 1.0 - uniform(); // keep log() away from 0
        const double v = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u));
        const double angle = 6.283185307179586476925286766559 * v;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(uniform_int(0, static_cast<int>(i - 1)));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Sample `count` distinct integers from [0, upper), ascending.
    std::vector<int> sample_distinct_sorted(int count, int upper);

    /// splitmix64 stream derivation, for giving each record/epoch/worker an
    /// independent seed from one master seed.
    static uint64_t mix(uint64_t seed, uint64_t stream) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline std::vector<int> Rng::sample_distinct_sorted(int count, int upper) {
    // Partial Fisher-Yates over an index pool; fine at the sizes we use.
    std::vector<int> pool(static_cast<size_t>(upper));
    for (int i = 0; i < upper; ++i) pool[static_cast<size_t>(i)] = i;
    for (int i = 0; i < count; ++i) {
        const int j = uniform_int(i, upper - 1);
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    pool.resize(static_cast<size_t>(count));
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace sbat
