#ifndef GAZE_RNG_HPP
#define GAZE_RNG_HPP

#include <cstdint>
#include <random>

namespace gaze {

/// Seedable, splittable RNG used by every sampling operation.
///
/// Uniform draws are produced from raw 64-bit engine output instead of
/// std::uniform_real_distribution, which is implementation-defined; the
/// reproducibility contract requires the exact draw sequence to be pinned
/// by (seed, call order) alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Per-example derived generator: mixes (seed xor example id) through
    /// splitmix64 so adjacent example ids do not share engine state.
    static Rng derived(std::uint64_t seed, std::uint64_t example_id) {
        return Rng(splitmix64(seed ^ example_id));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Rejection-free modulo bias is negligible
    /// for the n used here (token counts), but we reject anyway to keep the
    /// stream exactly uniform.
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Fisher-Yates shuffle with this engine's draw sequence.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::uint64_t raw() { return engine_(); }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace gaze

#endif
