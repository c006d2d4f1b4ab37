#pragma once

#include <cstdint>
#include <random>

namespace scx {

/// Seeded generator used everywhere randomness is needed. mt19937_64 has a
/// standard-pinned output sequence and the uniform mapping below avoids
/// std::uniform_real_distribution, so draws are reproducible across
/// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(engine_() % bound);
    }

    /// In-place Fisher-Yates; explicit so the permutation sequence is pinned.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(static_cast<std::uint32_t>(i))]);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace scx
