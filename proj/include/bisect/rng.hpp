// Seeded random streams; every trial derives its own stream from (seed, index).
#pragma once

#include <cstdint>
#include <random>

namespace bisect {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2013;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream) : eng_(derive_seed(seed, stream)) {}

    std::uint64_t next() { return eng_(); }
    bool coin() { return (eng_() >> 63) != 0; }

    // Unbiased value in [0, bound) by rejection; std distributions are not
    // portable across standard libraries, which would break reproducibility.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = -bound % bound;
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= limit) return r % bound;
        }
    }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    template <class It>
    void shuffle(It first, It last) {
        auto n = last - first;
        for (auto i = n - 1; i > 0; --i) std::swap(first[i], first[below(static_cast<std::uint64_t>(i) + 1)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace bisect
