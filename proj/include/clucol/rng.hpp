#pragma once

#include <cstdint>
#include <vector>

namespace clucol {

// splitmix64: cheap, well-mixed, stable across platforms. Used wherever a
// definition leaves a free choice that must stay reproducible under a seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}

// Deterministic stream of pseudo-random values; independent of std:: engine
// implementations so reports reproduce across standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x51a5c1e5ULL)) {}

    std::uint64_t next() {
        state_ = splitmix64(state_);
        return state_;
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0) < p;
    }

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[below(xs.size())];
    }

private:
    std::uint64_t state_;
};

}  // namespace clucol
