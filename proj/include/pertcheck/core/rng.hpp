#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pertcheck {

// 64-bit FNV-1a. Used to derive per-(sample, template) RNG streams and to
// fingerprint input files in run manifests.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Deterministic splitmix64 generator. The standard <random> engines are
// portable but the distributions are not, so bounded draws and shuffling
// are implemented here and produce identical sequences on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Stream derived from a master seed and a list of string keys; adding
    // samples or templates to a run never disturbs other streams.
    static Rng derive(std::uint64_t master_seed, std::initializer_list<std::string_view> keys) {
        std::uint64_t h = fnv1a64(std::to_string(master_seed));
        for (auto k : keys) {
            h = fnv1a64("\x1f", h);
            h = fnv1a64(k, h);
        }
        return Rng(h);
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, n). n must be > 0.
    std::size_t uniform(std::size_t n) {
        // Multiply-shift; bias is negligible (< 2^-53 for n below 2^11,
        // far below anything observable at suite scale) and the result is
        // platform-independent.
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        return static_cast<std::size_t>(m >> 64);
    }

    // Uniform draw in [lo, hi] inclusive.
    std::size_t uniform(std::size_t lo, std::size_t hi) {
        return lo + uniform(hi - lo + 1);
    }

    bool coin() { return (next_u64() & 1) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform(i);
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[uniform(v.size())];
    }

private:
    std::uint64_t state_;
};

} // namespace pertcheck
