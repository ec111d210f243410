#pragma once

#include <cstdint>

namespace vlab {

// Counter-based splittable generator (splitmix64 finalizer). A stream is
// fully determined by its derived key, so (seed, class, shard) tuples give
// reproducible parallel streams.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix_u64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derive an independent stream key from a base seed and up to three ids.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a,
                                   std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t k = mix_u64(seed + 0x9E3779B97F4A7C15ULL);
    k = mix_u64(k ^ (a + 0xD1B54A32D192ED03ULL));
    k = mix_u64(k ^ (b + 0x8CB92BA72F3D8DD7ULL));
    k = mix_u64(k ^ (c + 0xEB44ACCAB455D165ULL));
    return k;
}

} // namespace vlab
