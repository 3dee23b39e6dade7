#ifndef PROGEVO_RNG_HPP
#define PROGEVO_RNG_HPP

#include <cstdint>
#include <random>

namespace progevo {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent seeds from (base, tag).
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tag)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline bool coin_flip(Rng& rng)
{
    return (rng() >> 63) != 0;
}

} // namespace progevo

#endif
