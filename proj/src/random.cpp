#include "dipath/random.hpp"

namespace dipath {

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    return mix64(mix64(base) ^ (index * 0xd1b54a32d192ed03ULL));
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b)
{
    return derive_seed(derive_seed(base, a), b);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t floor = (0 - bound) % bound;
        while (low < floor) {
            product = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

std::uint64_t fnv1a(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace dipath
