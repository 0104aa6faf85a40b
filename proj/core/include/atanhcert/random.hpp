#ifndef ATANHCERT_RANDOM_HPP
#define ATANHCERT_RANDOM_HPP

#include <cstdint>

namespace atanhcert
{

// SplitMix64 finalizer. Draw k of sample i is hash(seed, i, k), so a sample
// does not depend on how the index range is chunked across threads.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
[[nodiscard]] constexpr double counter_uniform(std::uint64_t seed, std::uint64_t index,
                                               std::uint64_t draw) noexcept
{
    const auto h = splitmix64(splitmix64(seed ^ splitmix64(index)) + draw);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Sequential stream for test generators and property suites.
class CounterRng
{
public:
    explicit constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : seed_(splitmix64(seed) ^ stream), counter_(0)
    {
    }

    // [0, 1)
    constexpr double uniform() noexcept { return counter_uniform(seed_, counter_++, 0); }
    // [a, b)
    constexpr double uniform(double a, double b) noexcept { return a + (b - a) * uniform(); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace atanhcert

#endif
