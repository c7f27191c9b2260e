#ifndef HADWIGER_RANDOM_HH
#define HADWIGER_RANDOM_HH 1

#include <cstdint>
#include <random>
#include <string_view>

namespace hadwiger
{
    /// The single source of randomness for generators and searches.
    ///
    /// Draws only raw engine output, never std:: distributions, whose
    /// results differ between standard library implementations. Bump the
    /// version string if the derivation of any draw changes.
    class SeededRng
    {
        private:
            std::mt19937_64 _engine;

        public:
            static constexpr std::string_view name = "mt19937_64/v1";

            explicit SeededRng(std::uint64_t seed) : _engine(seed) { }

            auto next_u64() -> std::uint64_t { return _engine(); }

            /// Uniform integer in [0, bound). bound must be positive.
            auto below(std::uint64_t bound) -> std::uint64_t
            {
                auto product = static_cast<unsigned __int128>(next_u64()) * bound;
                return static_cast<std::uint64_t>(product >> 64);
            }

            /// Uniform double in [0, 1) with 53 random bits.
            auto unit() -> double
            {
                return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
            }

            auto bernoulli(double probability) -> bool
            {
                return unit() < probability;
            }
    };
}

#endif
