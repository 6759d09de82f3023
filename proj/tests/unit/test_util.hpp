#pragma once

#include <cstdint>
#include <random>

#include "hypcy/exact/golden.hpp"

namespace hypcy::test {

inline constexpr std::uint64_t kSeed = 20240917;

inline Rational random_rational(std::mt19937_64& rng, int max_num = 20, int max_den = 7) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline GoldenScalar random_golden(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng)};
}

}  // namespace hypcy::test
