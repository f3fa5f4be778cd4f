#pragma once

#include <random>
#include <vector>

#include "mirrormap/series.hpp"

namespace mmtest {

using mirrormap::Rat;
using mirrormap::Series1;

inline Rat random_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return mirrormap::make_rat(num(rng), den(rng));
}

// random series with the requested constant term behaviour
inline Series1 random_series(std::mt19937_64& rng, int order, const Rat& c0) {
    std::vector<Rat> v(order + 1);
    v[0] = c0;
    for (int i = 1; i <= order; ++i) v[i] = random_rat(rng);
    return Series1(std::move(v));
}

// valuation-1 series with invertible linear coefficient
inline Series1 random_val1_series(std::mt19937_64& rng, int order) {
    std::vector<Rat> v(order + 1, Rat(0));
    std::uniform_int_distribution<int> sign(0, 1);
    v[1] = sign(rng) ? Rat(1) : Rat(-1);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int i = 2; i <= order; ++i) v[i] = Rat(num(rng));
    return Series1(std::move(v));
}

}  // namespace mmtest
