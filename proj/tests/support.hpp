#pragma once

#include "cremona/matrix.hpp"
#include "cremona/polynomial.hpp"

#include <random>
#include <vector>

namespace testing {

inline long draw(std::mt19937_64& gen, long bound) {
    return static_cast<long>(gen() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

inline cremona::Polynomial random_poly(std::mt19937_64& gen, int degree, long bound) {
    std::vector<cremona::Rational> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(draw(gen, bound));
    if (c.back() == 0) c.back() = 1;
    return cremona::Polynomial(std::move(c));
}

inline cremona::QMatrix random_matrix(std::mt19937_64& gen, std::size_t n, long bound) {
    cremona::QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = draw(gen, bound);
    return m;
}

inline std::vector<cremona::Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace testing
