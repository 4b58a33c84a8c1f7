#pragma once

#include <random>

#include "lmforge/exactalg.hpp"

namespace lmtest {

using namespace lmforge;

inline Rational random_rational(std::mt19937_64& rng, long span = 5) {
    std::uniform_int_distribution<long> num(-span, span), den(1, 4);
    return make_rational(num(rng), den(rng));
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int terms = 3, int spread = 3) {
    std::uniform_int_distribution<int> e(-spread, spread);
    std::vector<LaurentPoly::Term> ts;
    for (int k = 0; k < terms; ++k) ts.emplace_back(e(rng), random_rational(rng));
    return LaurentPoly::from_terms(ts);
}

inline RatFunc random_ratfunc(std::mt19937_64& rng) {
    LaurentPoly den = random_laurent(rng, 2, 2);
    if (den.is_zero()) den = LaurentPoly(1);
    return RatFunc(random_laurent(rng), den);
}

inline Matrix<RatFunc> random_laurent_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density = 2) {
    Matrix<RatFunc> m(r, c);
    std::uniform_int_distribution<int> coin(0, density);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng) != 0) m(i, j) = RatFunc(random_laurent(rng, 2, 2));
    return m;
}

// Product of two random factors, so the rank is usually below min(r, c).
inline Matrix<RatFunc> random_low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
    return random_laurent_matrix(rng, r, k, 3) * random_laurent_matrix(rng, k, c, 3);
}

}  // namespace lmtest
