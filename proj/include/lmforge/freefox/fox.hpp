#pragma once

#include <vector>

#include "lmforge/exactalg/matrix.hpp"
#include "lmforge/freefox/groupring.hpp"

namespace lmforge {

// Right Fox derivative: D_k(x_i) = delta_ik, D_k(x_i^-1) = -delta_ik x_i^-1,
// D_k(uv) = D_k(u) v + D_k(v).
inline ZF fox_right(const FreeWord& w, int k) {
    ZF out;
    const auto& ls = w.letters();
    for (std::size_t p = 0; p < ls.size(); ++p) {
        if (ls[p].gen != k) continue;
        if (ls[p].exp > 0)
            out.add_term(w.suffix(p + 1), Rational(1));
        else
            out.add_term(w.suffix(p), Rational(-1));
    }
    return out;
}

inline ZF fox_right(const ZF& a, int k) {
    ZF out;
    for (const auto& [w, c] : a.terms()) {
        ZF d = fox_right(w, k);
        for (const auto& [v, e] : d.terms()) out.add_term(v, Rational(c * e));
    }
    return out;
}

inline ZF generator_minus_one(int k) { return ZF(FreeWord::gen(k)) - ZF(1); }

// Coordinates of an augmentation-ideal element in the free basis {x_k - 1} of
// the right module: a = sum_k (x_k - 1) * coords[k-1].
inline std::vector<ZF> aug_coordinates(const ZF& a, int rank) {
    if (a.augmentation() != 0) throw Error(ErrorKind::NotInIdeal, "augmentation is " + a.augmentation().get_str());
    if (a.max_gen() > rank)
        throw Error(ErrorKind::IndexOutOfRange, "element involves x" + std::to_string(a.max_gen()) + " beyond rank " +
                                                    std::to_string(rank));
    std::vector<ZF> coords;
    for (int k = 1; k <= rank; ++k) coords.push_back(fox_right(a, k));
    return coords;
}

// J(k, j) = D_k(phi(x_j)), 0-based indices.
inline Matrix<ZF> jacobian(const FreeEndomorphism& phi) {
    auto n = static_cast<std::size_t>(phi.arity());
    Matrix<ZF> j(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) j(k, c) = fox_right(phi.images()[c], static_cast<int>(k) + 1);
    return j;
}

// Entry (k, j) is the exponent sum of x_k in phi(x_j), i.e. the action on H_1.
// With this convention abelianized_jacobian(phi o psi) = A(phi) * A(psi).
inline Matrix<Rational> abelianized_jacobian(const FreeEndomorphism& phi) {
    auto n = static_cast<std::size_t>(phi.arity());
    Matrix<Rational> a(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) a(k, c) = phi.images()[c].exponent_sum(static_cast<int>(k) + 1);
    return a;
}

}  // namespace lmforge
