#pragma once

#include <string>
#include <vector>

#include "lmforge/exactalg/linalg.hpp"
#include "lmforge/exactalg/ring.hpp"
#include "lmforge/systems/system.hpp"

namespace lmforge {

// A functor on the levels 0..horizon: F(n) = R^{dims[n]}, a matrix for every
// generator of G_n (and its inverse), and stabilization maps s_n: F(n) -> F(n+1).
struct UGFunctor {
    RingSpec ring;
    int horizon = 0;
    std::vector<std::size_t> dims;
    std::vector<std::vector<FMatrix>> gens;
    std::vector<std::vector<FMatrix>> gens_inv;
    std::vector<FMatrix> stab;  // empty when the stabilizations are not available
    std::string label;

    bool has_stabilization() const { return horizon == 0 || !stab.empty(); }
    std::size_t dim(int n) const { return dims.at(static_cast<std::size_t>(n)); }

    const FMatrix& generator(int n, int i, int exp = 1) const {
        require_level(n);
        const auto& table = exp > 0 ? gens[static_cast<std::size_t>(n)] : gens_inv[static_cast<std::size_t>(n)];
        if (i < 1 || i > static_cast<int>(table.size()))
            throw Error(ErrorKind::IndexOutOfRange, "no generator s" + std::to_string(i) + " at level " +
                                                        std::to_string(n));
        return table[static_cast<std::size_t>(i - 1)];
    }

    const FMatrix& stabilization(int n) const {
        if (n < 0 || n >= horizon) throw Error(ErrorKind::HorizonExceeded, "no stabilization at level " + std::to_string(n));
        if (stab.empty()) throw Error(ErrorKind::StabilizationDescentFailure, "functor carries no stabilizations");
        return stab[static_cast<std::size_t>(n)];
    }

    void require_level(int n) const {
        if (n < 0 || n > horizon)
            throw Error(ErrorKind::HorizonExceeded,
                        "level " + std::to_string(n) + " beyond functor horizon " + std::to_string(horizon));
    }

    bool is_zero() const {
        for (auto d : dims)
            if (d != 0) return false;
        return true;
    }

    // Fill in missing inverse matrices and check shapes, ring membership and inverses.
    void finalize() {
        if (static_cast<int>(dims.size()) != horizon + 1 || static_cast<int>(gens.size()) != horizon + 1)
            throw Error(ErrorKind::ArityMismatch, "functor tables do not cover levels 0.." + std::to_string(horizon));
        if (!stab.empty() && static_cast<int>(stab.size()) != horizon)
            throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(horizon) + " stabilization maps");
        bool fill = gens_inv.empty();
        if (fill) gens_inv.resize(gens.size());
        for (std::size_t n = 0; n < gens.size(); ++n) {
            if (fill) gens_inv[n].clear();
            for (std::size_t i = 0; i < gens[n].size(); ++i) {
                const FMatrix& m = gens[n][i];
                if (m.rows() != dims[n] || m.cols() != dims[n])
                    throw Error(ErrorKind::ArityMismatch, "generator " + std::to_string(i + 1) + " at level " +
                                                              std::to_string(n) + " has shape " + m.shape());
                require_ring(m);
                if (fill) {
                    auto inv = inverse(m);
                    if (!inv)
                        throw Error(ErrorKind::Singular, "generator " + std::to_string(i + 1) + " at level " +
                                                             std::to_string(n) + " is not invertible");
                    gens_inv[n].push_back(std::move(*inv));
                }
            }
            if (gens_inv[n].size() != gens[n].size())
                throw Error(ErrorKind::ArityMismatch, "inverse table size at level " + std::to_string(n));
        }
        for (std::size_t n = 0; n < stab.size(); ++n) {
            if (stab[n].rows() != dims[n + 1] || stab[n].cols() != dims[n])
                throw Error(ErrorKind::ArityMismatch, "stabilization " + std::to_string(n) + " has shape " +
                                                          stab[n].shape());
            require_ring(stab[n]);
        }
    }

    void require_ring(const FMatrix& m) const {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!ring.contains(m(i, j)))
                    throw Error(ErrorKind::RingMismatch, "entry " + m(i, j).to_string() + " not in " + ring.name());
    }
};

// rho_n(g) for a word g at level n.
inline FMatrix evaluate_word(const UGFunctor& f, const GroupWord& g) {
    int n = g.level();
    f.require_level(n);
    FMatrix out = FMatrix::identity(f.dim(n));
    for (const auto& l : g.letters()) out = out * f.generator(n, l.gen, l.exp);
    return out;
}

// s_{n+m-1} ... s_n
inline FMatrix stab_composite(const UGFunctor& f, int n, int m) {
    f.require_level(n + m);
    FMatrix out = FMatrix::identity(f.dim(n));
    for (int k = 0; k < m; ++k) out = f.stabilization(n + k) * out;
    return out;
}

// Morphism [m, g]: n -> n + m with g in G_{n+m}.
struct UGMorphism {
    int source = 0;
    int m = 0;
    GroupWord g;
    int target() const { return source + m; }
};

// second o first = [m2 + m1, g2 (id_{m2} # g1)]
inline UGMorphism compose(const LongMoodySystem& sys, const UGMorphism& second, const UGMorphism& first) {
    if (second.source != first.target())
        throw Error(ErrorKind::LevelMismatch, "morphisms do not compose");
    return {first.source, first.m + second.m, second.g * sys.gamma_pow(first.g, second.m)};
}

inline FMatrix evaluate(const UGFunctor& f, const UGMorphism& mor) {
    if (mor.target() > f.horizon)
        throw Error(ErrorKind::HorizonExceeded, "morphism target " + std::to_string(mor.target()) + " beyond horizon");
    return evaluate_word(f, mor.g) * stab_composite(f, mor.source, mor.m);
}

// Componentwise linear maps between two functors.
struct FunctorMap {
    std::vector<FMatrix> components;
};

inline void check_natural(const LongMoodySystem& sys, const UGFunctor& source, const UGFunctor& target,
                          const FunctorMap& eta, bool with_stabilization = true) {
    int top = std::min(source.horizon, target.horizon);
    for (int n = 0; n <= top; ++n) {
        const FMatrix& c = eta.components.at(static_cast<std::size_t>(n));
        for (int i = 1; i <= sys.num_generators(n); ++i)
            if (c * source.generator(n, i) != target.generator(n, i) * c)
                throw Error(ErrorKind::NaturalityFailure, "generator s" + std::to_string(i) + " at level " +
                                                              std::to_string(n));
        if (with_stabilization && n < top &&
            eta.components.at(static_cast<std::size_t>(n + 1)) * source.stabilization(n) != target.stabilization(n) * c)
            throw Error(ErrorKind::NaturalityFailure, "stabilization at level " + std::to_string(n));
    }
}

}  // namespace lmforge
