#pragma once

#include <string>

#include "lmforge/functors/ugfunctor.hpp"

namespace lmforge {

namespace detail {

inline FMatrix last_coordinates_inclusion(std::size_t n) {
    FMatrix s(n + 1, n);
    for (std::size_t j = 0; j < n; ++j) s(j + 1, j) = RatFunc(1);
    return s;
}

inline void require_unit(const RingSpec& ring, const RatFunc& u) {
    if (u.is_zero() || !ring.contains(u) || !ring.contains(u.inverse()))
        throw Error(ErrorKind::RingMismatch, u.to_string() + " is not a unit of " + ring.name());
}

}  // namespace detail

// The constant functor: R at every level, trivial action, identity stabilizations.
inline UGFunctor make_constant(const LongMoodySystem& sys, const RingSpec& ring, int horizon) {
    UGFunctor f;
    f.ring = ring;
    f.horizon = horizon;
    f.label = "constant";
    for (int n = 0; n <= horizon; ++n) {
        f.dims.push_back(1);
        f.gens.emplace_back(static_cast<std::size_t>(sys.num_generators(n)), FMatrix::identity(1));
        if (n < horizon) f.stab.push_back(FMatrix::identity(1));
    }
    f.gens_inv = f.gens;
    f.finalize();
    return f;
}

// Every generator acts by the unit u; identity stabilizations.
inline UGFunctor make_character(const LongMoodySystem& sys, const RatFunc& u, int horizon,
                                const RingSpec& ring = RingSpec::laurent()) {
    detail::require_unit(ring, u);
    UGFunctor f;
    f.ring = ring;
    f.horizon = horizon;
    f.label = "character:" + u.to_string();
    FMatrix m(1, 1), minv(1, 1);
    m(0, 0) = u;
    minv(0, 0) = u.inverse();
    for (int n = 0; n <= horizon; ++n) {
        f.dims.push_back(1);
        auto k = static_cast<std::size_t>(sys.num_generators(n));
        f.gens.emplace_back(k, m);
        f.gens_inv.emplace_back(k, minv);
        if (n < horizon) f.stab.push_back(FMatrix::identity(1));
    }
    f.finalize();
    for (int n = 0; n <= horizon; ++n)
        for (const auto& [a, b] : sys.relations(n))
            if (evaluate_word(f, a) != evaluate_word(f, b))
                throw Error(ErrorKind::RelationViolation,
                            "character " + u.to_string() + " violates " + a.to_string() + " = " + b.to_string());
    return f;
}

// Unreduced Burau: s_i acts by I + [[1-s, s], [1, 0]] on coordinates i, i+1;
// F(n) -> F(n+1) includes onto the last n coordinates.
inline UGFunctor burau_reference(const RatFunc& s, int horizon, const RingSpec& ring = RingSpec::laurent()) {
    detail::require_unit(ring, s);
    UGFunctor f;
    f.ring = ring;
    f.horizon = horizon;
    f.label = "burau:" + s.to_string();
    RatFunc sinv = s.inverse();
    for (int n = 0; n <= horizon; ++n) {
        auto d = static_cast<std::size_t>(n);
        f.dims.push_back(d);
        f.gens.emplace_back();
        f.gens_inv.emplace_back();
        for (std::size_t i = 0; i + 1 < d; ++i) {
            FMatrix m = FMatrix::identity(d), minv = FMatrix::identity(d);
            m(i, i) = RatFunc(1) - s;
            m(i, i + 1) = s;
            m(i + 1, i) = RatFunc(1);
            m(i + 1, i + 1) = RatFunc(0);
            minv(i, i) = RatFunc(0);
            minv(i, i + 1) = RatFunc(1);
            minv(i + 1, i) = sinv;
            minv(i + 1, i + 1) = RatFunc(1) - sinv;
            f.gens.back().push_back(m);
            f.gens_inv.back().push_back(minv);
        }
        if (n < horizon) f.stab.push_back(detail::last_coordinates_inclusion(d));
    }
    f.finalize();
    return f;
}

// Permutation representation on R^n; s_i swaps coordinates i and i+1.
inline UGFunctor perm_reference(int horizon, const RingSpec& ring = RingSpec::integers()) {
    UGFunctor f;
    f.ring = ring;
    f.horizon = horizon;
    f.label = "perm";
    for (int n = 0; n <= horizon; ++n) {
        auto d = static_cast<std::size_t>(n);
        f.dims.push_back(d);
        f.gens.emplace_back();
        for (std::size_t i = 0; i + 1 < d; ++i) {
            FMatrix m = FMatrix::identity(d);
            m(i, i) = m(i + 1, i + 1) = RatFunc(0);
            m(i, i + 1) = m(i + 1, i) = RatFunc(1);
            f.gens.back().push_back(m);
        }
        if (n < horizon) f.stab.push_back(detail::last_coordinates_inclusion(d));
    }
    f.gens_inv = f.gens;
    f.finalize();
    return f;
}

inline void require_same_horizon(const UGFunctor& a, const UGFunctor& b) {
    if (a.horizon != b.horizon)
        throw Error(ErrorKind::HorizonMismatch,
                    "horizons " + std::to_string(a.horizon) + " and " + std::to_string(b.horizon));
    for (int n = 0; n <= a.horizon; ++n)
        if (a.gens[static_cast<std::size_t>(n)].size() != b.gens[static_cast<std::size_t>(n)].size())
            throw Error(ErrorKind::IncompatibleRanks, "generator counts differ at level " + std::to_string(n));
}

namespace detail {

template <class Op>
UGFunctor combine(const UGFunctor& a, const UGFunctor& b, Op op, std::size_t (*dim)(std::size_t, std::size_t),
                  const std::string& label) {
    require_same_horizon(a, b);
    UGFunctor f;
    f.ring = RingSpec::join(a.ring, b.ring);
    f.horizon = a.horizon;
    f.label = label;
    f.gens.resize(a.gens.size());
    f.gens_inv.resize(a.gens.size());
    for (std::size_t n = 0; n < a.gens.size(); ++n) {
        f.dims.push_back(dim(a.dims[n], b.dims[n]));
        for (std::size_t i = 0; i < a.gens[n].size(); ++i) {
            f.gens[n].push_back(op(a.gens[n][i], b.gens[n][i]));
            f.gens_inv[n].push_back(op(a.gens_inv[n][i], b.gens_inv[n][i]));
        }
    }
    if (a.has_stabilization() && b.has_stabilization())
        for (std::size_t n = 0; n < a.stab.size(); ++n) f.stab.push_back(op(a.stab[n], b.stab[n]));
    f.finalize();
    return f;
}

}  // namespace detail

inline UGFunctor direct_sum(const UGFunctor& a, const UGFunctor& b) {
    return detail::combine(
        a, b, [](const FMatrix& x, const FMatrix& y) { return direct_sum(x, y); },
        [](std::size_t p, std::size_t q) { return p + q; }, "(" + a.label + ")+(" + b.label + ")");
}

inline UGFunctor tensor_product(const UGFunctor& a, const UGFunctor& b) {
    return detail::combine(
        a, b, [](const FMatrix& x, const FMatrix& y) { return kron(x, y); },
        [](std::size_t p, std::size_t q) { return p * q; }, "(" + a.label + ")x(" + b.label + ")");
}

inline UGFunctor truncate(const UGFunctor& f, int horizon) {
    if (horizon > f.horizon || horizon < 0)
        throw Error(ErrorKind::HorizonExceeded, "cannot truncate to " + std::to_string(horizon));
    UGFunctor g = f;
    g.horizon = horizon;
    auto keep = static_cast<std::size_t>(horizon + 1);
    g.dims.resize(keep);
    g.gens.resize(keep);
    g.gens_inv.resize(keep);
    if (!g.stab.empty()) g.stab.resize(static_cast<std::size_t>(horizon));
    return g;
}

}  // namespace lmforge
