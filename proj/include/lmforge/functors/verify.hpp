#pragma once

#include <map>
#include <optional>
#include <string>

#include "lmforge/functors/ugfunctor.hpp"
#include "lmforge/systems/verify.hpp"

namespace lmforge {

struct FunctorReport {
    bool compatible = true;
    bool full_functor = true;
    int horizon = 0;
    std::map<std::string, long> checks;
    std::optional<CheckFailure> failure;       // first failed compatibility check
    std::optional<CheckFailure> full_failure;  // first failed invariance check
};

inline void require_generator_counts(const UGFunctor& f, const LongMoodySystem& sys) {
    for (int n = 0; n <= f.horizon; ++n)
        if (static_cast<int>(f.gens[static_cast<std::size_t>(n)].size()) != sys.num_generators(n))
            throw Error(ErrorKind::IncompatibleRanks, "functor has " + std::to_string(f.gens[static_cast<std::size_t>(n)].size()) +
                                                          " generators at level " + std::to_string(n) + ", the system " +
                                                          std::to_string(sys.num_generators(n)));
}

// Compatible: the relations of each G_n hold and s_n rho_n(g) = rho_{n+1}(id_1 # g) s_n.
// Full functor: additionally rho_{n+m}(psi # id_n) s^(m) = s^(m) for the
// generators psi of G_m, m <= max_m.
inline FunctorReport verify_compatible(const UGFunctor& f, const LongMoodySystem& sys, int max_m = 2) {
    require_generator_counts(f, sys);
    if (!f.has_stabilization())
        throw Error(ErrorKind::StabilizationDescentFailure, "functor carries no stabilizations");
    FunctorReport rep;
    rep.horizon = f.horizon;
    auto fail = [&](std::optional<CheckFailure>& slot, const std::string& check, int n, const std::string& detail) {
        if (!slot) slot = CheckFailure{check, n, detail};
    };
    for (int n = 0; n <= f.horizon; ++n) {
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            ++rep.checks["inverse"];
            if (!(f.generator(n, i) * f.generator(n, i, -1)).is_identity()) {
                rep.compatible = false;
                fail(rep.failure, "inverse", n, "s" + std::to_string(i));
            }
        }
        for (const auto& [a, b] : sys.relations(n)) {
            ++rep.checks["relation"];
            if (evaluate_word(f, a) != evaluate_word(f, b)) {
                rep.compatible = false;
                fail(rep.failure, "relation", n, a.to_string() + " = " + b.to_string());
            }
        }
        if (n == f.horizon) continue;
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            ++rep.checks["compatibility"];
            GroupWord g = GroupWord::gen(n, i);
            if (f.stabilization(n) * f.generator(n, i) != evaluate_word(f, sys.gamma(g)) * f.stabilization(n)) {
                rep.compatible = false;
                fail(rep.failure, "compatibility", n, "s" + std::to_string(i));
            }
        }
    }
    if (!rep.compatible) {
        rep.full_functor = false;
        return rep;
    }
    for (int m = 1; m <= max_m; ++m) {
        if (m > sys.horizon()) break;
        for (int i = 1; i <= sys.num_generators(m); ++i)
            for (int n = 0; n + m <= f.horizon; ++n) {
                ++rep.checks["invariance"];
                FMatrix s = stab_composite(f, n, m);
                if (evaluate_word(f, GroupWord::gen(m, i).at_level(n + m)) * s != s) {
                    rep.full_functor = false;
                    fail(rep.full_failure, "invariance", n, "psi = s" + std::to_string(i) + " in G_" + std::to_string(m));
                }
            }
    }
    return rep;
}

}  // namespace lmforge
