#pragma once

#include <string>

#include "lmforge/functors/ugfunctor.hpp"

namespace lmforge {

// tau_m F(n) = F(n + m) with g acting by rho(id_m # g) and stabilization
// rho((b_{1,m})^-1 # id) s_{n+m}.
inline UGFunctor translate(const UGFunctor& f, const LongMoodySystem& sys, int m) {
    if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "translation order must be >= 1");
    if (f.horizon < m)
        throw Error(ErrorKind::HorizonExhausted, "tau_" + std::to_string(m) + " needs horizon >= " + std::to_string(m));
    UGFunctor out;
    out.ring = f.ring;
    out.horizon = f.horizon - m;
    out.label = "tau" + std::to_string(m) + "(" + f.label + ")";
    for (int n = 0; n <= out.horizon; ++n) {
        out.dims.push_back(f.dim(n + m));
        out.gens.emplace_back();
        out.gens_inv.emplace_back();
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            out.gens.back().push_back(evaluate_word(f, sys.gamma_pow(GroupWord::gen(n, i), m)));
            out.gens_inv.back().push_back(evaluate_word(f, sys.gamma_pow(GroupWord::gen(n, i, -1), m)));
        }
        if (n < out.horizon && f.has_stabilization())
            out.stab.push_back(evaluate_word(f, sys.braiding_inverse_at(n + m + 1, m)) * f.stabilization(n + m));
    }
    out.finalize();
    return out;
}

// The natural map i_m: F -> tau_m F with components s_{n+m-1} ... s_n,
// checked against the generator matrices.
inline FunctorMap iota(const UGFunctor& f, const LongMoodySystem& sys, int m) {
    UGFunctor t = translate(f, sys, m);
    FunctorMap eta;
    for (int n = 0; n <= t.horizon; ++n) eta.components.push_back(stab_composite(f, n, m));
    check_natural(sys, f, t, eta, false);
    return eta;
}

}  // namespace lmforge
