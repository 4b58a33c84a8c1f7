#pragma once

#include <optional>
#include <string>

#include "lmforge/polydeg/translate.hpp"
#include "lmforge/systems/verify.hpp"

namespace lmforge {

struct KappaDelta {
    UGFunctor kappa;                     // ker of i_m, levels 0..N-m
    UGFunctor delta;                     // coker of i_m
    FunctorMap omega;                    // kernel inclusions kappa(n) -> F(n)
    FunctorMap projection;               // tau_m F(n) -> delta(n)
    std::vector<FMatrix> complement;     // unit vectors spanning a complement of im i_m
    bool descent_ok = true;              // stabilization of tau_m F descends to delta
    std::optional<CheckFailure> descent_failure;
};

namespace detail {

inline void settle_ring(UGFunctor& f, const RingSpec& base) {
    f.ring = base;
    auto fits = [&](const FMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!base.contains(m(i, j))) return false;
        return true;
    };
    bool ok = true;
    for (const auto& level : f.gens)
        for (const auto& m : level) ok = ok && fits(m);
    for (const auto& level : f.gens_inv)
        for (const auto& m : level) ok = ok && fits(m);
    for (const auto& m : f.stab) ok = ok && fits(m);
    if (!ok) f.ring = RingSpec::rational_functions();
}

}  // namespace detail

inline KappaDelta kappa_delta(const UGFunctor& f, const LongMoodySystem& sys, int m = 1) {
    UGFunctor t = translate(f, sys, m);
    const int top = t.horizon;
    KappaDelta out;
    std::vector<FMatrix> incl, kernels, kernel_left, proj, comp;
    for (int n = 0; n <= top; ++n) {
        FMatrix a = stab_composite(f, n, m);
        auto rk = mat_rank_kernel(a);
        auto li = left_inverse(rk.kernel);
        if (!li) throw Error(ErrorKind::Singular, "kernel basis is not of full rank");
        incl.push_back(a);
        kernels.push_back(rk.kernel);
        kernel_left.push_back(*li);
        proj.push_back(rk.coker.projection);
        comp.push_back(rk.coker.inclusion);
    }
    auto& kap = out.kappa;
    auto& del = out.delta;
    kap.horizon = del.horizon = top;
    kap.label = "kappa" + std::to_string(m) + "(" + f.label + ")";
    del.label = "delta" + std::to_string(m) + "(" + f.label + ")";
    for (int n = 0; n <= top; ++n) {
        auto un = static_cast<std::size_t>(n);
        kap.dims.push_back(kernels[un].cols());
        del.dims.push_back(comp[un].cols());
        kap.gens.emplace_back();
        kap.gens_inv.emplace_back();
        del.gens.emplace_back();
        del.gens_inv.emplace_back();
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            for (int e : {1, -1}) {
                auto x = solve_in_span(kernels[un], kernel_left[un], FMatrix(f.generator(n, i, e) * kernels[un]));
                if (!x) throw Error(ErrorKind::NaturalityFailure, "kernel not invariant at level " + std::to_string(n));
                (e > 0 ? kap.gens : kap.gens_inv).back().push_back(*x);
                const FMatrix& g = t.generator(n, i, e);
                if (!(proj[un] * g * incl[un]).is_zero_matrix())
                    throw Error(ErrorKind::NaturalityFailure, "image not invariant at level " + std::to_string(n));
                (e > 0 ? del.gens : del.gens_inv).back().push_back(proj[un] * g * comp[un]);
            }
        }
        if (n == top) continue;
        auto x = solve_in_span(kernels[un + 1], kernel_left[un + 1], FMatrix(f.stabilization(n) * kernels[un]));
        if (!x) throw Error(ErrorKind::StabilizationDescentFailure, "kernel not carried into the next kernel");
        kap.stab.push_back(*x);
        const FMatrix& ts = t.stabilization(n);
        if (out.descent_ok && !(proj[un + 1] * ts * incl[un]).is_zero_matrix()) {
            out.descent_ok = false;
            out.descent_failure = CheckFailure{"stabilization-descent", n, "image of i_m not preserved"};
        }
        del.stab.push_back(proj[un + 1] * ts * comp[un]);
    }
    if (!out.descent_ok) del.stab.clear();
    detail::settle_ring(kap, f.ring);
    detail::settle_ring(del, f.ring);
    kap.finalize();
    del.finalize();
    out.omega.components = std::move(kernels);
    out.projection.components = std::move(proj);
    out.complement = std::move(comp);
    return out;
}

}  // namespace lmforge
