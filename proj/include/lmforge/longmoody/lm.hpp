#pragma once

#include <string>
#include <vector>

#include "lmforge/freefox/fox.hpp"
#include "lmforge/functors/verify.hpp"
#include "lmforge/parallel.hpp"
#include "lmforge/systems/verify.hpp"

namespace lmforge {

struct LMOptions {
    bool verify_system = true;  // run verify_system / verify_reliable first
    bool check_output = true;   // verify compatibility of the result
    int jobs = 1;
};

struct LMResult {
    UGFunctor functor;
    std::vector<std::size_t> blocks;      // number of blocks at each level
    std::vector<std::size_t> block_dims;  // size of each block
    std::string system;
    std::string input;
    int iterations = 0;
};

namespace detail {

inline void require_verified(const LongMoodySystem& sys, int horizon) {
    auto rep = verify_system(sys, std::max(horizon - 1, 0));
    if (!rep.ok)
        throw Error(ErrorKind::SystemUnverified, sys.name() + ": " + rep.failure->check + " fails at level " +
                                                     std::to_string(rep.failure->level) + " (" + rep.failure->detail + ")");
    auto rel = verify_reliable(sys, std::max(horizon - 2, 0));
    if (!rel.ok)
        throw Error(ErrorKind::SystemUnverified, sys.name() + ": " + rel.failure->check + " fails at level " +
                                                     std::to_string(rel.failure->level) + " (" + rel.failure->detail + ")");
}

}  // namespace detail

// LM(F)(s_i^exp) at level n. Block (k, j) is
//   rho_{n+1}(sigma_n(D_k(A(g)(x_j)))) * rho_{n+1}(id_1 # g),
// with the Fox derivative expanded linearly. Only generator matrices of F at
// level n + 1 are used.
inline FMatrix lm_generator_matrix(const LongMoodySystem& sys, const UGFunctor& f, int n, int i, int exp) {
    const std::size_t d = f.dim(n + 1);
    const int blocks = sys.rank(n);
    const auto ub = static_cast<std::size_t>(blocks);
    std::vector<FMatrix> sig(ub), sig_inv(ub);
    for (int k = 1; k <= blocks; ++k) {
        GroupWord w = sys.sigma_generator(n, k);
        sig[static_cast<std::size_t>(k - 1)] = evaluate_word(f, w);
        sig_inv[static_cast<std::size_t>(k - 1)] = evaluate_word(f, w.inverse());
    }
    GroupWord g = GroupWord::gen(n, i, exp);
    FreeEndomorphism a = sys.action_of(g);
    FMatrix right = evaluate_word(f, sys.gamma(g));
    FMatrix out(ub * d, ub * d);
    for (int j = 1; j <= blocks; ++j) {
        const auto& ls = a.image(j).letters();
        std::vector<FMatrix> acc(ub, FMatrix(d, d));
        // suffix products of rho(sigma(l_p ... l_m)), right to left
        FMatrix suffix = FMatrix::identity(d);
        for (std::size_t p = ls.size(); p-- > 0;) {
            const Letter& l = ls[p];
            auto k = static_cast<std::size_t>(l.gen - 1);
            if (l.exp > 0) {
                acc[k] = acc[k] + suffix;
                suffix = sig[k] * suffix;
            } else {
                suffix = sig_inv[k] * suffix;
                acc[k] = acc[k] - suffix;
            }
        }
        for (std::size_t k = 0; k < ub; ++k)
            if (!acc[k].is_zero_matrix()) out.set_block(k * d, static_cast<std::size_t>(j - 1) * d, acc[k] * right);
    }
    return out;
}

// Block j of LM(F)(n) goes to block j + r of LM(F)(n+1) via rho_{n+2}(b^-1 # id) s_{n+1}.
inline FMatrix lm_stabilization_matrix(const LongMoodySystem& sys, const UGFunctor& f, int n) {
    const std::size_t d = f.dim(n + 1), e = f.dim(n + 2);
    FMatrix piece = evaluate_word(f, sys.braiding_inverse_at(n + 2)) * f.stabilization(n + 1);
    auto src = static_cast<std::size_t>(sys.rank(n)), dst = static_cast<std::size_t>(sys.rank(n + 1));
    auto r = static_cast<std::size_t>(sys.r());
    FMatrix out(dst * e, src * d);
    for (std::size_t j = 0; j < src; ++j) out.set_block((j + r) * e, j * d, piece);
    return out;
}

// Generator matrices (and inverses) of LM(F) at levels 0..top, without stabilizations.
inline UGFunctor lm_generators_only(const LongMoodySystem& sys, const UGFunctor& f, int top, int jobs = 1) {
    UGFunctor out;
    out.ring = f.ring;
    out.horizon = top;
    out.label = "LM(" + f.label + ")";
    for (int n = 0; n <= top; ++n) out.dims.push_back(static_cast<std::size_t>(sys.rank(n)) * f.dim(n + 1));
    std::vector<std::pair<int, int>> work;
    for (int n = 0; n <= top; ++n)
        for (int i = 1; i <= sys.num_generators(n); ++i) work.emplace_back(n, i);
    std::vector<FMatrix> fwd(work.size()), bwd(work.size());
    parallel_for(work.size(), jobs, [&](std::size_t w) {
        fwd[w] = lm_generator_matrix(sys, f, work[w].first, work[w].second, 1);
        bwd[w] = lm_generator_matrix(sys, f, work[w].first, work[w].second, -1);
    });
    out.gens.resize(static_cast<std::size_t>(top + 1));
    out.gens_inv.resize(static_cast<std::size_t>(top + 1));
    for (std::size_t w = 0; w < work.size(); ++w) {
        out.gens[static_cast<std::size_t>(work[w].first)].push_back(std::move(fwd[w]));
        out.gens_inv[static_cast<std::size_t>(work[w].first)].push_back(std::move(bwd[w]));
    }
    return out;
}

inline LMResult lm_apply(const LongMoodySystem& sys, const UGFunctor& f, const LMOptions& opts = {}) {
    if (f.horizon < 1)
        throw Error(ErrorKind::HorizonExhausted, "LM needs an input horizon of at least 1, got " + std::to_string(f.horizon));
    require_generator_counts(f, sys);
    if (!f.has_stabilization())
        throw Error(ErrorKind::StabilizationDescentFailure, "LM needs the stabilizations of its input");
    if (opts.verify_system) detail::require_verified(sys, f.horizon);
    const int top = f.horizon - 1;

    LMResult res;
    res.functor = lm_generators_only(sys, f, top, opts.jobs);
    for (int n = 0; n < top; ++n) res.functor.stab.push_back(lm_stabilization_matrix(sys, f, n));
    res.functor.finalize();
    for (int n = 0; n <= top; ++n) {
        res.blocks.push_back(static_cast<std::size_t>(sys.rank(n)));
        res.block_dims.push_back(f.dim(n + 1));
    }
    res.system = sys.name();
    res.input = f.label;
    res.iterations = 1;
    if (opts.check_output) {
        auto rep = verify_compatible(res.functor, sys, 0);
        if (!rep.compatible)
            throw Error(ErrorKind::NaturalityFailure, "LM output fails " + rep.failure->check + " at level " +
                                                          std::to_string(rep.failure->level));
    }
    return res;
}

inline LMResult lm_iterate(const LongMoodySystem& sys, const UGFunctor& f, int k, LMOptions opts = {}) {
    if (k < 0) throw Error(ErrorKind::IndexOutOfRange, "negative iteration count");
    if (k > f.horizon)
        throw Error(ErrorKind::HorizonExhausted, std::to_string(k) + " iterations need an input horizon of at least " +
                                                     std::to_string(k) + ", got " + std::to_string(f.horizon));
    LMResult res;
    res.functor = f;
    res.system = sys.name();
    res.input = f.label;
    for (int n = 0; n <= f.horizon; ++n) {
        res.blocks.push_back(1);
        res.block_dims.push_back(f.dim(n));
    }
    for (int it = 0; it < k; ++it) {
        LMResult step = lm_apply(sys, res.functor, opts);
        opts.verify_system = false;
        res.functor = std::move(step.functor);
        res.blocks = std::move(step.blocks);
        res.block_dims = std::move(step.block_dims);
    }
    res.iterations = k;
    if (k > 0) res.functor.label = "LM^" + std::to_string(k) + "(" + f.label + ")";
    return res;
}

}  // namespace lmforge
