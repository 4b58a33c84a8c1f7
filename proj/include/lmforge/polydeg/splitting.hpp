#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lmforge/longmoody/lm.hpp"
#include "lmforge/polydeg/kappa_delta.hpp"

namespace lmforge {

struct SplitLevel {
    int n = 0;
    std::size_t phi_size = 0;
    std::size_t delta_lm_dim = 0;       // dim delta_1 LM(F)(n)
    std::size_t delta_expected = 0;     // r d_{n+2} + dim LM(delta_1 F)(n)
    std::size_t kappa_lm_dim = 0;       // dim kappa_1 LM(F)(n)
    std::size_t kappa_expected = 0;     // dim LM(kappa_1 F)(n)
};

struct SplitReport {
    bool ok = true;
    int horizon = 0;
    std::map<std::string, long> checks;
    std::optional<CheckFailure> failure;
    std::vector<SplitLevel> levels;
};

// Phi_n = [upsilon | xi]: (tau_2 F)^{+r}(n) + LM(tau_1 F)(n) -> tau_1 LM(F)(n) = LM(F)(n+1).
// upsilon includes the first r blocks; xi sends block j to block j + r by rho_{n+2}(b^-1 # id).
inline FMatrix splitting_map(const LongMoodySystem& sys, const UGFunctor& f, int n) {
    const std::size_t e = f.dim(n + 2);
    const auto r = static_cast<std::size_t>(sys.r());
    const auto total = static_cast<std::size_t>(sys.rank(n + 1));
    FMatrix phi(total * e, total * e);
    for (std::size_t k = 0; k < r * e; ++k) phi(k, k) = RatFunc(1);
    FMatrix b = evaluate_word(f, sys.braiding_inverse_at(n + 2));
    for (std::size_t j = 0; j < static_cast<std::size_t>(sys.rank(n)); ++j) phi.set_block((j + r) * e, (j + r) * e, b);
    return phi;
}

// Checks at levels 0..horizon that Phi is an isomorphism intertwining the
// actions, that delta_1 LM(F) = (tau_2 F)^{+r} + LM(delta_1 F) (dimensions and
// an explicit induced isomorphism), and that LM of the kernel inclusion of
// kappa_1 F is an intertwining isomorphism onto kappa_1 LM(F).
inline SplitReport verify_splitting(const LongMoodySystem& sys, const UGFunctor& f, int horizon, const LMOptions& opts = {}) {
    if (horizon > f.horizon - 2)
        throw Error(ErrorKind::HorizonExhausted, "splitting at level " + std::to_string(horizon) + " needs input horizon " +
                                                     std::to_string(horizon + 2));
    SplitReport rep;
    rep.horizon = horizon;
    LMOptions quiet = opts;
    UGFunctor lmf = lm_apply(sys, f, opts).functor;
    quiet.verify_system = false;
    UGFunctor tau1 = translate(f, sys, 1);
    UGFunctor tau2 = translate(f, sys, 2);
    UGFunctor lm_tau = lm_apply(sys, tau1, quiet).functor;
    KappaDelta kd_f = kappa_delta(f, sys, 1);
    KappaDelta kd_lm = kappa_delta(lmf, sys, 1);
    UGFunctor lm_delta = lm_generators_only(sys, kd_f.delta, horizon, opts.jobs);
    UGFunctor lm_kappa = lm_generators_only(sys, kd_f.kappa, horizon, opts.jobs);

    auto fail = [&](const std::string& check, int n, const std::string& detail) {
        rep.ok = false;
        if (!rep.failure) rep.failure = CheckFailure{check, n, detail};
    };
    const auto r = static_cast<std::size_t>(sys.r());
    for (int n = 0; n <= horizon; ++n) {
        auto un = static_cast<std::size_t>(n);
        SplitLevel lv;
        lv.n = n;
        const std::size_t e = f.dim(n + 2);
        const auto blocks = static_cast<std::size_t>(sys.rank(n));

        FMatrix phi = splitting_map(sys, f, n);
        lv.phi_size = phi.rows();
        ++rep.checks["phi-invertible"];
        auto phi_inv = inverse(phi);
        if (!phi_inv || !(phi * *phi_inv).is_identity()) fail("phi-invertible", n, "Phi is singular");
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            ++rep.checks["phi-intertwines"];
            GroupWord g = GroupWord::gen(n, i);
            FMatrix src = direct_sum(kron(FMatrix::identity(r), tau2.generator(n, i)), lm_tau.generator(n, i));
            if (evaluate_word(lmf, sys.gamma(g)) * phi != phi * src) fail("phi-intertwines", n, "s" + std::to_string(i));
        }

        // delta_1 commutes with LM up to the extra (tau_2 F)^{+r}.
        lv.delta_lm_dim = kd_lm.delta.dim(n);
        lv.delta_expected = r * e + lm_delta.dim(n);
        ++rep.checks["delta-dimension"];
        if (lv.delta_lm_dim != lv.delta_expected) fail("delta-dimension", n, "dimension mismatch");
        FMatrix lift = direct_sum(FMatrix::identity(r * e), kron(FMatrix::identity(blocks), kd_f.complement[un + 1]));
        FMatrix psi = kd_lm.projection.components[un] * phi * lift;
        ++rep.checks["delta-isomorphism"];
        if (!psi.is_square() || !inverse(psi)) fail("delta-isomorphism", n, "induced map is not invertible");
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            ++rep.checks["delta-intertwines"];
            FMatrix src = direct_sum(kron(FMatrix::identity(r), tau2.generator(n, i)), lm_delta.generator(n, i));
            if (psi * src != kd_lm.delta.generator(n, i) * psi) fail("delta-intertwines", n, "s" + std::to_string(i));
        }

        // kappa_1 LM(F) is LM(kappa_1 F) through LM(Omega_1).
        lv.kappa_lm_dim = kd_lm.kappa.dim(n);
        lv.kappa_expected = lm_kappa.dim(n);
        FMatrix omega = kron(FMatrix::identity(blocks), kd_f.omega.components[un + 1]);
        ++rep.checks["kappa-commutes"];
        if (lv.kappa_lm_dim != lv.kappa_expected || !(lmf.stabilization(n) * omega).is_zero_matrix() ||
            rank(omega) != lv.kappa_lm_dim)
            fail("kappa-commutes", n, "LM(Omega_1) is not onto the kernel");
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            ++rep.checks["kappa-intertwines"];
            if (lmf.generator(n, i) * omega != omega * lm_kappa.generator(n, i))
                fail("kappa-intertwines", n, "s" + std::to_string(i));
        }
        rep.levels.push_back(lv);
    }
    return rep;
}

}  // namespace lmforge
