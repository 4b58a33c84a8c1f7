#pragma once

#include <optional>
#include <string>

#include "lmforge/functors/constructors.hpp"
#include "lmforge/longmoody/lm.hpp"

namespace lmforge {

struct RecoveryReport {
    bool ok = true;
    int horizon = 0;
    long comparisons = 0;
    std::optional<CheckFailure> failure;
};

// LM of the constant functor against the action on H_1 = Z^{rank}, computed
// from exponent sums.
inline RecoveryReport check_h1_recovery(const LongMoodySystem& sys, int horizon, const LMOptions& opts = {}) {
    auto lm = lm_apply(sys, make_constant(sys, RingSpec::integers(), horizon + 1), opts).functor;
    RecoveryReport rep;
    rep.horizon = horizon;
    for (int n = 0; n <= horizon; ++n)
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            ++rep.comparisons;
            auto h1 = abelianized_jacobian(sys.action_generator(n, i, 1)).map([](const Rational& q) { return RatFunc(q); });
            if (lm.generator(n, i) != h1 && !rep.failure) {
                rep.ok = false;
                rep.failure = CheckFailure{"h1-recovery", n, "s" + std::to_string(i)};
            }
        }
    return rep;
}

// For trivial sigma: LM(F)(g) = LM(R)(g) (x) rho_F(id_1 # g), and the same for
// the stabilizations, with LM(R) as the outer Kronecker factor.
inline RecoveryReport check_trivial_sigma(const LongMoodySystem& sys, const UGFunctor& f, const LMOptions& opts = {}) {
    if (!sys.sigma_is_trivial(f.horizon)) throw Error(ErrorKind::NotTrivialSigma, sys.name() + " has nontrivial sigma");
    auto lmf = lm_apply(sys, f, opts).functor;
    auto lmr = lm_apply(sys, make_constant(sys, f.ring, f.horizon), opts).functor;
    RecoveryReport rep;
    rep.horizon = lmf.horizon;
    auto fail = [&](const std::string& what, int n) {
        rep.ok = false;
        if (!rep.failure) rep.failure = CheckFailure{"trivial-sigma", n, what};
    };
    for (int n = 0; n <= lmf.horizon; ++n) {
        for (int i = 1; i <= sys.num_generators(n); ++i) {
            ++rep.comparisons;
            FMatrix right = evaluate_word(f, sys.gamma(GroupWord::gen(n, i)));
            if (lmf.generator(n, i) != kron(lmr.generator(n, i), right)) fail("s" + std::to_string(i), n);
        }
        if (n < lmf.horizon) {
            ++rep.comparisons;
            FMatrix tau = evaluate_word(f, sys.braiding_inverse_at(n + 2)) * f.stabilization(n + 1);
            if (lmf.stabilization(n) != kron(lmr.stabilization(n), tau)) fail("stabilization", n);
        }
    }
    return rep;
}

}  // namespace lmforge
