#pragma once

#include <map>
#include <optional>
#include <string>

#include "lmforge/systems/system.hpp"

namespace lmforge {

struct CheckFailure {
    std::string check;
    int level = 0;
    std::string detail;
};

struct SystemReport {
    bool ok = true;
    std::string system;
    std::string oracle;
    int horizon = 0;
    std::map<std::string, long> checks;  // number of instances checked per kind
    std::optional<CheckFailure> failure;
    std::map<std::string, bool> notes;
};

namespace detail {

template <class F>
bool run_check(SystemReport& rep, const std::string& name, int level, F&& body) {
    if (rep.failure) return false;
    ++rep.checks[name];
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::HorizonExceeded) throw;
        detail = e.what();
        ok = false;
    }
    if (!ok) {
        rep.ok = false;
        rep.failure = CheckFailure{name, level, detail};
    }
    return ok;
}

inline void require_system_horizon(const LongMoodySystem& sys, int needed) {
    if (needed > sys.horizon())
        throw Error(ErrorKind::HorizonExceeded, "verification needs level " + std::to_string(needed) +
                                                    " but the system stops at " + std::to_string(sys.horizon()));
}

}  // namespace detail

// Checks, for every level n <= horizon: generator inverses, the relations of
// G_n under the equality oracle, naturality of the shift embedding, and
// coherence gamma(g) sigma(h) = sigma(A(g) h) gamma(g) in G_{n+1}.
inline SystemReport verify_system(const LongMoodySystem& sys, int horizon) {
    detail::require_system_horizon(sys, horizon + 1);
    SystemReport rep;
    rep.system = sys.name();
    rep.oracle = sys.equality_oracle();
    rep.horizon = horizon;
    for (int n = 0; n <= horizon && !rep.failure; ++n) {
        int gens = sys.num_generators(n);
        int m = sys.rank(n);
        for (int i = 1; i <= gens; ++i) {
            detail::run_check(rep, "inverse", n, [&](std::string& why) {
                auto id = FreeEndomorphism::identity(m);
                bool ok = sys.action_generator(n, i, 1).compose(sys.action_generator(n, i, -1)) == id &&
                          sys.action_generator(n, i, -1).compose(sys.action_generator(n, i, 1)) == id;
                if (!ok) why = "A(s" + std::to_string(i) + ") has no two-sided inverse";
                return ok;
            });
        }
        for (const auto& [a, b] : sys.relations(n)) {
            detail::run_check(rep, "relation", n, [&](std::string& why) {
                bool ok = sys.group_equal(a, b);
                if (!ok) why = a.to_string() + " != " + b.to_string();
                return ok;
            });
        }
        for (int i = 1; i <= gens; ++i) {
            GroupWord g = GroupWord::gen(n, i);
            GroupWord gg = sys.gamma(g);
            detail::run_check(rep, "shift-naturality", n, [&](std::string& why) {
                FreeEndomorphism up = sys.action_of(gg);
                FreeEndomorphism here = sys.action_of(g);
                for (int k = 1; k <= sys.r(); ++k)
                    if (up.image(k) != FreeWord::gen(k)) {
                        why = "A(gamma s" + std::to_string(i) + ") moves x" + std::to_string(k);
                        return false;
                    }
                for (int k = 1; k <= m; ++k)
                    if (up.image(k + sys.r()) != sys.shift(here.image(k))) {
                        why = "A(gamma s" + std::to_string(i) + ") does not extend A(s" + std::to_string(i) + ")";
                        return false;
                    }
                return true;
            });
            for (int h = 1; h <= m; ++h) {
                detail::run_check(rep, "coherence", n, [&](std::string& why) {
                    GroupWord lhs = gg * sys.sigma_generator(n, h);
                    GroupWord rhs = sys.sigma_of(n, sys.action_of(g).image(h)) * gg;
                    bool ok = sys.group_equal(lhs, rhs);
                    if (!ok) why = "g = s" + std::to_string(i) + ", h = x" + std::to_string(h);
                    return ok;
                });
            }
        }
    }
    return rep;
}

// Reliability: (b^-1 # id) (id_1 # sigma_n(h)) = sigma_{n+1}(shift h) (b^-1 # id)
// in G_{n+2}, plus the braiding acting on H_2 as a swap of the two copies of H
// (up to conjugating each generator image).
inline SystemReport verify_reliable(const LongMoodySystem& sys, int horizon) {
    detail::require_system_horizon(sys, std::max(horizon + 2, 2));
    SystemReport rep;
    rep.system = sys.name();
    rep.oracle = sys.equality_oracle();
    rep.horizon = horizon;

    FreeEndomorphism ab = sys.action_of(sys.braiding());
    int r = sys.r();
    bool strict = true;
    detail::run_check(rep, "braiding-swap", 2, [&](std::string& why) {
        for (int k = 1; k <= sys.rank(2); ++k) {
            int target = k <= r ? k + r : (k <= 2 * r ? k - r : k);
            const FreeWord& img = ab.image(k);
            if (img != FreeWord::gen(target)) strict = false;
            if (!img.is_conjugate_of_generator(target)) {
                why = "A(b)(x" + std::to_string(k) + ") = " + img.to_string();
                return false;
            }
        }
        return true;
    });
    rep.notes["braiding_strict_swap"] = strict && !rep.failure;

    for (int n = 0; n <= horizon && !rep.failure; ++n) {
        GroupWord binv = sys.braiding_inverse_at(n + 2);
        for (int h = 1; h <= sys.rank(n); ++h) {
            detail::run_check(rep, "reliability", n, [&](std::string& why) {
                GroupWord lhs = binv * sys.gamma(sys.sigma_generator(n, h));
                GroupWord rhs = sys.sigma_of(n + 1, sys.shift(FreeWord::gen(h))) * binv;
                bool ok = sys.group_equal(lhs, rhs);
                if (!ok) why = "h = x" + std::to_string(h);
                return ok;
            });
        }
    }
    return rep;
}

// Element (h, g) of H_n semidirect G_n.
struct SemidirectElement {
    FreeWord h;
    GroupWord g;
};

inline SemidirectElement semidirect_mul(const LongMoodySystem& sys, const SemidirectElement& a,
                                        const SemidirectElement& b) {
    return {a.h * sys.action_of(a.g).apply(b.h), a.g * b.g};
}

// (h, g) -> sigma_n(h) gamma(g) in G_{n+1}; a homomorphism when the system is coherent.
inline GroupWord semidirect_image(const LongMoodySystem& sys, const SemidirectElement& a) {
    return sys.sigma_of(a.g.level(), a.h) * sys.gamma(a.g);
}

}  // namespace lmforge
