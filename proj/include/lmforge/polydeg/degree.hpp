#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmforge/polydeg/kappa_delta.hpp"

namespace lmforge {

enum class DegreeMode { Strong, VeryStrong, Weak };

inline std::string mode_name(DegreeMode m) {
    switch (m) {
        case DegreeMode::Strong: return "strong";
        case DegreeMode::VeryStrong: return "very-strong";
        case DegreeMode::Weak: return "weak";
    }
    return "?";
}

inline DegreeMode parse_mode(const std::string& s) {
    if (s == "strong") return DegreeMode::Strong;
    if (s == "very-strong") return DegreeMode::VeryStrong;
    if (s == "weak") return DegreeMode::Weak;
    throw Error(ErrorKind::ParseError, "unknown degree mode '" + s + "'");
}

struct DegreeStage {
    int stage = 0;    // this is delta_1^stage F
    int horizon = 0;  // levels available at this stage
    std::vector<std::size_t> dims;
    std::vector<std::size_t> kappa_dims;
    std::vector<std::size_t> delta_dims;
    std::optional<bool> stably_null;  // weak mode only
};

struct DegreeReport {
    DegreeMode mode = DegreeMode::Strong;
    std::optional<int> degree;  // empty when undetermined on the horizon or not very strong
    int lower_bound = -1;
    bool horizon_limited = true;  // every answer is relative to the finite horizon
    bool heuristic = false;       // weak mode: stable nullity tested on a finite window
    int horizon = 0;
    int window = 0;
    std::string note;
    std::vector<DegreeStage> stages;
};

struct StablyNull {
    bool null = true;
    int levels_checked = 0;
    std::optional<int> witness_level;
    std::optional<std::size_t> witness_column;
};

// Every composite s_{n+w-1} ... s_n with n <= horizon - w is zero.
inline StablyNull stably_null(const UGFunctor& f, int horizon, int window) {
    if (window < 1) throw Error(ErrorKind::IndexOutOfRange, "window must be >= 1");
    if (horizon > f.horizon) throw Error(ErrorKind::HorizonExceeded, "horizon beyond the functor");
    StablyNull out;
    for (int n = 0; n + window <= horizon; ++n) {
        ++out.levels_checked;
        FMatrix c = stab_composite(f, n, window);
        for (std::size_t j = 0; j < c.cols(); ++j) {
            bool zero = true;
            for (std::size_t i = 0; i < c.rows() && zero; ++i) zero = c(i, j).is_zero();
            if (!zero) {
                out.null = false;
                out.witness_level = n;
                out.witness_column = j;
                return out;
            }
        }
    }
    return out;
}

namespace detail {

inline DegreeStage stage_record(int k, const UGFunctor& cur, const KappaDelta* kd) {
    DegreeStage s;
    s.stage = k;
    s.horizon = cur.horizon;
    s.dims = cur.dims;
    if (kd) {
        s.kappa_dims = kd->kappa.dims;
        s.delta_dims = kd->delta.dims;
    }
    return s;
}

}  // namespace detail

// Strong: degree d when delta_1^{d+1} F = 0 on the remaining window (the zero
// functor has degree -1). Very strong additionally needs kappa_1 = 0 at every
// stage. Each delta_1 costs one level of horizon.
inline DegreeReport degree(const UGFunctor& f, const LongMoodySystem& sys, DegreeMode mode, int horizon) {
    if (mode == DegreeMode::Weak) throw Error(ErrorKind::WeakModeRequired, "use weak_degree for weak mode");
    if (horizon > f.horizon) throw Error(ErrorKind::HorizonExceeded, "analysis horizon beyond the functor");
    DegreeReport rep;
    rep.mode = mode;
    rep.horizon = horizon;
    UGFunctor cur = truncate(f, horizon);
    for (int k = 0;; ++k) {
        if (cur.is_zero()) {
            rep.degree = k - 1;
            rep.lower_bound = k - 1;
            rep.stages.push_back(detail::stage_record(k, cur, nullptr));
            return rep;
        }
        rep.lower_bound = k;
        if (cur.horizon < 1) {
            rep.stages.push_back(detail::stage_record(k, cur, nullptr));
            rep.note = "horizon exhausted after " + std::to_string(k) + " differences";
            return rep;
        }
        KappaDelta kd = kappa_delta(cur, sys, 1);
        rep.stages.push_back(detail::stage_record(k, cur, &kd));
        if (mode == DegreeMode::VeryStrong && !kd.kappa.is_zero()) {
            rep.note = "kappa_1 is nonzero at stage " + std::to_string(k) + "; not very strong polynomial";
            return rep;
        }
        if (!kd.descent_ok)
            throw Error(ErrorKind::StabilizationDescentFailure,
                        "stage " + std::to_string(k) + ": stabilization does not descend to delta_1");
        cur = std::move(kd.delta);
    }
}

// Smallest d with delta_1^{d+1} F stably null, nullity tested with a fixed window.
inline DegreeReport weak_degree(const UGFunctor& f, const LongMoodySystem& sys, int horizon, int window) {
    if (horizon > f.horizon) throw Error(ErrorKind::HorizonExceeded, "analysis horizon beyond the functor");
    if (!f.has_stabilization()) throw Error(ErrorKind::StabilizationDescentFailure, "functor carries no stabilizations");
    DegreeReport rep;
    rep.mode = DegreeMode::Weak;
    rep.horizon = horizon;
    rep.window = window;
    rep.heuristic = true;
    UGFunctor cur = truncate(f, horizon);
    for (int d = -1;; ++d) {
        DegreeStage stage = detail::stage_record(d + 1, cur, nullptr);
        StablyNull sn = stably_null(cur, cur.horizon, window);
        if (sn.levels_checked == 0) {
            rep.stages.push_back(stage);
            rep.lower_bound = std::max(d, -1);
            rep.note = "window " + std::to_string(window) + " exceeds the remaining horizon at stage " +
                       std::to_string(d + 1);
            return rep;
        }
        stage.stably_null = sn.null;
        rep.stages.push_back(stage);
        if (sn.null) {
            rep.degree = d;
            rep.lower_bound = d;
            return rep;
        }
        rep.lower_bound = d + 1;
        KappaDelta kd = kappa_delta(cur, sys, 1);
        if (!kd.descent_ok)
            throw Error(ErrorKind::StabilizationDescentFailure,
                        "stage " + std::to_string(d + 1) + ": stabilization does not descend to delta_1");
        cur = std::move(kd.delta);
    }
}

}  // namespace lmforge
