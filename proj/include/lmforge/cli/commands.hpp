#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <json.hpp>

#include "lmforge/functors.hpp"
#include "lmforge/longmoody.hpp"
#include "lmforge/polydeg.hpp"
#include "lmforge/systems.hpp"

namespace lmforge::cli {

inline constexpr const char* kSchema = "lmforge/1";

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kConfigError = 2, kHorizonExhausted = 3 };

struct RunConfig {
    std::string command;
    std::string system = "braid-sigma1";
    std::string functor = "constant";
    int n_max = 6;
    int iterations = 1;
    int apply_lm = 0;
    std::string mode = "strong";
    int window = 3;
    std::uint64_t seed = 20240611;
    int jobs = 1;
    std::string out;
    bool emit_matrices = false;
    int level = 3;
    int m = 2;
    bool functor_given = false;
};

struct Outcome {
    int code = kOk;
    nlohmann::json report;
};

inline RatFunc parse_unit(const std::string& text) {
    LaurentPoly p;
    try {
        p = LaurentPoly::parse(text);
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, "bad unit '" + text + "': " + e.what());
    }
    if (!p.is_unit()) throw Error(ErrorKind::ParseError, "'" + text + "' is not a Laurent unit");
    return RatFunc(p);
}

// "constant" | "character:<unit>" | "burau:<param>" | "perm" | path to a functor config.
inline UGFunctor load_functor(const std::string& selector, const LongMoodySystem& sys, int horizon) {
    if (selector == "constant") return make_constant(sys, RingSpec::integers(), horizon);
    if (selector == "perm") return perm_reference(horizon);
    if (selector.rfind("character:", 0) == 0) return make_character(sys, parse_unit(selector.substr(10)), horizon);
    if (selector.rfind("burau:", 0) == 0) return burau_reference(parse_unit(selector.substr(6)), horizon);
    return functor_from_json(detail::read_json_file(selector));
}

inline nlohmann::json failure_json(const std::optional<CheckFailure>& f) {
    if (!f) return nullptr;
    return {{"check", f->check}, {"level", f->level}, {"detail", f->detail}};
}

inline nlohmann::json system_report_json(const SystemReport& rep) {
    return {{"ok", rep.ok},         {"oracle", rep.oracle},  {"horizon", rep.horizon},
            {"checks", rep.checks}, {"notes", rep.notes},    {"failure", failure_json(rep.failure)}};
}

namespace detail {

inline FreeWord random_free_word(std::mt19937_64& rng, int rank, int len) {
    std::uniform_int_distribution<int> gen(1, rank), sign(0, 1);
    std::vector<Letter> letters;
    for (int i = 0; i < len; ++i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    return FreeWord(letters);
}

inline GroupWord random_group_word(std::mt19937_64& rng, const LongMoodySystem& sys, int n, int len) {
    int k = sys.num_generators(n);
    if (k == 0) return GroupWord::identity(n);
    std::uniform_int_distribution<int> gen(1, k), sign(0, 1);
    std::vector<Letter> letters;
    for (int i = 0; i < len; ++i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    return GroupWord(n, letters);
}

// Random products in H_n x| G_n must map multiplicatively into G_{n+1}.
inline SystemReport semidirect_spot_check(const LongMoodySystem& sys, int horizon, std::uint64_t seed) {
    SystemReport rep;
    rep.system = sys.name();
    rep.oracle = sys.equality_oracle();
    rep.horizon = horizon;
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= horizon && !rep.failure; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            SemidirectElement a{random_free_word(rng, sys.rank(n), 4), random_group_word(rng, sys, n, 3)};
            SemidirectElement b{random_free_word(rng, sys.rank(n), 4), random_group_word(rng, sys, n, 3)};
            lmforge::detail::run_check(rep, "semidirect-homomorphism", n, [&](std::string& why) {
                bool ok = sys.group_equal(semidirect_image(sys, semidirect_mul(sys, a, b)),
                                          semidirect_image(sys, a) * semidirect_image(sys, b));
                if (!ok) why = "h1=" + a.h.to_string() + " g1=" + a.g.to_string() + " h2=" + b.h.to_string() +
                               " g2=" + b.g.to_string();
                return ok;
            });
        }
    }
    return rep;
}

inline nlohmann::json degree_json(const DegreeReport& rep) {
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& s : rep.stages) {
        nlohmann::json js = {{"stage", s.stage},
                             {"horizon", s.horizon},
                             {"dims", s.dims},
                             {"kappa_dims", s.kappa_dims},
                             {"delta_dims", s.delta_dims}};
        js["stably_null"] = s.stably_null ? nlohmann::json(*s.stably_null) : nlohmann::json(nullptr);
        stages.push_back(js);
    }
    nlohmann::json j = {{"mode", mode_name(rep.mode)},
                        {"lower_bound", rep.lower_bound},
                        {"horizon_limited", rep.horizon_limited},
                        {"heuristic", rep.heuristic},
                        {"horizon", rep.horizon},
                        {"window", rep.window},
                        {"note", rep.note},
                        {"stages", stages}};
    j["degree"] = rep.degree ? nlohmann::json(*rep.degree) : nlohmann::json(nullptr);
    return j;
}

inline UGFunctor prepared_functor(const RunConfig& cfg, const LongMoodySystem& sys, int horizon, LMOptions opts) {
    UGFunctor f = load_functor(cfg.functor, sys, horizon + cfg.apply_lm);
    if (cfg.apply_lm > 0) f = lm_iterate(sys, f, cfg.apply_lm, opts).functor;
    return f;
}

}  // namespace detail

inline Outcome cmd_verify(const RunConfig& cfg, const LongMoodySystem& sys) {
    Outcome out;
    bool ok = true;
    int top = cfg.n_max;
    if (sys.horizon() != LongMoodySystem::kUnbounded) top = std::min(top, sys.horizon() - 1);
    if (top < 0) throw Error(ErrorKind::HorizonExceeded, "system config has no verifiable level");
    auto base = verify_system(sys, top);
    out.report["system_checks"] = system_report_json(base);
    ok = ok && base.ok;

    int rel_top = std::min(top, sys.horizon() == LongMoodySystem::kUnbounded ? top : sys.horizon() - 2);
    if (rel_top >= 0) {
        auto rel = verify_reliable(sys, rel_top);
        out.report["reliable_checks"] = system_report_json(rel);
        ok = ok && rel.ok;
    } else {
        out.report["reliable_checks"] = nullptr;
    }

    auto spot = detail::semidirect_spot_check(sys, std::min(top, 4), cfg.seed);
    out.report["spot_checks"] = system_report_json(spot);
    ok = ok && spot.ok;

    if (cfg.functor_given) {
        UGFunctor f = load_functor(cfg.functor, sys, cfg.n_max);
        auto fr = verify_compatible(f, sys);
        out.report["functor_checks"] = {{"compatible", fr.compatible},
                                        {"full_functor", fr.full_functor},
                                        {"horizon", fr.horizon},
                                        {"checks", fr.checks},
                                        {"failure", failure_json(fr.failure)},
                                        {"full_failure", failure_json(fr.full_failure)}};
        ok = ok && fr.compatible && fr.full_functor;
    }
    out.report["n_max"] = top;
    out.report["ok"] = ok;
    out.code = ok ? kOk : kCheckFailure;
    return out;
}

inline Outcome cmd_apply(const RunConfig& cfg, const LongMoodySystem& sys, const LMOptions& opts) {
    if (cfg.iterations < 0) throw Error(ErrorKind::ParseError, "--iterations must be >= 0");
    UGFunctor f = load_functor(cfg.functor, sys, cfg.n_max);
    LMResult res = lm_iterate(sys, f, cfg.iterations, opts);
    Outcome out;
    out.report["n_max"] = cfg.n_max;
    out.report["iterations"] = cfg.iterations;
    out.report["result"] = lm_result_to_json(res);
    out.report["ok"] = true;
    return out;
}

inline Outcome cmd_degree(const RunConfig& cfg, const LongMoodySystem& sys, const LMOptions& opts) {
    DegreeMode mode = parse_mode(cfg.mode);
    UGFunctor f = detail::prepared_functor(cfg, sys, cfg.n_max, opts);
    DegreeReport rep = mode == DegreeMode::Weak ? weak_degree(f, sys, cfg.n_max, cfg.window)
                                                : degree(f, sys, mode, cfg.n_max);
    Outcome out;
    out.report["n_max"] = cfg.n_max;
    out.report["apply_lm"] = cfg.apply_lm;
    out.report["degree_report"] = detail::degree_json(rep);
    if (cfg.emit_matrices) out.report["functor_matrices"] = functor_to_json(f);
    out.report["ok"] = true;
    return out;
}

inline Outcome cmd_split(const RunConfig& cfg, const LongMoodySystem& sys, const LMOptions& opts) {
    UGFunctor f = detail::prepared_functor(cfg, sys, cfg.n_max + 2, opts);
    SplitReport rep = verify_splitting(sys, f, cfg.n_max, opts);
    Outcome out;
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : rep.levels) {
        nlohmann::json jl = {{"n", l.n},
                             {"phi_size", l.phi_size},
                             {"delta_lm_dim", l.delta_lm_dim},
                             {"delta_expected", l.delta_expected},
                             {"kappa_lm_dim", l.kappa_lm_dim},
                             {"kappa_expected", l.kappa_expected}};
        if (cfg.emit_matrices && l.n < f.horizon) jl["phi"] = matrix_to_json(splitting_map(sys, f, l.n));
        levels.push_back(jl);
    }
    out.report["n_max"] = cfg.n_max;
    out.report["apply_lm"] = cfg.apply_lm;
    out.report["split_report"] = {{"ok", rep.ok},
                                  {"horizon", rep.horizon},
                                  {"checks", rep.checks},
                                  {"failure", failure_json(rep.failure)},
                                  {"levels", levels}};
    out.report["ok"] = rep.ok;
    out.code = rep.ok ? kOk : kCheckFailure;
    return out;
}

inline Outcome cmd_restrict(const RunConfig& cfg, const LongMoodySystem& sys, const LMOptions& opts) {
    UGFunctor f = detail::prepared_functor(cfg, sys, std::max(cfg.n_max, cfg.level), opts);
    Restriction rep = restrict_decompose(f, sys, cfg.level, cfg.m);
    nlohmann::json traces = nlohmann::json::object();
    for (std::size_t i = 0; i < rep.classes.size(); ++i) traces[rep.classes[i]] = rational_to_string(rep.traces[i]);
    nlohmann::json mult = nlohmann::json::object();
    for (const auto& [lambda, k] : rep.multiplicities) mult[lambda] = k;
    Outcome out;
    out.report["apply_lm"] = cfg.apply_lm;
    out.report["restriction"] = {{"n", rep.n}, {"m", rep.m}, {"dim", f.dim(rep.n)}, {"traces", traces}, {"multiplicities", mult}};
    out.report["ok"] = true;
    return out;
}

inline int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return kConfigError;
        case ErrorKind::HorizonExhausted: return kHorizonExhausted;
        default: return kCheckFailure;
    }
}

// Runs one command; never throws.
inline Outcome run(const RunConfig& cfg) {
    Outcome out;
    LMOptions opts;
    opts.jobs = std::max(1, cfg.jobs);
    try {
        if (cfg.n_max < 1) throw Error(ErrorKind::ParseError, "--n-max must be >= 1");
        if (cfg.apply_lm < 0) throw Error(ErrorKind::ParseError, "--apply-lm must be >= 0");
        LongMoodySystem sys = load_system(cfg.system);
        if (cfg.command == "verify") out = cmd_verify(cfg, sys);
        else if (cfg.command == "apply") out = cmd_apply(cfg, sys, opts);
        else if (cfg.command == "degree") out = cmd_degree(cfg, sys, opts);
        else if (cfg.command == "split") out = cmd_split(cfg, sys, opts);
        else if (cfg.command == "restrict") out = cmd_restrict(cfg, sys, opts);
        else throw Error(ErrorKind::ParseError, "unknown command '" + cfg.command + "'");
    } catch (const Error& e) {
        out.code = exit_code_for(e.kind());
        out.report = {{"ok", false}, {"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
    } catch (const nlohmann::json::exception& e) {
        out.code = kConfigError;
        out.report = {{"ok", false}, {"error", {{"kind", "ParseError"}, {"message", e.what()}}}};
    }
    out.report["schema"] = kSchema;
    out.report["command"] = cfg.command;
    out.report["system"] = cfg.system;
    out.report["functor"] = cfg.functor;
    out.report["seed"] = cfg.seed;
    out.report["exit_code"] = out.code;
    return out;
}

inline std::string render(const nlohmann::json& report) { return report.dump(2) + "\n"; }

}  // namespace lmforge::cli
