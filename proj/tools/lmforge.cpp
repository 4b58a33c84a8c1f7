#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lmforge/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace lmforge::cli;
    RunConfig cfg;
    CLI::App app{"lmforge: Long-Moody constructions and polynomiality checks"};
    app.require_subcommand(1, 1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--system", cfg.system, "built-in system name or path to a JSON config");
        sub->add_option("--functor", cfg.functor, "constant | character:<u> | burau:<s> | perm | path");
        sub->add_option("--n-max", cfg.n_max, "top level");
        sub->add_option("--seed", cfg.seed, "seed for randomized spot checks");
        sub->add_option("--jobs", cfg.jobs, "worker threads");
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
        sub->add_flag("--emit-matrices", cfg.emit_matrices, "include full matrices in the report");
    };

    auto* verify = app.add_subcommand("verify", "check the system axioms (and a functor, if given)");
    add_common(verify);
    auto* apply = app.add_subcommand("apply", "apply the Long-Moody functor");
    add_common(apply);
    apply->add_option("--iterations", cfg.iterations, "number of applications");
    auto* degree = app.add_subcommand("degree", "polynomial degree on the horizon");
    add_common(degree);
    degree->add_option("--mode", cfg.mode, "strong | very-strong | weak");
    degree->add_option("--window", cfg.window, "stabilization window for weak mode");
    degree->add_option("--apply-lm", cfg.apply_lm, "apply the Long-Moody functor first");
    auto* split = app.add_subcommand("split", "verify the splitting of delta_1 LM(F)");
    add_common(split);
    split->add_option("--apply-lm", cfg.apply_lm, "apply the Long-Moody functor first");
    auto* restrict = app.add_subcommand("restrict", "decompose F(n) over S_m");
    add_common(restrict);
    restrict->add_option("--apply-lm", cfg.apply_lm, "apply the Long-Moody functor first");
    restrict->add_option("--level", cfg.level, "ambient level n");
    restrict->add_option("--m", cfg.m, "symmetric group S_m, m <= 4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.functor_given = app.get_subcommands().front()->count("--functor") > 0;

    Outcome result = run(cfg);
    std::string text = render(result.report);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(cfg.out, std::ios::binary);
        if (!os) {
            std::cerr << "cannot write " << cfg.out << "\n";
            return kConfigError;
        }
        os << text;
    }
    if (result.code != kOk && result.report.contains("error"))
        std::cerr << result.report["error"]["message"].get<std::string>() << "\n";
    return result.code;
}
