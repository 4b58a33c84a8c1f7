#include <catch2/catch_amalgamated.hpp>

#include "lmforge/functors.hpp"
#include "lmforge/longmoody.hpp"
#include "lmforge/polydeg.hpp"

#include "fixtures.hpp"

using namespace lmforge;
using namespace lmforge::fixtures;

namespace {

RatFunc t(int e = 1) { return RatFunc::t(e); }

// Rank over Q at a few rational points; the maximum is the generic rank.
std::size_t oracle_rank(const FMatrix& m) {
    std::size_t best = 0;
    for (long p : {2L, 5L, -3L, 7L}) best = std::max(best, rank(specialize(m, make_rational(p, 3))));
    return best;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Unsupported;
}

}  // namespace

TEST_CASE("translation", "[polydeg]") {
    auto sys = LongMoodySystem::braid_sigma1();
    auto bur = burau_reference(t(), 6);
    auto t1 = translate(bur, sys, 1);
    CHECK(t1.dims == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
    CHECK(verify_compatible(t1, sys).compatible);
    auto t11 = translate(t1, sys, 1);
    auto t2 = translate(bur, sys, 2);
    CHECK(t2.gens == t11.gens);
    CHECK(t2.stab == t11.stab);
    CHECK_NOTHROW(iota(bur, sys, 1));
    CHECK_NOTHROW(iota(bur, sys, 2));
    CHECK(kind_of([&] { translate(make_constant(sys, RingSpec::integers(), 1), sys, 2); }) == ErrorKind::HorizonExhausted);
}

TEST_CASE("kappa and delta of the reference functors", "[polydeg]") {
    auto sys = LongMoodySystem::braid_sigma1();
    auto bur = burau_reference(t(), 6);
    auto kd = kappa_delta(bur, sys, 1);
    CHECK(kd.kappa.is_zero());
    CHECK(kd.delta.dims == std::vector<std::size_t>(6, 1));
    CHECK(kd.descent_ok);
    // delta_1 of Burau: trivial action, stabilization multiplies by the parameter
    for (int n = 0; n <= 5; ++n) {
        for (const auto& g : kd.delta.gens[static_cast<std::size_t>(n)]) CHECK(g.is_identity());
        if (n < 5) CHECK(kd.delta.stabilization(n) == FMatrix::from_rows({{t()}}));
    }
    auto kc = kappa_delta(make_constant(sys, RingSpec::integers(), 4), sys, 1);
    CHECK(kc.delta.is_zero());
    CHECK(kc.kappa.is_zero());
}

TEST_CASE("kappa and delta dimensions match rank counts", "[polydeg][property]") {
    auto sys = LongMoodySystem::braid_sigma1();
    std::vector<UGFunctor> fs = {lm_iterate(sys, make_character(sys, t(), 6), 2).functor, reduced_burau(t(), 5),
                                 truncated_constant(sys, 2, 5), lm_apply(sys, burau_reference(t(), 5)).functor};
    for (const auto& f : fs) {
        INFO(f.label);
        auto kd = kappa_delta(f, sys, 1);
        for (int n = 0; n < f.horizon; ++n) {
            std::size_t rk = oracle_rank(f.stabilization(n));
            CHECK(kd.kappa.dim(n) == f.dim(n) - rk);
            CHECK(kd.delta.dim(n) == f.dim(n + 1) - rk);
            CHECK(kd.kappa.dim(n) + f.dim(n + 1) == f.dim(n) + kd.delta.dim(n));
        }
        CHECK(verify_compatible(kd.kappa, sys).compatible);
        if (kd.descent_ok) CHECK(verify_compatible(kd.delta, sys).compatible);
    }
}

TEST_CASE("strong and very strong degrees", "[polydeg]") {
    auto sys = LongMoodySystem::braid_sigma1();
    auto r = make_constant(sys, RingSpec::integers(), 9);
    for (int k = 0; k <= 2; ++k) {
        auto f = lm_iterate(sys, r, k).functor;
        CHECK(degree(f, sys, DegreeMode::VeryStrong, 7).degree == k);
        CHECK(degree(f, sys, DegreeMode::Strong, 7).degree == k);
    }
    CHECK(degree(make_character(sys, t(), 7), sys, DegreeMode::VeryStrong, 7).degree == 0);
    CHECK(degree(burau_reference(t(), 7), sys, DegreeMode::Strong, 7).degree == 1);
    auto trunc = truncated_constant(sys, 2, 7);
    CHECK(degree(trunc, sys, DegreeMode::Strong, 7).degree == 0);
    auto vs = degree(trunc, sys, DegreeMode::VeryStrong, 7);
    CHECK_FALSE(vs.degree);
    CHECK(vs.note.find("kappa") != std::string::npos);
    auto zero = truncated_constant(sys, -1, 4);
    CHECK(degree(zero, sys, DegreeMode::Strong, 4).degree == -1);
    CHECK(kind_of([&] { degree(r, sys, DegreeMode::Weak, 5); }) == ErrorKind::WeakModeRequired);
}

TEST_CASE("reduced Burau has a degree gap", "[polydeg]") {
    auto sys = LongMoodySystem::braid_sigma1();
    auto red = reduced_burau(t(), 7);
    CHECK(verify_compatible(red, sys).compatible);
    CHECK(red.dims == std::vector<std::size_t>{0, 0, 1, 2, 3, 4, 5, 6});
    CHECK(degree(red, sys, DegreeMode::Strong, 7).degree == 2);
    CHECK(weak_degree(red, sys, 7, 3).degree == 1);
    CHECK_FALSE(degree(red, sys, DegreeMode::VeryStrong, 7).degree);
}

TEST_CASE("weak degree", "[polydeg]") {
    auto sys = LongMoodySystem::braid_sigma1();
    auto r = make_constant(sys, RingSpec::integers(), 9);
    for (int k = 0; k <= 2; ++k) {
        auto rep = weak_degree(lm_iterate(sys, r, k).functor, sys, 7, 3);
        CHECK(rep.degree == k);
        CHECK(rep.heuristic);
    }
    CHECK(weak_degree(burau_reference(t(), 7), sys, 7, 3).degree == 1);
    auto trunc = truncated_constant(sys, 2, 7);
    CHECK(weak_degree(trunc, sys, 7, 3).degree == -1);
    auto sn = stably_null(r, 7, 3);
    CHECK_FALSE(sn.null);
    CHECK(sn.witness_level == 0);
    auto short_window = weak_degree(r, sys, 2, 3);
    CHECK_FALSE(short_window.degree);
}

TEST_CASE("splitting", "[polydeg]") {
    auto braid = LongMoodySystem::braid_sigma1();
    auto sym = LongMoodySystem::symmetric_trivial();
    std::vector<std::pair<LongMoodySystem, UGFunctor>> cases = {
        {braid, make_constant(braid, RingSpec::integers(), 6)},
        {braid, make_character(braid, t(), 6)},
        {braid, burau_reference(t(), 6)},
        {braid, reduced_burau(t(), 6)},
        {braid, truncated_constant(braid, 2, 6)},
        {sym, perm_reference(6)},
        {sym, make_character(sym, RatFunc(-1), 6)},
        {sym, truncated_constant(sym, 3, 6)},
    };
    for (const auto& [sys, f] : cases) {
        INFO(sys.name() << " " << f.label);
        auto rep = verify_splitting(sys, f, 4);
        INFO((rep.failure ? rep.failure->check + " at " + std::to_string(rep.failure->level) : std::string()));
        CHECK(rep.ok);
        CHECK(rep.levels.size() == 5);
    }
    auto rep = verify_splitting(braid, truncated_constant(braid, 2, 6), 4);
    CHECK(rep.levels[1].kappa_lm_dim == 1);
}

TEST_CASE("restriction to small symmetric groups", "[polydeg]") {
    auto sym = LongMoodySystem::symmetric_trivial();
    auto perm = perm_reference(5);
    auto r2 = restrict_decompose(perm, sym, 3, 2);
    CHECK(r2.multiplicities == std::vector<std::pair<std::string, long>>{{"[2]", 2}, {"[1,1]", 1}});
    auto r3 = restrict_decompose(perm, sym, 3, 3);
    CHECK(r3.multiplicities == std::vector<std::pair<std::string, long>>{{"[3]", 1}, {"[2,1]", 1}, {"[1,1,1]", 0}});
    auto r4 = restrict_decompose(perm, sym, 4, 4);
    CHECK(r4.multiplicities[0].second == 1);
    CHECK(r4.multiplicities[1].second == 1);

    auto lm3 = lm_iterate(sym, make_constant(sym, RingSpec::integers(), 6), 3).functor;
    auto d = restrict_decompose(lm3, sym, 3, 2);
    CHECK(d.multiplicities[0].second + d.multiplicities[1].second == 60);
    CHECK(d.multiplicities[0].second > 0);
    CHECK(d.multiplicities[1].second > 0);

    for (const auto& res : {r2, r3, r4, d}) {
        auto table = symmetric_character_table(res.m);
        for (std::size_t c = 0; c < table.classes.size(); ++c) {
            Rational sum = 0;
            for (std::size_t k = 0; k < table.partitions.size(); ++k)
                sum += Rational(res.multiplicities[k].second) * Rational(table.values[k][c]);
            CHECK(sum == res.traces[c]);
        }
    }

    UGFunctor fake = make_constant(sym, RingSpec::integers(), 3);
    fake.gens[2][0] = FMatrix::from_rows({{2}});
    fake.gens_inv[2][0] = FMatrix::from_rows({{make_rational(1, 2)}});
    CHECK(kind_of([&] { restrict_decompose(fake, sym, 2, 2); }) == ErrorKind::NonIntegerMultiplicity);
    CHECK(kind_of([&] { restrict_decompose(perm, LongMoodySystem::braid_trivial(), 3, 2); }) == ErrorKind::Unsupported);
}
