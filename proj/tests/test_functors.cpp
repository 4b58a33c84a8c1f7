#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lmforge/functors.hpp"

using namespace lmforge;

namespace {

GroupWord random_group_word(std::mt19937_64& rng, const LongMoodySystem& sys, int level, int len) {
    std::vector<Letter> ls;
    int gens = sys.num_generators(level);
    if (gens == 0) return GroupWord::identity(level);
    std::uniform_int_distribution<int> g(1, gens), s(0, 1);
    for (int i = 0; i < len; ++i) ls.push_back({g(rng), s(rng) ? 1 : -1});
    return GroupWord(level, ls);
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Unsupported;
}

}  // namespace

TEST_CASE("reference functors are compatible", "[functors]") {
    auto braid = LongMoodySystem::braid_sigma1();
    auto sym = LongMoodySystem::symmetric_trivial();

    auto c = make_constant(braid, RingSpec::integers(), 5);
    auto rc = verify_compatible(c, braid);
    CHECK(rc.compatible);
    CHECK(rc.full_functor);

    auto chi = make_character(braid, RatFunc::t(), 5);
    auto rchi = verify_compatible(chi, braid);
    CHECK(rchi.compatible);
    CHECK_FALSE(rchi.full_functor);

    auto bur = burau_reference(RatFunc::t(), 6);
    auto rb = verify_compatible(bur, braid);
    CHECK(rb.compatible);
    CHECK(rb.full_functor);
    CHECK(bur.generator(2, 1) == FMatrix::from_rows({{RatFunc(1) - RatFunc::t(), RatFunc::t()}, {1, 0}}));

    auto perm = perm_reference(6);
    CHECK(verify_compatible(perm, sym).full_functor);
    CHECK(verify_compatible(perm, braid).full_functor);

    auto sign = make_character(sym, RatFunc(-1), 5, RingSpec::integers());
    auto rs = verify_compatible(sign, sym);
    CHECK(rs.compatible);
    CHECK_FALSE(rs.full_functor);
}

TEST_CASE("constructor errors", "[functors]") {
    auto sym = LongMoodySystem::symmetric_trivial();
    auto braid = LongMoodySystem::braid_trivial();
    CHECK(kind_of([&] { make_character(sym, RatFunc::t(), 4); }) == ErrorKind::RelationViolation);
    CHECK(kind_of([&] { make_character(braid, RatFunc(2), 4, RingSpec::integers()); }) == ErrorKind::RingMismatch);
    CHECK(kind_of([&] { make_character(braid, RatFunc(1) + RatFunc::t(), 4); }) == ErrorKind::RingMismatch);
    CHECK(kind_of([&] { direct_sum(make_constant(braid, RingSpec::integers(), 3),
                                   make_constant(braid, RingSpec::integers(), 4)); }) == ErrorKind::HorizonMismatch);
    auto c = make_constant(braid, RingSpec::integers(), 3);
    CHECK(kind_of([&] { evaluate(c, UGMorphism{2, 2, GroupWord::identity(4)}); }) == ErrorKind::HorizonExceeded);
    auto custom = make_constant(sym, RingSpec::integers(), 3);
    custom.gens[3].pop_back();
    custom.gens_inv[3].pop_back();
    CHECK(kind_of([&] { verify_compatible(custom, sym); }) == ErrorKind::IncompatibleRanks);
}

TEST_CASE("sums and products stay compatible", "[functors][property]") {
    auto braid = LongMoodySystem::braid_sigma1();
    auto a = burau_reference(RatFunc::t(), 4);
    auto b = make_character(braid, RatFunc::t(-1), 4);
    auto s = direct_sum(a, b);
    auto p = tensor_product(a, b);
    CHECK(s.dims == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK(p.dims == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(verify_compatible(s, braid).compatible);
    CHECK(verify_compatible(p, braid).compatible);
    CHECK_FALSE(verify_compatible(p, braid).full_functor);
}

TEST_CASE("evaluation respects composition", "[functors][property]") {
    std::mt19937_64 rng(4);
    auto braid = LongMoodySystem::braid_sigma1();
    std::vector<UGFunctor> fs = {burau_reference(RatFunc::t(), 6), make_character(braid, RatFunc::t(2), 6),
                                 tensor_product(burau_reference(RatFunc::t(), 6), make_character(braid, RatFunc::t(), 6))};
    for (const auto& f : fs)
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<int> lv(0, 2), len(0, 4);
            int n = lv(rng), m1 = lv(rng), m2 = lv(rng);
            UGMorphism first{n, m1, random_group_word(rng, braid, n + m1, len(rng))};
            UGMorphism second{n + m1, m2, random_group_word(rng, braid, n + m1 + m2, len(rng))};
            CHECK(evaluate(f, compose(braid, second, first)) == evaluate(f, second) * evaluate(f, first));
        }
}

TEST_CASE("functor json round trip", "[functors]") {
    auto bur = burau_reference(RatFunc::t(), 4);
    auto j = functor_to_json(bur);
    CHECK(j["generators"][2][0][0][0] == "-1*t^1 + 1");
    auto back = functor_from_json(j);
    CHECK(back.dims == bur.dims);
    CHECK(back.gens == bur.gens);
    CHECK(back.gens_inv == bur.gens_inv);
    CHECK(back.stab == bur.stab);
    j["generators"][2][0][0][0] = "1 +";
    CHECK(kind_of([&] { functor_from_json(j); }) == ErrorKind::ParseError);
    auto k = functor_to_json(bur);
    k["ring"] = "integers";
    CHECK(kind_of([&] { functor_from_json(k); }) == ErrorKind::RingMismatch);
}

TEST_CASE("truncation and naturality", "[functors]") {
    auto braid = LongMoodySystem::braid_sigma1();
    auto bur = burau_reference(RatFunc::t(), 5);
    auto t = truncate(bur, 3);
    CHECK(t.horizon == 3);
    CHECK(t.stab.size() == 3);
    FunctorMap id;
    for (int n = 0; n <= 3; ++n) id.components.push_back(FMatrix::identity(t.dim(n)));
    CHECK_NOTHROW(check_natural(braid, t, t, id));
    id.components[2] = id.components[2].scaled(RatFunc(2));
    CHECK_THROWS_AS(check_natural(braid, t, t, id), Error);
}
