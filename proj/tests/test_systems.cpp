#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lmforge/systems.hpp"

using namespace lmforge;

namespace {

LongMoodySystem with_sigma(const LongMoodySystem& base, int top,
                           const std::function<std::string(int n, int k, const std::string&)>& edit) {
    auto j = system_to_json(base, top);
    for (auto& lv : j["levels"]) {
        if (!lv.contains("sigma")) continue;
        int n = lv["n"].get<int>();
        for (std::size_t k = 0; k < lv["sigma"].size(); ++k)
            lv["sigma"][k] = edit(n, static_cast<int>(k) + 1, lv["sigma"][k].get<std::string>());
    }
    return system_from_json(j);
}

GroupWord random_group_word(std::mt19937_64& rng, int level, int gens, int len) {
    std::uniform_int_distribution<int> g(1, gens), s(0, 1);
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) ls.push_back({g(rng), s(rng) ? 1 : -1});
    return GroupWord(level, ls);
}

FreeWord random_free_word(std::mt19937_64& rng, int gens, int len) {
    std::uniform_int_distribution<int> g(1, gens), s(0, 1);
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) ls.push_back({g(rng), s(rng) ? 1 : -1});
    return FreeWord(ls);
}

}  // namespace

TEST_CASE("built-in systems are coherent and reliable", "[systems]") {
    for (const auto& name : LongMoodySystem::builtin_names()) {
        INFO(name);
        auto sys = LongMoodySystem::builtin(name);
        auto rep = verify_system(sys, 6);
        INFO((rep.failure ? rep.failure->check + " " + rep.failure->detail : std::string()));
        CHECK(rep.ok);
        CHECK(rep.checks["coherence"] > 0);
        auto rel = verify_reliable(sys, 5);
        INFO((rel.failure ? rel.failure->check + " " + rel.failure->detail : std::string()));
        CHECK(rel.ok);
    }
}

TEST_CASE("braiding acts as a swap", "[systems]") {
    CHECK(verify_reliable(LongMoodySystem::symmetric_trivial(), 2).notes["braiding_strict_swap"]);
    // For braids the second image is only a conjugate of x_1.
    CHECK_FALSE(verify_reliable(LongMoodySystem::braid_sigma1_positive(), 2).notes["braiding_strict_swap"]);
    CHECK_FALSE(verify_reliable(LongMoodySystem::braid_sigma1(), 2).notes["braiding_strict_swap"]);
}

TEST_CASE("artin action is faithful on small words", "[systems]") {
    auto sys = LongMoodySystem::braid_sigma1();
    auto w = [](const char* s) { return GroupWord::parse(4, s); };
    CHECK(sys.group_equal(w("s1 s2 s1"), w("s2 s1 s2")));
    CHECK(sys.group_equal(w("s1 s3"), w("s3 s1")));
    CHECK_FALSE(sys.group_equal(w("s1 s2"), w("s2 s1")));
    CHECK_FALSE(sys.group_equal(w("s1 s1"), w("e")));
    auto sym = LongMoodySystem::symmetric_trivial();
    CHECK(sym.group_equal(w("s1 s1"), w("e")));
    CHECK_FALSE(sym.group_equal(w("s1 s2"), w("s2 s1")));
    CHECK(sym.equality_oracle() == "permutation");
    CHECK(sys.equality_oracle() == "artin-action");
}

TEST_CASE("sigma words of the braid systems", "[systems]") {
    auto neg = LongMoodySystem::braid_sigma1();
    CHECK(neg.sigma_generator(1, 1).to_string() == "s1^-1 s1^-1");
    CHECK(neg.sigma_generator(2, 2).to_string() == "s1 s2^-1 s2^-1 s1^-1");
    auto pos = LongMoodySystem::braid_sigma1_positive();
    CHECK(pos.sigma_generator(2, 2).to_string() == "s1^-1 s2 s2 s1");
    CHECK(LongMoodySystem::braid_trivial().sigma_is_trivial(5));
    CHECK_FALSE(neg.sigma_is_trivial(5));
    CHECK(neg.braiding_inverse_at(4, 2).to_string() == "s2 s1");
}

TEST_CASE("mismatched conventions are caught", "[systems]") {
    // standard Artin action with positive squares is not coherent
    auto mixed = with_sigma(LongMoodySystem::braid_sigma1(), 5, [](int n, int k, const std::string&) {
        return LongMoodySystem::braid_sigma1_positive().sigma_generator(n, k).to_string();
    });
    auto rep = verify_system(mixed, 4);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.failure);
    CHECK(rep.failure->check == "coherence");

    // sigma(x_1) = s_1 at every level
    auto corrupted = with_sigma(LongMoodySystem::braid_sigma1(), 5, [](int, int k, const std::string& w) {
        return k == 1 ? std::string("s1") : w;
    });
    auto bad = verify_system(corrupted, 4);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failure);
    CHECK(bad.failure->level == 2);
}

TEST_CASE("custom config round trip", "[systems]") {
    for (const auto& name : LongMoodySystem::builtin_names()) {
        auto sys = LongMoodySystem::builtin(name);
        auto custom = system_from_json(system_to_json(sys, 6));
        CHECK(custom.kind() == SystemKind::Custom);
        CHECK(custom.horizon() == 6);
        for (int n = 0; n <= 5; ++n) {
            CHECK(custom.num_generators(n) == sys.num_generators(n));
            for (int k = 1; k <= sys.rank(n); ++k) CHECK(custom.sigma_generator(n, k) == sys.sigma_generator(n, k));
            for (int i = 1; i <= sys.num_generators(n); ++i)
                CHECK(custom.action_generator(n, i, -1) == sys.action_generator(n, i, -1));
        }
        CHECK(verify_system(custom, 5).ok);
        CHECK(verify_reliable(custom, 4).ok);
        CHECK_THROWS_AS(verify_system(custom, 6), Error);
    }
}

TEST_CASE("config errors", "[systems]") {
    auto j = system_to_json(LongMoodySystem::braid_sigma1(), 3);
    j["levels"][2]["g_generators"][0] = nlohmann::json::array({"x1"});
    CHECK_THROWS_AS(system_from_json(j), Error);
    auto k = system_to_json(LongMoodySystem::braid_sigma1(), 3);
    k.erase("r");
    try {
        system_from_json(k);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
    CHECK_THROWS_AS(load_system("no-such-system.json"), Error);
    CHECK_THROWS_AS(LongMoodySystem::braid_sigma1().action_generator(3, 3, 1), Error);
}

TEST_CASE("semidirect product and its image", "[systems][property]") {
    std::mt19937_64 rng(8);
    for (const auto& name : LongMoodySystem::builtin_names()) {
        auto sys = LongMoodySystem::builtin(name);
        int n = 3;
        for (int trial = 0; trial < 15; ++trial) {
            SemidirectElement a{random_free_word(rng, 3, 3), random_group_word(rng, n, 2, 2)};
            SemidirectElement b{random_free_word(rng, 3, 3), random_group_word(rng, n, 2, 2)};
            SemidirectElement c{random_free_word(rng, 3, 2), random_group_word(rng, n, 2, 2)};
            auto ab_c = semidirect_mul(sys, semidirect_mul(sys, a, b), c);
            auto a_bc = semidirect_mul(sys, a, semidirect_mul(sys, b, c));
            CHECK(ab_c.h == a_bc.h);
            CHECK(sys.group_equal(ab_c.g, a_bc.g));
            CHECK(sys.group_equal(semidirect_image(sys, semidirect_mul(sys, a, b)),
                                  semidirect_image(sys, a) * semidirect_image(sys, b)));
        }
    }
}
