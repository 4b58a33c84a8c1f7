#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace lmforge;
using lmtest::random_laurent;
using lmtest::random_rational;

namespace {

// Plain elimination over Q on nested vectors; independent of the library's rref.
std::size_t oracle_rank(std::vector<std::vector<Rational>> a) {
    std::size_t rank = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            Rational f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> eval_nested(const Matrix<RatFunc>& m, const Rational& q) {
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).eval(q);
    return out;
}

// Generic rank as the maximum rank over a fixed set of points.
std::size_t oracle_generic_rank(const Matrix<RatFunc>& m) {
    std::size_t best = 0;
    for (long p : {2L, 3L, -5L, 7L, 11L})
        for (long q : {1L, 3L}) best = std::max(best, oracle_rank(eval_nested(m, make_rational(p, q))));
    return best;
}

}  // namespace

TEST_CASE("laurent serialization", "[exactalg]") {
    LaurentPoly p = LaurentPoly(1) - LaurentPoly::t(-2);
    CHECK(p.to_string() == "1 + -1*t^-2");
    CHECK(LaurentPoly::parse("1 + -1*t^-2") == p);
    CHECK(LaurentPoly::parse("1 - t^-2") == p);
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::parse("2/3*t^2 + t - 5").to_string() == "2/3*t^2 + 1*t^1 + -5");
    CHECK(LaurentPoly::parse("-t") == -LaurentPoly::t());
    CHECK_THROWS_AS(LaurentPoly::parse("t^"), Error);
    CHECK_THROWS_AS(LaurentPoly::parse("t t"), Error);
}

TEST_CASE("laurent arithmetic agrees with evaluation", "[exactalg][property]") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        LaurentPoly a = random_laurent(rng), b = random_laurent(rng);
        Rational q = make_rational(std::uniform_int_distribution<long>(1, 9)(rng), 7);
        CHECK((a + b).eval(q) == a.eval(q) + b.eval(q));
        CHECK((a * b).eval(q) == a.eval(q) * b.eval(q));
        CHECK((a - a).is_zero());
        CHECK(LaurentPoly::parse(a.to_string()) == a);
        if (!b.is_zero()) {
            auto quotient = exact_div(a * b, b);
            REQUIRE(quotient);
            CHECK(*quotient == a);
        }
    }
}

TEST_CASE("zero specialization is reported", "[exactalg]") {
    CHECK_THROWS_AS(LaurentPoly::t(-1).eval(0), Error);
    RatFunc f(LaurentPoly(1), LaurentPoly::parse("t - 1"));
    CHECK_THROWS_AS(f.eval(1), Error);
    CHECK(f.eval(2) == 1);
}

TEST_CASE("rational functions normalize canonically", "[exactalg]") {
    LaurentPoly tm1 = LaurentPoly::parse("t - 1");
    LaurentPoly tp1 = LaurentPoly::parse("t + 1");
    RatFunc f(tm1 * tp1, tm1 * LaurentPoly::t(2));
    CHECK(f.is_laurent());
    CHECK(f == RatFunc(tp1 * LaurentPoly::t(-2)));
    RatFunc g(LaurentPoly(2), LaurentPoly::parse("2*t + 4"));
    CHECK(g.to_string() == "(1)/(1*t^1 + 2)");
    CHECK(RatFunc::parse(g.to_string()) == g);
    CHECK(RatFunc::parse("t^-1") == RatFunc::t(-1));

    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        RatFunc a = lmtest::random_ratfunc(rng), b = lmtest::random_ratfunc(rng);
        Rational q = make_rational(13, 5);
        CHECK((a + b).eval(q) == a.eval(q) + b.eval(q));
        CHECK((a * b).eval(q) == a.eval(q) * b.eval(q));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(RatFunc::parse(a.to_string()) == a);
    }
}

TEST_CASE("ring membership", "[exactalg]") {
    CHECK(RingSpec::integers().contains(RatFunc(3)));
    CHECK_FALSE(RingSpec::integers().contains(RatFunc(make_rational(1, 2))));
    CHECK_FALSE(RingSpec::rationals().contains(RatFunc::t()));
    CHECK(RingSpec::laurent().contains(RatFunc::t(-3)));
    CHECK_FALSE(RingSpec::laurent().contains(RatFunc(LaurentPoly(1), LaurentPoly::parse("t+1"))));
    CHECK(RingSpec::rational_functions().contains(RatFunc(LaurentPoly(1), LaurentPoly::parse("t+1"))));
}

TEST_CASE("kron and block helpers", "[exactalg]") {
    QMatrix a = QMatrix::from_rows({{1, 2}, {3, 4}});
    QMatrix b = QMatrix::from_rows({{0, 1}, {1, 0}});
    QMatrix k = kron(a, b);
    CHECK(k(0, 1) == 1);
    CHECK(k(1, 0) == 1);
    CHECK(k(2, 1) == 3);
    CHECK(k(3, 0) == 3);
    CHECK(k(3, 3) == 0);
    CHECK(kron(a, b) * kron(b, a) == kron(QMatrix(a * b), QMatrix(b * a)));
    CHECK(direct_sum(a, b).block(2, 2, 2, 2) == b);
}

TEST_CASE("rank routes agree", "[exactalg][property]") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 2 + trial % 4, c = 2 + (trial / 4) % 4, k = 1 + trial % 3;
        Matrix<RatFunc> m = lmtest::random_low_rank(rng, r, c, k);
        std::size_t expected = oracle_generic_rank(m);
        CHECK(rank(m) == expected);
        CHECK(bareiss(m).rank == expected);
        CHECK(rank_by_specialization(m, rng) == expected);
    }
}

TEST_CASE("rank over Q(t) with genuine fractions", "[exactalg]") {
    // Rows proportional over Q(t) but not over Q.
    RatFunc a(LaurentPoly(1), LaurentPoly::parse("t - 1"));
    Matrix<RatFunc> m(2, 2);
    m(0, 0) = a;
    m(0, 1) = RatFunc::t();
    m(1, 0) = a * RatFunc::t(2);
    m(1, 1) = RatFunc::t(3);
    CHECK(rank(m) == 1);
    CHECK(bareiss(m).rank == 1);
    CHECK(rank_at(m, 2) == 1);
    CHECK_THROWS_AS(rank_at(m, 1), Error);
}

TEST_CASE("kernel and cokernel", "[exactalg][property]") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 2 + trial % 4, c = 2 + (trial / 3) % 4, k = 1 + trial % 3;
        Matrix<RatFunc> m = lmtest::random_low_rank(rng, r, c, k);
        auto rk = mat_rank_kernel(m);
        CHECK(rk.kernel.rows() == c);
        CHECK(rk.kernel.cols() == c - rk.rank);
        CHECK((m * rk.kernel).is_zero_matrix());
        CHECK(rank(rk.kernel) == rk.kernel.cols());
        CHECK(rk.coker.inclusion.cols() == r - rk.rank);
        CHECK((rk.coker.projection * m).is_zero_matrix());
        CHECK((rk.coker.projection * rk.coker.inclusion).is_identity());
        // inclusion columns are standard unit vectors
        for (std::size_t j = 0; j < rk.coker.inclusion.cols(); ++j) {
            int ones = 0;
            for (std::size_t i = 0; i < r; ++i) ones += rk.coker.inclusion(i, j) == RatFunc(1) ? 1 : 0;
            CHECK(ones == 1);
        }
    }
}

TEST_CASE("cokernel complement follows the first-pivot rule", "[exactalg]") {
    // Image spanned by e1 + e2; e1 is still independent of it, e2 is not.
    QMatrix m = QMatrix::from_rows({{1}, {1}, {0}});
    auto ck = cokernel(m);
    REQUIRE(ck.inclusion.cols() == 2);
    CHECK(ck.inclusion(0, 0) == 1);
    CHECK(ck.inclusion(2, 1) == 1);
    CHECK((ck.projection * m).is_zero_matrix());
}

TEST_CASE("inverse and left inverse", "[exactalg]") {
    Matrix<RatFunc> b(2, 2);
    b(0, 0) = RatFunc(1) - RatFunc::t();
    b(0, 1) = RatFunc::t();
    b(1, 0) = RatFunc(1);
    auto inv = inverse(b);
    REQUIRE(inv);
    CHECK((*inv * b).is_identity());
    CHECK((*inv)(1, 0) == RatFunc::t(-1));
    CHECK_FALSE(inverse(Matrix<RatFunc>(2, 2)));

    QMatrix tall = QMatrix::from_rows({{1, 0}, {2, 1}, {0, 3}});
    auto li = left_inverse(tall);
    REQUIRE(li);
    CHECK((*li * tall).is_identity());
    QMatrix y = tall * QMatrix::from_rows({{2}, {-1}});
    auto x = solve_in_span(tall, *li, y);
    REQUIRE(x);
    CHECK((*x)(0, 0) == 2);
    CHECK_FALSE(solve_in_span(tall, *li, QMatrix::from_rows({{1}, {0}, {0}})));
}
