#include <atanhcert/proof_steps.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace atanhcert;

TEST_CASE("h vanishes at both ends and on x = 1")
{
    for (double x : {1e-3, 0.2, 1.0, 2.5, 40.0}) {
        CHECK(std::fabs(h(x, 0.0)) <= 1e-14);
        CHECK(std::fabs(h(x, 1.0)) <= 1e-14);
    }
    for (double lam : {0.0, 0.25, 0.9}) {
        CHECK(h(1.0, lam) == 0.0);
    }
    CHECK(h(std::numbers::e, 0.5) == doctest::Approx(0.12011450695827752).epsilon(1e-14));
    CHECK_THROWS_AS((void)h(0.0, 0.5), DomainError);
}

TEST_CASE("h_prime")
{
    for (double x : {0.3, 2.0, 7.0}) {
        CHECK(h_prime(x, 0.0) == doctest::Approx(x - 1.0 - std::log(x)).epsilon(1e-15));
        CHECK(h_prime(x, 0.0) > 0.0);
    }
    CHECK(h_prime(1.0, 0.7) == 0.0);
    CHECK(h_prime(2.5, 0.3) == doctest::Approx(0.11819202674653460).epsilon(1e-14));
    const double step = 1e-6;
    const double fd = (h(3.0, 0.4 + step) - h(3.0, 0.4 - step)) / (2 * step);
    CHECK(std::fabs(h_prime(3.0, 0.4) - fd) <= 1e-6);
}

TEST_CASE("lambda_star")
{
    CHECK(lambda_star(std::numbers::e) == doctest::Approx(0.41802329313067358).epsilon(1e-14));
    CHECK(lambda_star(0.2) == doctest::Approx(0.62866506544038819).epsilon(1e-14));
    CHECK(lambda_star(1.000001) == doctest::Approx(0.49999991666670833).epsilon(1e-12));
    CHECK(lambda_star(0.999999) == doctest::Approx(0.50000008333337500).epsilon(1e-12));
    CHECK(std::fabs(h_prime(5.0, lambda_star(5.0))) <= 1e-12);
    CHECK_THROWS_AS((void)lambda_star(1.0), DomainError);
    CHECK_THROWS_AS((void)lambda_star(-1.0), DomainError);
}

TEST_CASE("quad_analysis coefficients and roots")
{
    const auto q = quad_analysis(3.0, 2.0);
    CHECK(q.A == 2.0);
    CHECK(q.B == 3.0);
    CHECK(q.C == doctest::Approx(-1.4663034623764317).epsilon(1e-14));
    REQUIRE(q.vertex);
    CHECK(*q.vertex < 0.0);

    const auto below = quad_analysis(0.5, 0.25);
    REQUIRE(below.roots.size() == 2);
    CHECK(below.roots[0] == doctest::Approx(0.63085403639172803).epsilon(1e-13));
    CHECK(below.roots[1] == doctest::Approx(2.7024792969416053).epsilon(1e-13));
    CHECK(*below.vertex == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(below.roots[0] <= *below.vertex);
    CHECK(*below.vertex <= below.roots[1]);
    CHECK(below.roots[0] * below.roots[1] == doctest::Approx(below.C / below.A).epsilon(1e-13));
    CHECK(below.roots_in_unit() == 1);

    const auto straddle = quad_analysis(3.0, 0.5);
    REQUIRE(straddle.roots.size() == 2);
    CHECK(straddle.roots[0] == doctest::Approx(0.34107038060091335).epsilon(1e-13));
    CHECK(straddle.roots[1] == doctest::Approx(1.1589296193990867).epsilon(1e-13));
}

TEST_CASE("quad_analysis with A = 0 is linear")
{
    const auto q = quad_analysis(1.0, 0.5);
    CHECK(q.A == 0.0);
    CHECK_FALSE(q.vertex);
    REQUIRE(q.roots.size() == 1);
    CHECK(q.roots[0] == doctest::Approx(0.55730495911103659).epsilon(1e-13));
}

TEST_CASE("quad_analysis guards")
{
    CHECK_THROWS_AS((void)quad_analysis(2.0, 2.0), DomainError);
    CHECK_THROWS_AS((void)quad_analysis(-1.0, 2.0), DomainError);
    CHECK(quad_analysis(1.0 + 1e-15, 1.0).degenerate);
}

TEST_CASE("premise c > 1 > d gives roots of opposite sign")
{
    const double c = 1.2, d = 0.3;
    REQUIRE(lemma5_condition(c, d));
    const auto q = quad_analysis(c, d);
    REQUIRE(q.roots.size() == 2);
    CHECK(q.roots[0] * q.roots[1] < 0.0);
    CHECK(q.roots_in_unit() <= 1);
}

TEST_CASE("lemma5_condition")
{
    CHECK_FALSE(lemma5_condition(1.1, 1.05));
    CHECK(lemma5_condition(0.5, 0.25));
    CHECK_FALSE(lemma5_condition(1.0, 2.0));
    CHECK(lemma5_premise(1.0, 1.0) == PremiseStatus::degenerate);
}

TEST_CASE("s and its derivative")
{
    CHECK(s({0, 0, 0}) == 0.0);
    CHECK(s({0, 0, 0.5}) == doctest::Approx(-0.04930614433405485).epsilon(1e-14));
    CHECK(s({0.3, -0.2, 0.6}) == doctest::Approx(-0.13593423070897482).epsilon(1e-14));
    CHECK(s_prime(0, 0, 0) == 0.0);
    for (double t3 : {-0.7, -0.1, 0.2, 0.9}) {
        CHECK(s_prime(0.0, 0.4, t3) < 0.0);
    }
    const double step = 1e-6;
    const Triple t{0.2, 0.45, -0.3};
    const double fd = (s({t[0], t[1], t[2] + step}) - s({t[0], t[1], t[2] - step})) / (2 * step);
    CHECK(std::fabs(s_prime(t[0], t[1], t[2]) - fd) <= 1e-6);
}

TEST_CASE("t3_star")
{
    CHECK(t3_star(0.5, 0.5) == -0.8);
    CHECK(t3_star(0.35, -0.35) == 0.0);
    const double t1 = 0.7, t2 = 0.2;
    const Triple t{t1, t2, t3_star(t1, t2)};
    CHECK(std::fabs(s(t)) <= 1e-12);
    const auto [c, d] = product_pair(t);
    CHECK(std::fabs(c - d) / (c + d) <= 1e-13);
}

TEST_CASE("s_prime_roots")
{
    const auto r = s_prime_roots(0.5, 0.5);
    REQUIRE(r);
    CHECK(r->second == doctest::Approx(0.4472135954999579).epsilon(1e-15));
    CHECK(r->first == -r->second);
    CHECK_FALSE(s_prime_roots(0.5, -0.5));
    const auto z = s_prime_roots(0.0, 0.8);
    REQUIRE(z);
    CHECK(z->first == 0.0);
    CHECK(z->second == 0.0);
}

TEST_CASE("Taylor bound")
{
    CHECK(lemma7_taylor_bound(0.5));
    CHECK(taylor_check(0.5).margin == doctest::Approx(0.007639477667388179).epsilon(1e-12));
    CHECK(taylor_check(0.99).verdict == TaylorVerdict::holds);
    const auto tiny = taylor_check(1e-8);
    CHECK(tiny.verdict == TaylorVerdict::inconclusive);
    CHECK(lemma7_taylor_bound(1e-8));
    CHECK_THROWS_AS((void)taylor_check(0.0), DomainError);
}
