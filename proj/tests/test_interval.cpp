#include <atanhcert/interval.hpp>

#include "fuzz.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace atanhcert;

namespace
{

double ulps(double a, double b)
{
    return std::fabs(a - b) / std::numeric_limits<double>::epsilon() / std::max(1.0, std::fabs(a));
}

} // namespace

TEST_CASE("make keeps the endpoints exactly")
{
    const auto x = Interval::make(0.0, 1.0);
    CHECK(x.lo() == 0.0);
    CHECK(x.hi() == 1.0);
    CHECK(Interval::make(0.5, 0.5).is_point());
    CHECK_THROWS_AS((void)Interval::make(1.0, 0.0), IntervalError);
    CHECK_THROWS_AS((void)Interval::make(0.0, INFINITY), IntervalError);
    CHECK_THROWS_AS((void)Interval::make(NAN, 0.0), IntervalError);
}

TEST_CASE("arithmetic contains the exact result")
{
    const auto p = Interval::make(1, 2) * Interval::make(3, 4);
    CHECK(p.contains(Interval::make(3, 8)));
    CHECK(ulps(p.lo(), 3) <= 2);
    CHECK(ulps(p.hi(), 8) <= 2);

    const auto s = Interval::make(-1, 1) + Interval::make(-1, 1);
    CHECK(s.contains(Interval::make(-2, 2)));

    CHECK(mul(Interval::make(-2, 3), Interval::make(-5, 4)).contains(Interval::make(-15, 12)));
    CHECK(sub(Interval::make(1, 2), Interval::make(0.5, 1)).contains(Interval::make(0, 1.5)));
    CHECK(div(Interval::make(1, 2), Interval::make(4, 8)).contains(Interval::make(0.125, 0.5)));
}

TEST_CASE("division rejects a denominator containing zero")
{
    CHECK_THROWS_WITH_AS((void)div(Interval::point(1), Interval::make(-1, 1)), "denominator straddles zero",
                         IntervalError);
    CHECK_THROWS_AS((void)div(Interval::point(1), Interval::make(0, 1)), IntervalError);
}

TEST_CASE("negation is exact and an involution")
{
    const auto x = Interval::make(-0.3, 0.7);
    CHECK(-x == Interval::make(-0.7, 0.3));
    CHECK(-(-x) == x);
}

TEST_CASE("sqr stays nonnegative")
{
    const auto s = sqr(Interval::make(-2, 1));
    CHECK(s.lo() == 0.0);
    CHECK(s.hi() >= 4.0);
    CHECK(sqr(Interval::make(-3, -2)).contains(Interval::make(4, 9)));
}

TEST_CASE("ln_iv")
{
    const auto one = ln_iv(Interval::point(1.0));
    CHECK(one.contains(0.0));
    CHECK(one.width() <= 2 * std::numeric_limits<double>::denorm_min() + 4e-16);

    const auto e = ln_iv(Interval::point(std::exp(1.0)));
    CHECK(e.contains(1.0));
    CHECK_THROWS_WITH_AS((void)ln_iv(Interval::make(0, 1)), "nonpositive argument to ln", IntervalError);
}

TEST_CASE("atanh_iv")
{
    CHECK(atanh_iv(Interval::point(0.0)).contains(0.0));
    const auto h = atanh_iv(Interval::point(0.5));
    CHECK(h.contains(0.5493061443340548));
    CHECK(h.width() < 1e-15);

    const auto sym = atanh_iv(Interval::make(-0.5, 0.5));
    CHECK(sym.lo() == -sym.hi());
    CHECK(sym.contains(Interval::make(-0.5493, 0.5493)));
    CHECK_THROWS_AS((void)atanh_iv(Interval::make(0.0, 1.0)), IntervalError);
    CHECK_THROWS_AS((void)atanh_iv(Interval::make(-1.0, 0.0)), IntervalError);
}

TEST_CASE("log_ratio_iv matches ln(num / den)")
{
    const auto r = log_ratio_iv(Interval::point(1.0), Interval::point(2.0)); // ln(3/2)
    CHECK(r.contains(0.4054651081081644));
    CHECK_THROWS_AS((void)log_ratio_iv(Interval::point(1.0), Interval::make(-1.0, 1.0)), IntervalError);
}

TEST_CASE("shrinking the input never grows ln or atanh")
{
    const auto wide = Interval::make(0.1, 0.9);
    const auto narrow = Interval::make(0.3, 0.6);
    CHECK(ln_iv(wide).contains(ln_iv(narrow)));
    CHECK(atanh_iv(wide).contains(atanh_iv(narrow)));
}

TEST_CASE("split")
{
    const auto [a, b] = split(Interval::make(0, 1));
    CHECK(a == Interval::make(0, 0.5));
    CHECK(b == Interval::make(0.5, 1));
    const auto [c, d] = split(Interval::make(-1, 1));
    CHECK(c == Interval::make(-1, 0));
    CHECK(d == Interval::make(0, 1));
    CHECK_THROWS_AS((void)split(Interval::point(0.5)), IntervalError);
}

TEST_CASE("widening stays within 4 ulp per elementary operation")
{
    const auto x = Interval::point(0.1);
    const auto y = Interval::point(0.7);
    for (const auto &r : {x + y, x - y, x * y, x / y}) {
        CHECK(ulps(r.lo(), r.hi()) <= 4);
    }
}

TEST_CASE("containment fuzz")
{
    const auto stats = testing::containment_fuzz(100'000, 11);
    INFO(stats.first_violation);
    CHECK(stats.violations == 0);
    CHECK(stats.checks > 2'000'000);
}
