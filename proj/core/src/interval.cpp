#include <atanhcert/interval.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace atanhcert
{

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();

// Steps for libm transcendentals; glibc log/log1p are within 1 ulp.
constexpr int kTranscendentalSteps = 2;

double step_down(double x, int steps)
{
    for (int i = 0; i < steps; ++i) {
        x = std::nextafter(x, -kInf);
    }
    return x;
}

double step_up(double x, int steps)
{
    for (int i = 0; i < steps; ++i) {
        x = std::nextafter(x, kInf);
    }
    return x;
}

// log1p at a single exact point, as an enclosure. log1p(0) is exact.
Interval log1p_point(double x)
{
    if (x == 0.0) {
        return Interval::point(0.0);
    }
    const double y = std::log1p(x);
    return Interval::enclose(y, y, kTranscendentalSteps);
}

// atanh at a single exact point via 1/2 log1p(2x / (1 - x)), odd by
// construction.
Interval atanh_point(double x)
{
    if (x == 0.0) {
        return Interval::point(0.0);
    }
    if (x < 0.0) {
        return neg(atanh_point(-x));
    }
    const auto q = div(Interval::point(2.0 * x), sub(Interval::point(1.0), Interval::point(x)));
    return mul(Interval::point(0.5), log1p_iv(q));
}

} // namespace

Interval Interval::make(double lo, double hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw IntervalError("interval endpoints must be finite");
    }
    if (lo > hi) {
        throw IntervalError("interval lower endpoint exceeds upper endpoint");
    }
    return Interval(lo, hi);
}

Interval Interval::enclose(double lo, double hi, int steps)
{
    if (std::isnan(lo) || std::isnan(hi)) {
        throw IntervalError("NaN in interval computation");
    }
    return make(step_down(lo, steps), step_up(hi, steps));
}

double Interval::mid() const noexcept
{
    const double m = 0.5 * lo_ + 0.5 * hi_;
    return std::clamp(m, lo_, hi_);
}

double Interval::mag() const noexcept
{
    return std::max(std::fabs(lo_), std::fabs(hi_));
}

double Interval::mig() const noexcept
{
    if (contains_zero()) {
        return 0.0;
    }
    return std::min(std::fabs(lo_), std::fabs(hi_));
}

std::ostream &operator<<(std::ostream &os, const Interval &x)
{
    const auto old = os.precision(std::numeric_limits<double>::max_digits10);
    os << '[' << x.lo() << ", " << x.hi() << ']';
    os.precision(old);
    return os;
}

Interval add(const Interval &x, const Interval &y)
{
    return Interval::enclose(x.lo() + y.lo(), x.hi() + y.hi());
}

Interval sub(const Interval &x, const Interval &y)
{
    return Interval::enclose(x.lo() - y.hi(), x.hi() - y.lo());
}

Interval mul(const Interval &x, const Interval &y)
{
    const double p1 = x.lo() * y.lo();
    const double p2 = x.lo() * y.hi();
    const double p3 = x.hi() * y.lo();
    const double p4 = x.hi() * y.hi();
    return Interval::enclose(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval div(const Interval &x, const Interval &y)
{
    if (y.contains_zero()) {
        throw IntervalError("denominator straddles zero");
    }
    const double q1 = x.lo() / y.lo();
    const double q2 = x.lo() / y.hi();
    const double q3 = x.hi() / y.lo();
    const double q4 = x.hi() / y.hi();
    return Interval::enclose(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
}

Interval neg(const Interval &x) noexcept
{
    return Interval::make(-x.hi(), -x.lo());
}

Interval sqr(const Interval &x)
{
    const double a = x.mig();
    const double b = x.mag();
    const auto r = Interval::enclose(a * a, b * b);
    return Interval::make(a == 0.0 ? 0.0 : std::max(0.0, r.lo()), r.hi());
}

Interval ln_iv(const Interval &x)
{
    if (x.lo() <= 0.0) {
        throw IntervalError("nonpositive argument to ln");
    }
    // ln(1) = 0 exactly in every conforming libm.
    const double lo = x.lo() == 1.0 ? 0.0 : step_down(std::log(x.lo()), kTranscendentalSteps);
    const double hi = x.hi() == 1.0 ? 0.0 : step_up(std::log(x.hi()), kTranscendentalSteps);
    return Interval::make(lo, hi);
}

Interval log1p_iv(const Interval &x)
{
    if (x.lo() <= -1.0) {
        throw IntervalError("argument to log1p at or below -1");
    }
    return Interval::make(log1p_point(x.lo()).lo(), log1p_point(x.hi()).hi());
}

Interval log_ratio_iv(const Interval &diff, const Interval &den)
{
    if (den.lo() <= 0.0) {
        throw IntervalError("nonpositive denominator in log ratio");
    }
    return log1p_iv(div(diff, den));
}

Interval atanh_iv(const Interval &x)
{
    if (x.lo() <= -1.0 || x.hi() >= 1.0) {
        throw IntervalError("atanh argument reaches +-1");
    }
    return Interval::make(atanh_point(x.lo()).lo(), atanh_point(x.hi()).hi());
}

std::pair<Interval, Interval> split(const Interval &x)
{
    if (!(x.hi() > x.lo())) {
        throw IntervalError("cannot split a point interval");
    }
    const double m = x.mid();
    return {Interval::make(x.lo(), m), Interval::make(m, x.hi())};
}

Interval hull(const Interval &x, const Interval &y) noexcept
{
    return Interval::make(std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

} // namespace atanhcert
