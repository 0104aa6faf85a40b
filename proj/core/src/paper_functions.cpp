#include <atanhcert/paper_functions.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace atanhcert
{

namespace
{

void check_triple(const Triple &t)
{
    for (double ti : t) {
        if (!(std::fabs(ti) < 1.0)) {
            throw DomainError("every t_i must lie in the open interval (-1, 1)");
        }
    }
}

void check_point(const SamplePoint &p)
{
    if (!p.valid()) {
        throw DomainError("sample point outside lambda in [0, 1], |t_i| < 1");
    }
}

bool inside_open_unit(const IntervalTriple &t) noexcept
{
    for (const auto &ti : t) {
        if (ti.lo() <= -1.0 || ti.hi() >= 1.0) {
            return false;
        }
    }
    return true;
}

Interval sigma_natural(const IntervalTriple &t)
{
    return t[0] + t[1] + t[2] + t[0] * t[1] * t[2];
}

// x atanh(x) is even and increasing in |x|.
Interval self_weight(const Interval &x)
{
    const auto at = [](double a) {
        const auto p = Interval::point(a);
        return p * atanh_iv(p);
    };
    return Interval::make(std::max(0.0, at(x.mig()).lo()), at(x.mag()).hi());
}

Triple flip(const Triple &t, double s2, double s3)
{
    return {t[0], s2 * t[1], s3 * t[2]};
}

IntervalTriple flip(const IntervalTriple &t, bool n2, bool n3)
{
    return {t[0], n2 ? neg(t[1]) : t[1], n3 ? neg(t[2]) : t[2]};
}

} // namespace

SamplePoint SamplePoint::make(double lam, const Triple &t)
{
    SamplePoint p{lam, t};
    check_point(p);
    return p;
}

bool SamplePoint::valid() const noexcept
{
    if (!(lam >= 0.0 && lam <= 1.0)) {
        return false;
    }
    for (double ti : t) {
        if (!(std::fabs(ti) < 1.0)) {
            return false;
        }
    }
    return true;
}

std::ostream &operator<<(std::ostream &os, const SamplePoint &p)
{
    const auto old = os.precision(17);
    os << "(lambda=" << p.lam << ", t=(" << p.t[0] << ", " << p.t[1] << ", " << p.t[2] << "))";
    os.precision(old);
    return os;
}

double sigma(const Triple &t)
{
    check_triple(t);
    return t[0] + t[1] + t[2] + t[0] * t[1] * t[2];
}

Interval sigma(const IntervalTriple &t)
{
    if (!inside_open_unit(t)) {
        return sigma_natural(t);
    }
    // d sigma / d t_i = 1 + t_j t_k > 0 on the open cube: evaluate at corners.
    const IntervalTriple lo{Interval::point(t[0].lo()), Interval::point(t[1].lo()),
                            Interval::point(t[2].lo())};
    const IntervalTriple hi{Interval::point(t[0].hi()), Interval::point(t[1].hi()),
                            Interval::point(t[2].hi())};
    return Interval::make(sigma_natural(lo).lo(), sigma_natural(hi).hi());
}

double e2(const Triple &t)
{
    check_triple(t);
    return t[0] * t[1] + t[1] * t[2] + t[2] * t[0];
}

Interval e2(const IntervalTriple &t)
{
    return t[0] * (t[1] + t[2]) + t[1] * t[2];
}

double prod_plus(const Triple &t)
{
    check_triple(t);
    return (1.0 + t[0]) * (1.0 + t[1]) * (1.0 + t[2]);
}

Interval prod_plus(const IntervalTriple &t)
{
    return (1.0 + t[0]) * (1.0 + t[1]) * (1.0 + t[2]);
}

double prod_minus(const Triple &t)
{
    check_triple(t);
    return (1.0 - t[0]) * (1.0 - t[1]) * (1.0 - t[2]);
}

Interval prod_minus(const IntervalTriple &t)
{
    return (1.0 - t[0]) * (1.0 - t[1]) * (1.0 - t[2]);
}

ProductPair product_pair(const Triple &t)
{
    return {prod_plus(t), prod_minus(t)};
}

double f(const Triple &t)
{
    check_triple(t);
    return std::atanh(t[0]) + std::atanh(t[1]) + std::atanh(t[2]);
}

Interval f(const IntervalTriple &t)
{
    // c rises and d falls in every t_i, so ln c - ln d has no dependency loss.
    return 0.5 * (ln_iv(prod_plus(t)) - ln_iv(prod_minus(t)));
}

double g(const Triple &t)
{
    return sigma(t) * f(t);
}

Interval g(const IntervalTriple &t)
{
    return sigma(t) * f(t);
}

double F_lambda(const SamplePoint &p)
{
    check_point(p);
    // numerator - denominator = lam (c - d) = 2 lam sigma exactly.
    const double den = (1.0 - p.lam) + p.lam * prod_minus(p.t);
    const double ratio = 2.0 * p.lam * sigma(p.t) / den;
    if (std::fabs(ratio) <= 0.5) {
        return 0.5 * std::log1p(ratio);
    }
    // Far from c = d the quotient may sit next to -1; both sums below are
    // free of cancellation.
    const double num = (1.0 - p.lam) + p.lam * prod_plus(p.t);
    return 0.5 * (std::log(num) - std::log(den));
}

Interval F_lambda(const IntervalPoint &p)
{
    const auto one = Interval::point(1.0);
    const auto num = 1.0 + p.lam * (prod_plus(p.t) - one);
    const auto den = 1.0 + p.lam * (prod_minus(p.t) - one);
    // The ratio form is tight on narrow boxes but undefined when the
    // quotient enclosure reaches -1 on wide ones.
    auto F = 0.5 * (ln_iv(num) - ln_iv(den));
    const auto q = (2.0 * p.lam * sigma(p.t)) / den;
    if (q.lo() > -1.0) {
        const auto r = 0.5 * log1p_iv(q);
        F = Interval::make(std::max(F.lo(), r.lo()), std::min(F.hi(), r.hi()));
    }
    return F;
}

double F_lambda_atanh_form(const SamplePoint &p)
{
    check_point(p);
    return std::atanh(p.lam * sigma(p.t) / (1.0 + p.lam * e2(p.t)));
}

double G_lambda(const SamplePoint &p)
{
    return sigma(p.t) * F_lambda(p);
}

Interval G_lambda(const IntervalPoint &p)
{
    return sigma(p.t) * F_lambda(p);
}

double gap(const SamplePoint &p)
{
    check_point(p);
    return sigma(p.t) * (p.lam * f(p.t) - F_lambda(p));
}

Interval gap(const IntervalPoint &p)
{
    return sigma(p.t) * (p.lam * f(p.t) - F_lambda(p));
}

double weighted_self_sum(const Triple &t)
{
    check_triple(t);
    return t[0] * std::atanh(t[0]) + t[1] * std::atanh(t[1]) + t[2] * std::atanh(t[2]);
}

Interval weighted_self_sum(const IntervalTriple &t)
{
    return self_weight(t[0]) + self_weight(t[1]) + self_weight(t[2]);
}

double symmetrize_g(const Triple &t)
{
    return 0.25 * (g(t) + g(flip(t, -1.0, 1.0)) + g(flip(t, 1.0, -1.0)) + g(flip(t, -1.0, -1.0)));
}

Interval symmetrize_g(const IntervalTriple &t)
{
    return 0.25
           * (g(t) + g(flip(t, true, false)) + g(flip(t, false, true)) + g(flip(t, true, true)));
}

double symmetrize_G(const SamplePoint &p)
{
    const auto at = [&p](double s2, double s3) { return G_lambda(SamplePoint{p.lam, flip(p.t, s2, s3)}); };
    return 0.25 * (at(1.0, 1.0) + at(-1.0, 1.0) + at(1.0, -1.0) + at(-1.0, -1.0));
}

Interval symmetrize_G(const IntervalPoint &p)
{
    const auto at = [&p](bool n2, bool n3) { return G_lambda(IntervalPoint{p.lam, flip(p.t, n2, n3)}); };
    return 0.25 * (at(false, false) + at(true, false) + at(false, true) + at(true, true));
}

double atanh_ratio(double a, double b)
{
    if (!(b > 0.0) || !(std::fabs(a) < b)) {
        throw DomainError("atanh_ratio requires b > 0 and |a| < b");
    }
    // (b + a) / (b - a) = 1 + 2a / (b - a)
    return 0.5 * std::log1p(2.0 * a / (b - a));
}

Interval atanh_ratio(const Interval &a, const Interval &b)
{
    const auto den = b - a;
    if (b.lo() <= 0.0 || den.lo() <= 0.0 || (b + a).lo() <= 0.0) {
        throw DomainError("atanh_ratio requires b > 0 and |a| < b");
    }
    return 0.5 * log_ratio_iv(2.0 * a, den);
}

} // namespace atanhcert
