#include <atanhcert/proof_steps.hpp>

#include <algorithm>
#include <cmath>

namespace atanhcert
{

namespace
{

void check_h_args(double x, double lam)
{
    if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(lam) || !(1.0 + lam * (x - 1.0) > 0.0)) {
        throw DomainError("h requires x > 0 and 1 + lam (x - 1) > 0");
    }
}

// y - log1p(y), summed as a series near 0 where the subtraction cancels.
double y_minus_log1p(double y)
{
    if (std::fabs(y) < 1e-2) {
        // sum_{k>=2} (-1)^k y^k / k
        double term = y * y;
        double sum = 0.0;
        for (int k = 2; k <= 14; ++k) {
            sum += ((k % 2 == 0) ? 1.0 : -1.0) * term / k;
            term *= y;
        }
        return sum;
    }
    return y - std::log1p(y);
}

} // namespace

double h(double x, double lam)
{
    check_h_args(x, lam);
    if (std::fabs(x - 1.0) >= 0.5 && lam >= 0.0 && lam <= 1.0) {
        // Both terms nonnegative: no cancellation, and lam = 1 gives x exactly.
        return std::log((1.0 - lam) + lam * x) - lam * std::log(x);
    }
    return std::log1p(lam * (x - 1.0)) - lam * std::log(x);
}

double h_prime(double x, double lam)
{
    check_h_args(x, lam);
    return (x - 1.0) / (1.0 + lam * (x - 1.0)) - std::log(x);
}

double lambda_star(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("lambda_star requires x > 0");
    }
    if (x == 1.0) {
        throw DomainError("lambda_star is undefined at x = 1 (h_1 vanishes identically)");
    }
    const double y = x - 1.0;
    const double lx = std::log1p(y);
    return y_minus_log1p(y) / (y * lx);
}

int QuadraticAnalysis::roots_in_unit() const noexcept
{
    return static_cast<int>(
        std::count_if(roots.begin(), roots.end(), [](double r) { return r >= 0.0 && r <= 1.0; }));
}

QuadraticAnalysis quad_analysis(double c, double d)
{
    if (!(c > 0.0) || !(d > 0.0) || !std::isfinite(c) || !std::isfinite(d)) {
        throw DomainError("quad_analysis requires c, d > 0");
    }
    if (c == d) {
        throw DomainError("quad_analysis requires c != d");
    }

    QuadraticAnalysis qa;
    qa.A = (c - 1.0) * (d - 1.0);
    qa.B = c + d - 2.0;
    if (qa.A != 0.0) {
        qa.vertex = (2.0 - c - d) / (2.0 * qa.A);
    }

    const double diff = c - d;
    const double log_diff = std::log1p(diff / d); // ln c - ln d
    if (std::fabs(diff) < kDegenerateGuard || std::fabs(log_diff) < kDegenerateGuard) {
        qa.degenerate = true;
        return qa;
    }
    qa.C = 1.0 - diff / log_diff;

    if (qa.A == 0.0) {
        if (qa.B != 0.0) {
            qa.roots.push_back(-qa.C / qa.B);
        }
        return qa;
    }

    const double disc = qa.B * qa.B - 4.0 * qa.A * qa.C;
    if (disc < 0.0) {
        return qa;
    }
    // Larger-magnitude root first, companion from the product C / A.
    const double q = -0.5 * (qa.B + std::copysign(std::sqrt(disc), qa.B));
    if (q == 0.0) {
        qa.roots = {0.0, 0.0};
        return qa;
    }
    const double r1 = q / qa.A;
    const double r2 = qa.C / q;
    qa.roots = {std::min(r1, r2), std::max(r1, r2)};
    return qa;
}

PremiseStatus lemma5_premise(double c, double d)
{
    if (!(c > 0.0) || !(d > 0.0)) {
        throw DomainError("lemma5 premise requires c, d > 0");
    }
    const double diff = c - d;
    const double log_diff = std::log(c) - std::log(d);
    if (std::fabs(diff) < kDegenerateGuard || std::fabs(log_diff) < kDegenerateGuard) {
        return PremiseStatus::degenerate;
    }
    return (diff > 0.0 && diff < log_diff) ? PremiseStatus::holds : PremiseStatus::fails;
}

bool lemma5_condition(double c, double d)
{
    return lemma5_premise(c, d) == PremiseStatus::holds;
}

double s(const Triple &t)
{
    return sigma(t) - f(t);
}

double s_prime(double t1, double t2, double t3)
{
    if (!(std::fabs(t1) < 1.0 && std::fabs(t2) < 1.0 && std::fabs(t3) < 1.0)) {
        throw DomainError("s_prime requires |t_i| < 1");
    }
    return 1.0 + t1 * t2 - 1.0 / ((1.0 - t3) * (1.0 + t3));
}

double t3_star(double t1, double t2)
{
    if (!(std::fabs(t1) < 1.0 && std::fabs(t2) < 1.0)) {
        throw DomainError("t3_star requires |t1|, |t2| < 1");
    }
    return -(t1 + t2) / (1.0 + t1 * t2);
}

std::optional<std::pair<double, double>> s_prime_roots(double t1, double t2)
{
    if (!(std::fabs(t1) < 1.0 && std::fabs(t2) < 1.0)) {
        throw DomainError("s_prime_roots requires |t1|, |t2| < 1");
    }
    const double p = t1 * t2;
    if (p < 0.0) {
        return std::nullopt;
    }
    const double r = std::sqrt(p / (1.0 + p));
    return std::pair{-r, r};
}

TaylorCheck taylor_check(double t)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw DomainError("taylor_check requires 0 < t < 1");
    }
    TaylorCheck out;
    out.margin = std::atanh(t) - t - t * t * t / 3.0;
    if (out.margin >= kTaylorFloor) {
        out.verdict = TaylorVerdict::holds;
    } else if (out.margin > -kTaylorFloor) {
        out.verdict = TaylorVerdict::inconclusive;
    } else {
        out.verdict = TaylorVerdict::violated;
    }
    return out;
}

bool lemma7_taylor_bound(double t)
{
    return taylor_check(t).verdict != TaylorVerdict::violated;
}

} // namespace atanhcert
