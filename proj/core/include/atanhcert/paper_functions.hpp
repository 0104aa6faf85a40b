#ifndef ATANHCERT_PAPER_FUNCTIONS_HPP
#define ATANHCERT_PAPER_FUNCTIONS_HPP

#include <atanhcert/interval.hpp>

#include <array>
#include <iosfwd>
#include <stdexcept>

namespace atanhcert
{

// Raised when a point argument leaves the open domain of the functions
// below (|t_i| >= 1, lambda outside [0, 1], ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

using Triple = std::array<double, 3>;
using IntervalTriple = std::array<Interval, 3>;

// (lambda, t1, t2, t3) with lambda in [0, 1] and every |t_i| < 1.
struct SamplePoint {
    double lam = 0.0;
    Triple t{};

    // Validating constructor; throws DomainError.
    static SamplePoint make(double lam, const Triple &t);

    [[nodiscard]] bool valid() const noexcept;

    friend bool operator==(const SamplePoint &, const SamplePoint &) = default;
    // Lexicographic on (lam, t1, t2, t3); used for deterministic tie-breaks.
    friend auto operator<=>(const SamplePoint &, const SamplePoint &) = default;
};

std::ostream &operator<<(std::ostream &os, const SamplePoint &p);

// Interval counterpart of SamplePoint.
struct IntervalPoint {
    Interval lam = Interval::point(0.0);
    IntervalTriple t{Interval::point(0.0), Interval::point(0.0), Interval::point(0.0)};
};

// c = prod(1 + t_i), d = prod(1 - t_i).
struct ProductPair {
    double c = 1.0;
    double d = 1.0;
};

// Every operation has a point overload and an interval overload with the
// same name. Point overloads throw DomainError outside the open domain;
// interval overloads return enclosures of the exact real range.

// t1 + t2 + t3 + t1 t2 t3
[[nodiscard]] double sigma(const Triple &t);
[[nodiscard]] Interval sigma(const IntervalTriple &t);

// t1 t2 + t2 t3 + t3 t1
[[nodiscard]] double e2(const Triple &t);
[[nodiscard]] Interval e2(const IntervalTriple &t);

[[nodiscard]] double prod_plus(const Triple &t);
[[nodiscard]] Interval prod_plus(const IntervalTriple &t);
[[nodiscard]] double prod_minus(const Triple &t);
[[nodiscard]] Interval prod_minus(const IntervalTriple &t);
[[nodiscard]] ProductPair product_pair(const Triple &t);

// sum of atanh(t_i). The interval overload goes through 1/2 ln(c / d).
[[nodiscard]] double f(const Triple &t);
[[nodiscard]] Interval f(const IntervalTriple &t);

// sigma(t) * f(t)
[[nodiscard]] double g(const Triple &t);
[[nodiscard]] Interval g(const IntervalTriple &t);

// 1/2 ln(((1 - lam) + lam c) / ((1 - lam) + lam d)), always via the log form.
[[nodiscard]] double F_lambda(const SamplePoint &p);
[[nodiscard]] Interval F_lambda(const IntervalPoint &p);

// atanh(lam sigma / (1 + lam e2)). Point-only cross-check of F_lambda; not
// used on any rigorous path.
[[nodiscard]] double F_lambda_atanh_form(const SamplePoint &p);

// sigma(t) * F_lambda(p)
[[nodiscard]] double G_lambda(const SamplePoint &p);
[[nodiscard]] Interval G_lambda(const IntervalPoint &p);

// lam g(t) - G_lambda(p), evaluated as sigma * (lam f - F_lambda) with sigma
// appearing once. Nonnegative on the whole domain.
[[nodiscard]] double gap(const SamplePoint &p);
[[nodiscard]] Interval gap(const IntervalPoint &p);

// sum of t_i atanh(t_i)
[[nodiscard]] double weighted_self_sum(const Triple &t);
[[nodiscard]] Interval weighted_self_sum(const IntervalTriple &t);

// Average over the four sign patterns (t1, +-t2, +-t3).
[[nodiscard]] double symmetrize_g(const Triple &t);
[[nodiscard]] Interval symmetrize_g(const IntervalTriple &t);
[[nodiscard]] double symmetrize_G(const SamplePoint &p);
[[nodiscard]] Interval symmetrize_G(const IntervalPoint &p);

// atanh(a / b) as 1/2 ln((b + a) / (b - a)); never forms a / b.
// Requires b > 0 and |a| < b; throws DomainError otherwise.
[[nodiscard]] double atanh_ratio(double a, double b);
[[nodiscard]] Interval atanh_ratio(const Interval &a, const Interval &b);

} // namespace atanhcert

#endif
