#ifndef ATANHCERT_PROOF_STEPS_HPP
#define ATANHCERT_PROOF_STEPS_HPP

#include <atanhcert/paper_functions.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace atanhcert
{

// Below this, c - d and ln c - ln d are treated as zero and the quotient
// (c - d) / (ln c - ln d) is not formed.
inline constexpr double kDegenerateGuard = 1e-14;

// h_x(lam) = ln(1 + lam (x - 1)) - lam ln x. Requires x > 0 and
// 1 + lam (x - 1) > 0.
[[nodiscard]] double h(double x, double lam);
// d/d lam of h_x.
[[nodiscard]] double h_prime(double x, double lam);
// Unique root of h_prime(x, .) for x != 1: (x - 1 - ln x) / ((x - 1) ln x).
// Throws DomainError for x == 1 or x <= 0.
[[nodiscard]] double lambda_star(double x);

// Roots of (c-1)(d-1) lam^2 + (c+d-2) lam + 1 - (c-d)/(ln c - ln d).
struct QuadraticAnalysis {
    double A = 0.0; // (c - 1)(d - 1)
    double B = 0.0; // c + d - 2
    double C = 0.0; // 1 - (c - d) / (ln c - ln d); unset when degenerate
    std::vector<double> roots;   // ascending; empty, one (A == 0) or two
    std::optional<double> vertex; // (2 - c - d) / (2 (c - 1)(d - 1)); unset when A == 0
    bool degenerate = false;      // |c - d| or |ln c - ln d| below kDegenerateGuard

    // Number of roots inside [0, 1].
    [[nodiscard]] int roots_in_unit() const noexcept;
};

// Throws DomainError when c or d is nonpositive or c == d.
[[nodiscard]] QuadraticAnalysis quad_analysis(double c, double d);

enum class PremiseStatus { holds, fails, degenerate };

// 0 < c - d < ln c - ln d, with the degenerate guard applied.
[[nodiscard]] PremiseStatus lemma5_premise(double c, double d);
[[nodiscard]] bool lemma5_condition(double c, double d);

// sigma(t) - f(t); negative whenever sigma(t) > 0.
[[nodiscard]] double s(const Triple &t);
// d s / d t3 = 1 + t1 t2 - 1 / (1 - t3^2)
[[nodiscard]] double s_prime(double t1, double t2, double t3);
// Root of s in t3: -(t1 + t2) / (1 + t1 t2). Here prod(1 + t_i) = prod(1 - t_i).
[[nodiscard]] double t3_star(double t1, double t2);
// Roots -+sqrt(t1 t2 / (1 + t1 t2)) of s_prime in t3, if real (t1 t2 >= 0).
[[nodiscard]] std::optional<std::pair<double, double>> s_prime_roots(double t1, double t2);

enum class TaylorVerdict { holds, inconclusive, violated };

// Floor below which the sign of atanh(t) - t - t^3/3 is not asserted.
inline constexpr double kTaylorFloor = 1e-15;

struct TaylorCheck {
    TaylorVerdict verdict = TaylorVerdict::holds;
    double margin = 0.0; // atanh(t) - t - t^3/3 in binary64
};

// Requires 0 < t < 1.
[[nodiscard]] TaylorCheck taylor_check(double t);
// atanh(t) > t + t^3/3; inconclusive margins count as a pass.
[[nodiscard]] bool lemma7_taylor_bound(double t);

} // namespace atanhcert

#endif
