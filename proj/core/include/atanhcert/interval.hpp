#ifndef ATANHCERT_INTERVAL_HPP
#define ATANHCERT_INTERVAL_HPP

#include <iosfwd>
#include <stdexcept>
#include <utility>

namespace atanhcert
{

// Raised on violated interval preconditions (empty interval, zero in a
// denominator, logarithm of a nonpositive range, ...).
class IntervalError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Closed interval [lo, hi] of finite binary64 endpoints.
//
// Every operation below returns an interval that contains the exact real
// result for all real inputs drawn from the operands. Outward rounding is
// done by stepping each natively rounded endpoint one representable number
// away from the interior (two steps for libm transcendentals). The rounding
// mode of the FPU is never touched, so all functions are pure and thread
// safe.
class Interval
{
public:
    // [lo, hi] exactly as given. Throws IntervalError if lo > hi or either
    // endpoint is not finite.
    static Interval make(double lo, double hi);
    static Interval point(double x) { return make(x, x); }

    // [lo - steps ulp, hi + steps ulp]; the building block for every
    // outward-rounded result. Throws IntervalError on overflow or NaN.
    static Interval enclose(double lo, double hi, int steps = 1);

    [[nodiscard]] double lo() const noexcept { return lo_; }
    [[nodiscard]] double hi() const noexcept { return hi_; }

    // Rounded to nearest; not an enclosure of the true width.
    [[nodiscard]] double width() const noexcept { return hi_ - lo_; }
    [[nodiscard]] double mid() const noexcept;
    [[nodiscard]] double mag() const noexcept; // max |x| over the interval
    [[nodiscard]] double mig() const noexcept; // min |x| over the interval

    [[nodiscard]] bool is_point() const noexcept { return lo_ == hi_; }
    [[nodiscard]] bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains(const Interval &other) const noexcept
    {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }
    [[nodiscard]] bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }

    friend bool operator==(const Interval &, const Interval &) = default;

private:
    constexpr Interval(double lo, double hi) noexcept : lo_(lo), hi_(hi) {}

    double lo_;
    double hi_;
};

std::ostream &operator<<(std::ostream &os, const Interval &x);

[[nodiscard]] Interval add(const Interval &x, const Interval &y);
[[nodiscard]] Interval sub(const Interval &x, const Interval &y);
[[nodiscard]] Interval mul(const Interval &x, const Interval &y);
// Throws IntervalError("denominator straddles zero") when 0 is in y.
[[nodiscard]] Interval div(const Interval &x, const Interval &y);
// Exact: no widening.
[[nodiscard]] Interval neg(const Interval &x) noexcept;

// Tight square: the result never dips below zero.
[[nodiscard]] Interval sqr(const Interval &x);

// Natural logarithm. Requires x.lo() > 0.
[[nodiscard]] Interval ln_iv(const Interval &x);
// ln(1 + x). Requires x.lo() > -1.
[[nodiscard]] Interval log1p_iv(const Interval &x);
// ln(num / den) evaluated as log1p(diff / den), where diff encloses num - den.
// Callers that know the difference in closed form pass it directly, which
// removes the cancellation of the quotient near 1.
[[nodiscard]] Interval log_ratio_iv(const Interval &diff, const Interval &den);
// Inverse hyperbolic tangent through 1/2 ln((1 + x) / (1 - x)).
// Requires -1 < x.lo() and x.hi() < 1.
[[nodiscard]] Interval atanh_iv(const Interval &x);

// Halves at the midpoint. Both halves share the midpoint endpoint.
[[nodiscard]] std::pair<Interval, Interval> split(const Interval &x);

[[nodiscard]] Interval hull(const Interval &x, const Interval &y) noexcept;

inline Interval operator+(const Interval &x, const Interval &y) { return add(x, y); }
inline Interval operator-(const Interval &x, const Interval &y) { return sub(x, y); }
inline Interval operator*(const Interval &x, const Interval &y) { return mul(x, y); }
inline Interval operator/(const Interval &x, const Interval &y) { return div(x, y); }
inline Interval operator-(const Interval &x) noexcept { return neg(x); }

inline Interval operator+(double a, const Interval &y) { return add(Interval::point(a), y); }
inline Interval operator-(double a, const Interval &y) { return sub(Interval::point(a), y); }
inline Interval operator*(double a, const Interval &y) { return mul(Interval::point(a), y); }

} // namespace atanhcert

#endif
