#ifndef ATANHCERT_CERTIFIER_HPP
#define ATANHCERT_CERTIFIER_HPP

#include <atanhcert/interval.hpp>
#include <atanhcert/paper_functions.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace atanhcert
{

// Branch-and-bound certification of gap >= 0 over
//   lambda in [0, 1], t in [-1 + delta, 1 - delta]^3.
//
// Boxes are bounded with two enclosures of the same function and the
// tighter lower bound wins:
//
//  * natural:  sigma * (lambda f - F_lambda) in interval arithmetic.
//  * factored: gap = lambda (1 - lambda) sigma^2 K(lambda, e2, sigma), where
//      K = 1/2 int_{-1}^{1} k(1 + e2 + rho sigma) d rho,
//      k(u) = (1 - u) / (u (1 - lambda + lambda u)).
//    dk/dlambda = (1 - u)^2 / (u (1 - lambda + lambda u)^2) >= 0, so K is
//    bounded below by its value at the lowest lambda of the box. Where k is
//    decreasing and convex in u over the box (both checked in interval
//    arithmetic), K is decreasing in e2 and increasing in |sigma|, and the
//    bound is a single corner evaluation. Otherwise K >= K(0) = ln(c/d)/(c-d) - 1.
//
// The factored form keeps the lambda(1 - lambda) and sigma^2 factors exact,
// which is what makes boxes touching lambda in {0, 1} or sigma = 0 provable
// in relaxed mode.

enum class CertMode { relaxed, strict_interior };
enum class Enclosure { factored, natural };
enum class CertStatus { proved, refuted, inconclusive };

[[nodiscard]] std::string_view to_string(CertMode m);
[[nodiscard]] std::string_view to_string(Enclosure e);
[[nodiscard]] std::string_view to_string(CertStatus s);
[[nodiscard]] std::optional<CertMode> parse_cert_mode(std::string_view s);
[[nodiscard]] std::optional<Enclosure> parse_enclosure(std::string_view s);
[[nodiscard]] std::optional<CertStatus> parse_cert_status(std::string_view s);

struct CertConfig {
    CertMode mode = CertMode::relaxed;
    double epsilon = 1e-9;       // relaxed: prove gap >= -epsilon
    double delta_margin = 1e-3;  // t axes span [-1 + delta, 1 - delta]
    double sigma_min = 0.1;      // strict: sub-domain |sigma| >= sigma_min
    double lambda_margin = 0.05; // strict: lambda in [m, 1 - m]
    int max_depth = 60;
    std::uint64_t max_boxes = 10'000'000;
    bool use_symmetry = true;
    double lambda_split_weight = 2.0;
    Enclosure enclosure = Enclosure::factored;

    // Throws std::invalid_argument.
    void validate() const;

    friend bool operator==(const CertConfig &, const CertConfig &) = default;
};

struct Box {
    Interval lam = Interval::point(0.0);
    IntervalTriple t{Interval::point(0.0), Interval::point(0.0), Interval::point(0.0)};
    int depth = 0;

    [[nodiscard]] double volume() const noexcept;
    [[nodiscard]] SamplePoint midpoint() const noexcept;
    [[nodiscard]] bool contains(const SamplePoint &p) const noexcept;
    [[nodiscard]] IntervalPoint as_interval_point() const { return {lam, t}; }

    friend bool operator==(const Box &, const Box &) = default;
};

// The configured domain (strict mode narrows lambda to [m, 1 - m]).
[[nodiscard]] Box root_box(const CertConfig &cfg);

// Lower bound of the factored enclosure alone.
[[nodiscard]] double factored_lower_bound(const Box &b);

// Enclosure of gap over the box with the configured strategy.
[[nodiscard]] Interval gap_enclosure(const Box &b, Enclosure e = Enclosure::factored);

enum class BoxOutcome { verified, must_split, candidate };

struct BoxVerdict {
    BoxOutcome outcome = BoxOutcome::must_split;
    Interval enclosure = Interval::point(0.0);
    std::optional<SamplePoint> candidate; // set when outcome == candidate
};

[[nodiscard]] BoxVerdict process_box(const Box &b, const CertConfig &cfg);

// Bisects the axis with the largest scaled width (lambda width times
// lambda_weight); ties go to the lowest axis index (lambda, t1, t2, t3).
// Throws IntervalError when every axis is degenerate.
[[nodiscard]] std::pair<Box, Box> split_box(const Box &b, double lambda_weight = 2.0);

// Drops a box whose sigma enclosure lies strictly below zero: gap is even
// under t -> -t and the mirror box has sigma > 0, so it is covered elsewhere.
[[nodiscard]] std::optional<Box> symmetry_reduce(const Box &b);

struct Certificate {
    CertStatus status = CertStatus::inconclusive;
    std::uint64_t boxes_processed = 0;
    std::uint64_t boxes_verified = 0;
    std::uint64_t boxes_split = 0;
    std::uint64_t boxes_discarded = 0; // symmetry
    std::uint64_t boxes_excluded = 0;  // outside the strict sub-domain
    int max_depth_reached = 0;
    std::optional<double> worst_lower_bound; // over verified boxes
    std::optional<Box> witness;
    std::optional<SamplePoint> witness_point; // confirmed counterexample
    bool budget_exhausted = false;
    double domain_volume = 0.0;
    double verified_volume = 0.0;
    double discarded_volume = 0.0;
    double excluded_volume = 0.0;
    CertConfig config;
    double wall_time = 0.0; // seconds
};

struct CertifyOptions {
    unsigned threads = 0; // 0: hardware concurrency
    // When set, receives every verified box in deterministic order.
    std::vector<Box> *verified_boxes = nullptr;
};

// Deterministic for every thread count as long as the box budget is not
// exhausted. On exhaustion the status is inconclusive in every schedule, but
// the counters reflect how far the workers got.
[[nodiscard]] Certificate certify(const CertConfig &cfg, const CertifyOptions &opts = {});

} // namespace atanhcert

#endif
