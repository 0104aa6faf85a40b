#ifndef ATANHCERT_ORACLE_HPP
#define ATANHCERT_ORACLE_HPP

#include <atanhcert/paper_functions.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atanhcert
{

// Brute-force floating-point verification. Nothing here is rigorous; it is
// the independent cross-check for the interval certifier and the source of
// extended-precision reference values.

enum class ScanMode { grid, random };

struct ScanConfig {
    ScanMode mode = ScanMode::grid;
    int resolution = 21;              // grid points per axis, >= 2
    double delta = 1e-3;              // t axes span [-1 + delta, 1 - delta]
    double lambda_min = 0.0;
    double lambda_max = 1.0;
    std::uint64_t seed = 42;          // random mode
    std::uint64_t sample_count = 1'000'000; // random mode
    bool clustered = false;           // Chebyshev-Lobatto spacing on the t axes

    // Throws std::invalid_argument.
    void validate() const;
};

// Stored violations are capped; violation_count is exact.
inline constexpr std::size_t kMaxStoredViolations = 1000;

struct ScanReport {
    // For gap scans: the minimum gap. For identity scans: -max_residual, so
    // the violation invariant reads the same for both.
    double min_gap = 0.0;
    SamplePoint argmin;
    std::uint64_t samples_evaluated = 0;
    std::vector<SamplePoint> violations;
    std::uint64_t violation_count = 0;
    std::optional<double> max_residual; // identity scans only
    double wall_time = 0.0;             // seconds
};

// Evaluates gap at every configured point. Deterministic in (cfg, tolerance)
// for any thread count; threads == 0 uses the hardware concurrency.
[[nodiscard]] ScanReport scan_gap(const ScanConfig &cfg, double tolerance, unsigned threads = 0);

enum class Identity {
    prop2,         // symmetrize_g == weighted_self_sum (absolute residual)
    product_facts, // c + d == 2 (1 + e2), c - d == 2 sigma (residual / (c + d))
    log_forms,     // log forms of f and F_lambda vs their atanh forms (binary128)
};

[[nodiscard]] std::optional<Identity> parse_identity(std::string_view name);
[[nodiscard]] std::string_view to_string(Identity id);

// Residual of the chosen identity at one point.
[[nodiscard]] double identity_residual(Identity id, const SamplePoint &p);

// prop2 and product_facts ignore lambda and scan the t cube only.
[[nodiscard]] ScanReport scan_identity(Identity id, const ScanConfig &cfg, double tolerance,
                                       unsigned threads = 0);

// Distance-like proximity to the equality set {lambda = 0, lambda = 1,
// sigma = 0}: min(lambda, 1 - lambda, |sigma|).
[[nodiscard]] double manifold_proximity(const SamplePoint &p);

// IEEE binary128 via libquadmath; 113-bit significand.
using Extended = __float128;

struct ReferenceValues {
    Extended sigma, e2, c, d, f, g, F, G, gap;
};

// Every quantity at binary128. Absolute error target 1e-25 for |t_i| <= 0.99.
[[nodiscard]] ReferenceValues reference_eval(const SamplePoint &p);

[[nodiscard]] std::string format_extended(Extended x, int digits = 36);

} // namespace atanhcert

#endif
