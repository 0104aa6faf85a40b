#include <atanhcert/oracle.hpp>
#include <atanhcert/random.hpp>

#include "parallel.hpp"

#include <quadmath.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace atanhcert
{

namespace
{

constexpr std::uint64_t kChunkSize = 1 << 14;

struct ChunkResult {
    double min_value = std::numeric_limits<double>::infinity();
    SamplePoint argmin;
    bool has_min = false;
    std::vector<SamplePoint> violations;
    std::uint64_t violation_count = 0;
    std::uint64_t evaluated = 0;
};

// Coordinate j of n on [-a, a]; exactly antisymmetric in j <-> n-1-j.
double t_axis(std::uint64_t j, std::uint64_t n, double a, bool clustered)
{
    const auto last = n - 1;
    if (2 * j > last) {
        return -t_axis(last - j, n, a, clustered);
    }
    if (clustered) {
        return -a * std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(last));
    }
    // Exact integer numerator keeps mirrored coordinates exact negatives.
    const double num = 2.0 * static_cast<double>(j) - static_cast<double>(last);
    return a * (num / static_cast<double>(last));
}

double lambda_axis(std::uint64_t i, std::uint64_t n, double lo, double hi)
{
    if (i + 1 == n) {
        return hi;
    }
    return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

class PointSource
{
public:
    PointSource(const ScanConfig &cfg, bool with_lambda) : cfg_(cfg), with_lambda_(with_lambda)
    {
        const auto n = static_cast<std::uint64_t>(cfg.resolution);
        if (cfg.mode == ScanMode::grid) {
            count_ = n * n * n * (with_lambda ? n : 1);
        } else {
            count_ = cfg.sample_count;
        }
    }

    [[nodiscard]] std::uint64_t size() const noexcept { return count_; }

    [[nodiscard]] SamplePoint at(std::uint64_t index) const
    {
        const double a = 1.0 - cfg_.delta;
        SamplePoint p;
        if (cfg_.mode == ScanMode::random) {
            const auto u = [&](std::uint64_t k) { return counter_uniform(cfg_.seed, index, k); };
            p.lam = with_lambda_ ? cfg_.lambda_min + (cfg_.lambda_max - cfg_.lambda_min) * u(0)
                                 : cfg_.lambda_min;
            for (std::uint64_t k = 0; k < 3; ++k) {
                p.t[k] = a * (2.0 * u(k + 1) - 1.0);
            }
            return p;
        }
        const auto n = static_cast<std::uint64_t>(cfg_.resolution);
        auto rest = index;
        for (int k = 2; k >= 0; --k) {
            p.t[static_cast<std::size_t>(k)] = t_axis(rest % n, n, a, cfg_.clustered);
            rest /= n;
        }
        p.lam = with_lambda_ ? lambda_axis(rest, n, cfg_.lambda_min, cfg_.lambda_max) : cfg_.lambda_min;
        return p;
    }

private:
    ScanConfig cfg_;
    bool with_lambda_;
    std::uint64_t count_ = 0;
};

// value(p) is minimized; violation when value < -tolerance.
template <typename Value>
ScanReport run_scan(const PointSource &source, double tolerance, unsigned threads, Value &&value)
{
    const auto start = std::chrono::steady_clock::now();
    const auto total = source.size();
    const auto chunks = static_cast<std::size_t>((total + kChunkSize - 1) / kChunkSize);
    std::vector<ChunkResult> results(chunks);

    detail::for_each_index(chunks, threads, [&](std::size_t c) {
        auto &r = results[c];
        const auto begin = static_cast<std::uint64_t>(c) * kChunkSize;
        const auto end = std::min(total, begin + kChunkSize);
        for (auto i = begin; i < end; ++i) {
            const auto p = source.at(i);
            const double v = value(p);
            ++r.evaluated;
            if (!r.has_min || v < r.min_value || (v == r.min_value && p < r.argmin)) {
                r.min_value = v;
                r.argmin = p;
                r.has_min = true;
            }
            if (v < -tolerance) {
                ++r.violation_count;
                if (r.violations.size() < kMaxStoredViolations) {
                    r.violations.push_back(p);
                }
            }
        }
    });

    ScanReport report;
    bool has_min = false;
    for (const auto &r : results) {
        report.samples_evaluated += r.evaluated;
        report.violation_count += r.violation_count;
        for (const auto &v : r.violations) {
            if (report.violations.size() < kMaxStoredViolations) {
                report.violations.push_back(v);
            }
        }
        if (r.has_min
            && (!has_min || r.min_value < report.min_gap
                || (r.min_value == report.min_gap && r.argmin < report.argmin))) {
            report.min_gap = r.min_value;
            report.argmin = r.argmin;
            has_min = true;
        }
    }
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Extended sigma_q(const Triple &t)
{
    const Extended a = t[0], b = t[1], c = t[2];
    return a + b + c + a * b * c;
}

} // namespace

void ScanConfig::validate() const
{
    if (mode == ScanMode::grid && resolution < 2) {
        throw std::invalid_argument("grid resolution must be at least 2");
    }
    if (!(delta > 0.0 && delta < 0.5)) {
        throw std::invalid_argument("margin delta must lie in (0, 0.5)");
    }
    if (!(lambda_min >= 0.0 && lambda_max <= 1.0 && lambda_min <= lambda_max)) {
        throw std::invalid_argument("lambda range must be a sub-interval of [0, 1]");
    }
    if (mode == ScanMode::random && sample_count == 0) {
        throw std::invalid_argument("sample count must be positive");
    }
}

ScanReport scan_gap(const ScanConfig &cfg, double tolerance, unsigned threads)
{
    cfg.validate();
    if (!(tolerance >= 0.0)) {
        throw std::invalid_argument("tolerance must be nonnegative");
    }
    return run_scan(PointSource(cfg, true), tolerance, threads, [](const SamplePoint &p) { return gap(p); });
}

std::optional<Identity> parse_identity(std::string_view name)
{
    if (name == "prop2") {
        return Identity::prop2;
    }
    if (name == "product_facts") {
        return Identity::product_facts;
    }
    if (name == "log_forms") {
        return Identity::log_forms;
    }
    return std::nullopt;
}

std::string_view to_string(Identity id)
{
    switch (id) {
    case Identity::prop2:
        return "prop2";
    case Identity::product_facts:
        return "product_facts";
    case Identity::log_forms:
        return "log_forms";
    }
    return "unknown";
}

double identity_residual(Identity id, const SamplePoint &p)
{
    switch (id) {
    case Identity::prop2:
        return std::fabs(symmetrize_g(p.t) - weighted_self_sum(p.t));
    case Identity::product_facts: {
        const auto [c, d] = product_pair(p.t);
        const double scale = c + d;
        const double sum_res = std::fabs((c + d) - 2.0 * (1.0 + e2(p.t)));
        const double diff_res = std::fabs((c - d) - 2.0 * sigma(p.t));
        return std::max(sum_res, diff_res) / scale;
    }
    case Identity::log_forms: {
        // Binary64 log forms against the atanh forms. The atanh side of F
        // is evaluated in binary128: its argument approaches 1 at the cube
        // corners, where a binary64 evaluation loses 1/(1 - |x|) ulps.
        const auto [c, d] = product_pair(p.t);
        const double f_res = std::fabs(0.5 * std::log(c / d) - f(p.t));
        const Extended lam = p.lam;
        const Extended t1 = p.t[0], t2 = p.t[1], t3 = p.t[2];
        const Extended e2q = t1 * t2 + t2 * t3 + t3 * t1;
        const Extended F_atanh = atanhq(lam * sigma_q(p.t) / (1 + lam * e2q));
        const double F_res = std::fabs(static_cast<double>(static_cast<Extended>(F_lambda(p)) - F_atanh));
        return std::max(f_res, F_res);
    }
    }
    throw std::invalid_argument("unknown identity selector");
}

ScanReport scan_identity(Identity id, const ScanConfig &cfg, double tolerance, unsigned threads)
{
    cfg.validate();
    if (!(tolerance >= 0.0)) {
        throw std::invalid_argument("tolerance must be nonnegative");
    }
    const bool with_lambda = id == Identity::log_forms;
    auto report = run_scan(PointSource(cfg, with_lambda), tolerance, threads,
                           [id](const SamplePoint &p) { return -identity_residual(id, p); });
    report.max_residual = -report.min_gap;
    return report;
}

double manifold_proximity(const SamplePoint &p)
{
    return std::min({p.lam, 1.0 - p.lam, std::fabs(sigma(p.t))});
}

ReferenceValues reference_eval(const SamplePoint &p)
{
    if (!p.valid()) {
        throw DomainError("reference_eval requires a valid sample point");
    }
    const Extended lam = p.lam;
    const Extended t1 = p.t[0], t2 = p.t[1], t3 = p.t[2];

    ReferenceValues r{};
    r.sigma = sigma_q(p.t);
    r.e2 = t1 * t2 + t2 * t3 + t3 * t1;
    r.c = (1 + t1) * (1 + t2) * (1 + t3);
    r.d = (1 - t1) * (1 - t2) * (1 - t3);
    r.f = atanhq(t1) + atanhq(t2) + atanhq(t3);
    r.g = r.sigma * r.f;
    r.F = logq(((1 - lam) + lam * r.c) / ((1 - lam) + lam * r.d)) / 2;
    r.G = r.sigma * r.F;
    r.gap = lam * r.g - r.G;
    return r;
}

std::string format_extended(Extended x, int digits)
{
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, x);
    return buf;
}

} // namespace atanhcert
