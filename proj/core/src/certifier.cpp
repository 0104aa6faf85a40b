#include <atanhcert/certifier.hpp>
#include <atanhcert/oracle.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace atanhcert
{

namespace
{

// Items are the boxes of a fixed geometric pre-split; each is then searched
// depth first by one worker.
constexpr int kPresplitDepth = 10;

// K is evaluated at min(lambda_lo, kLambdaCap); K rises with lambda, so the
// cap only loosens the bound, and it keeps the 1 / (1 - lambda) factor small.
constexpr double kLambdaCap = 0.5;

Interval pt(double x)
{
    return Interval::point(x);
}

// (ln y - ln x) / (y - x) at exact points, 1 / x when x == y.
Interval ln_divdiff_point(double x, double y)
{
    const auto X = pt(x);
    if (x == y) {
        return pt(1.0) / X;
    }
    // log1p(r) / r is decreasing in r, with value 1 at r = 0.
    const auto phi = [](double r) {
        if (r == 0.0) {
            return pt(1.0);
        }
        return log1p_iv(pt(r)) / pt(r);
    };
    const auto R = (pt(y) - X) / X;
    return Interval::make(phi(R.hi()).lo(), phi(R.lo()).hi()) / X;
}

// Divided difference of ln over intervals; decreasing in both arguments.
Interval ln_divdiff(const Interval &x, const Interval &y)
{
    return Interval::make(ln_divdiff_point(x.hi(), y.hi()).lo(), ln_divdiff_point(x.lo(), y.lo()).hi());
}

Interval cube(const Interval &v)
{
    const auto c = [](double a) { return pt(a) * pt(a) * pt(a); };
    return Interval::make(c(v.lo()).lo(), c(v.hi()).hi());
}

// K(lam, e, sigma) with |sigma| = a, enclosed at a single point.
std::optional<Interval> k_mean_point(double lam, double e, double a)
{
    const auto c = 1.0 + pt(e) + pt(a);
    const auto d = 1.0 + pt(e) - pt(a);
    if (d.lo() <= 0.0) {
        return std::nullopt;
    }
    const auto log_mean_inv = ln_divdiff(d, c);
    if (lam == 0.0) {
        return log_mean_inv - pt(1.0);
    }
    const auto L = pt(lam);
    const auto p = 1.0 + L * (d - pt(1.0));
    const auto q = 1.0 + L * (c - pt(1.0));
    return (log_mean_inv - ln_divdiff(p, q)) / (1.0 - L);
}

// Lower bound of K over the box, at lambda0 = min(lam_lo, cap).
double k_mean_lower(const Box &b, const Interval &S)
{
    const double lam0 = std::min(b.lam.lo(), kLambdaCap);

    // Always valid: K(lam0) >= K(0) = D(d, c) - 1 with D decreasing in c and d.
    double best = (ln_divdiff(prod_minus(b.t), prod_plus(b.t)) - pt(1.0)).lo();

    const auto E = e2(b.t);
    const double M = S.mag();
    const auto V = E + Interval::make(-M, M); // u - 1 over the box
    if ((1.0 + V).lo() <= 0.0) {
        return best;
    }
    const auto L = pt(lam0);
    // k' <= 0  iff  lam (u - 1)^2 <= 1
    const bool decreasing = (L * sqr(V)).hi() <= 1.0;
    // k'' >= 0  iff  lam^2 v^3 - 3 lam v - (1 + lam) <= 0,  v = u - 1
    const bool convex = (sqr(L) * cube(V) - 3.0 * L * V - (1.0 + L)).hi() <= 0.0;
    if (decreasing && convex) {
        if (const auto K = k_mean_point(lam0, E.hi(), S.mig())) {
            best = std::max(best, K->lo());
        }
    }
    return best;
}

// atanh(x) - x - x^3/3: odd and increasing.
Interval atanh_tail(const Interval &x)
{
    const auto at = [](double v) {
        const auto X = pt(v);
        return atanh_iv(X) - X - cube(X) / pt(3.0);
    };
    double lo = at(x.lo()).lo();
    double hi = at(x.hi()).hi();
    if (x.lo() >= 0.0) {
        lo = std::max(lo, 0.0);
    }
    if (x.hi() <= 0.0) {
        hi = std::min(hi, 0.0);
    }
    return Interval::make(lo, std::max(lo, hi));
}

// sigma (f - sigma) = sigma K(0) sigma. Written as
//   f - sigma = sum tail(t_i) + (t1 + t2 + t3) sum_{i<j} (t_i - t_j)^2 / 6
// so that the third-order cancellation near t = 0 happens symbolically.
Interval sigma_times_excess(const IntervalTriple &t, const Interval &S)
{
    const auto s1 = t[0] + t[1] + t[2];
    const auto Q = sqr(t[0] - t[1]) + sqr(t[1] - t[2]) + sqr(t[2] - t[0]);
    const auto excess = atanh_tail(t[0]) + atanh_tail(t[1]) + atanh_tail(t[2]) + s1 * Q / pt(6.0);
    return S * excess;
}

Interval nonneg(const Interval &x)
{
    return Interval::make(std::max(0.0, x.lo()), std::max(0.0, x.hi()));
}

bool in_strict_subdomain(const SamplePoint &p, const CertConfig &cfg)
{
    return p.lam >= cfg.lambda_margin && p.lam <= 1.0 - cfg.lambda_margin
           && std::fabs(sigma(p.t)) >= cfg.sigma_min;
}

double axis_width(const Interval &x)
{
    return x.hi() - x.lo();
}

struct ItemResult {
    std::uint64_t processed = 0;
    std::uint64_t verified = 0;
    std::uint64_t split = 0;
    std::uint64_t discarded = 0;
    std::uint64_t excluded = 0;
    int max_depth = 0;
    double worst = std::numeric_limits<double>::infinity();
    double verified_volume = 0.0;
    double discarded_volume = 0.0;
    double excluded_volume = 0.0;
    std::optional<Box> inconclusive_witness;
    std::optional<Box> refuted_box;
    std::optional<SamplePoint> refuted_point;
    bool aborted = false;
    std::vector<Box> verified_boxes;
};

bool confirm_counterexample(const SamplePoint &p, const CertConfig &cfg)
{
    const auto ref = reference_eval(p);
    if (cfg.mode == CertMode::relaxed) {
        return ref.gap < static_cast<Extended>(-cfg.epsilon);
    }
    return in_strict_subdomain(p, cfg) && ref.gap <= 0;
}

} // namespace

std::string_view to_string(CertMode m)
{
    return m == CertMode::relaxed ? "relaxed" : "strict";
}

std::string_view to_string(Enclosure e)
{
    return e == Enclosure::factored ? "factored" : "natural";
}

std::string_view to_string(CertStatus s)
{
    switch (s) {
    case CertStatus::proved:
        return "Proved";
    case CertStatus::refuted:
        return "Refuted";
    case CertStatus::inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
}

std::optional<CertMode> parse_cert_mode(std::string_view s)
{
    if (s == "relaxed") {
        return CertMode::relaxed;
    }
    if (s == "strict" || s == "strict_interior") {
        return CertMode::strict_interior;
    }
    return std::nullopt;
}

std::optional<Enclosure> parse_enclosure(std::string_view s)
{
    if (s == "factored") {
        return Enclosure::factored;
    }
    if (s == "natural") {
        return Enclosure::natural;
    }
    return std::nullopt;
}

std::optional<CertStatus> parse_cert_status(std::string_view s)
{
    for (auto st : {CertStatus::proved, CertStatus::refuted, CertStatus::inconclusive}) {
        if (to_string(st) == s) {
            return st;
        }
    }
    return std::nullopt;
}

void CertConfig::validate() const
{
    if (!std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be finite");
    }
    if (!(delta_margin > 0.0 && delta_margin < 0.5)) {
        throw std::invalid_argument("delta margin must lie in (0, 0.5)");
    }
    if (mode == CertMode::strict_interior) {
        if (!(sigma_min > 0.0) || !std::isfinite(sigma_min)) {
            throw std::invalid_argument("strict mode requires sigma_min > 0");
        }
        if (!(lambda_margin > 0.0 && lambda_margin < 0.5)) {
            throw std::invalid_argument("strict mode requires lambda_margin in (0, 0.5)");
        }
    }
    if (max_depth < 0) {
        throw std::invalid_argument("max_depth must be nonnegative");
    }
    if (max_boxes == 0) {
        throw std::invalid_argument("max_boxes must be positive");
    }
    if (!(lambda_split_weight > 0.0) || !std::isfinite(lambda_split_weight)) {
        throw std::invalid_argument("lambda split weight must be positive");
    }
}

double Box::volume() const noexcept
{
    return axis_width(lam) * axis_width(t[0]) * axis_width(t[1]) * axis_width(t[2]);
}

SamplePoint Box::midpoint() const noexcept
{
    return {lam.mid(), {t[0].mid(), t[1].mid(), t[2].mid()}};
}

bool Box::contains(const SamplePoint &p) const noexcept
{
    return lam.contains(p.lam) && t[0].contains(p.t[0]) && t[1].contains(p.t[1]) && t[2].contains(p.t[2]);
}

Box root_box(const CertConfig &cfg)
{
    const double a = 1.0 - cfg.delta_margin;
    const auto t = Interval::make(-a, a);
    Box b;
    b.t = {t, t, t};
    b.lam = cfg.mode == CertMode::strict_interior
                ? Interval::make(cfg.lambda_margin, 1.0 - cfg.lambda_margin)
                : Interval::make(0.0, 1.0);
    return b;
}

double factored_lower_bound(const Box &b)
{
    const auto S = sigma(b.t);
    const double k_lo = k_mean_lower(b, S);
    const auto weight = nonneg(b.lam * (1.0 - b.lam)); // lambda (1 - lambda)
    const auto S2 = sqr(S);
    const double corner = k_lo >= 0.0 ? (pt(weight.lo()) * pt(S2.lo()) * pt(k_lo)).lo()
                                      : (pt(weight.hi()) * pt(S2.hi()) * pt(k_lo)).lo();
    // gap >= lambda (1 - lambda) sigma^2 K(0)
    const double origin = (weight * sigma_times_excess(b.t, S)).lo();
    return std::max(corner, origin);
}

Interval gap_enclosure(const Box &b, Enclosure e)
{
    const auto natural = gap(b.as_interval_point());
    if (e == Enclosure::natural) {
        return natural;
    }
    const double lo = std::max(natural.lo(), factored_lower_bound(b));
    if (lo > natural.hi()) {
        throw std::logic_error("inconsistent gap enclosures");
    }
    return Interval::make(lo, natural.hi());
}

BoxVerdict process_box(const Box &b, const CertConfig &cfg)
{
    BoxVerdict v;
    v.enclosure = gap_enclosure(b, cfg.enclosure);

    if (cfg.mode == CertMode::relaxed) {
        if (v.enclosure.lo() >= -cfg.epsilon) {
            v.outcome = BoxOutcome::verified;
            return v;
        }
    } else {
        if (v.enclosure.lo() > 0.0 && !sigma(b.t).contains_zero()) {
            v.outcome = BoxOutcome::verified;
            return v;
        }
    }

    const auto mid = b.midpoint();
    const double g = gap(mid);
    const bool candidate = cfg.mode == CertMode::relaxed
                               ? g < -cfg.epsilon
                               : (in_strict_subdomain(mid, cfg) && g <= 0.0);
    if (candidate) {
        v.outcome = BoxOutcome::candidate;
        v.candidate = mid;
        return v;
    }
    v.outcome = BoxOutcome::must_split;
    return v;
}

std::pair<Box, Box> split_box(const Box &b, double lambda_weight)
{
    const double scores[4] = {axis_width(b.lam) * lambda_weight, axis_width(b.t[0]), axis_width(b.t[1]),
                              axis_width(b.t[2])};
    int axis = 0;
    for (int i = 1; i < 4; ++i) {
        if (scores[i] > scores[axis]) {
            axis = i;
        }
    }
    if (!(scores[axis] > 0.0)) {
        throw IntervalError("cannot split a fully degenerate box");
    }

    Box lower = b;
    Box upper = b;
    lower.depth = upper.depth = b.depth + 1;
    auto &target = axis == 0 ? b.lam : b.t[static_cast<std::size_t>(axis - 1)];
    const auto [lo_half, hi_half] = split(target);
    if (axis == 0) {
        lower.lam = lo_half;
        upper.lam = hi_half;
    } else {
        lower.t[static_cast<std::size_t>(axis - 1)] = lo_half;
        upper.t[static_cast<std::size_t>(axis - 1)] = hi_half;
    }
    return {lower, upper};
}

std::optional<Box> symmetry_reduce(const Box &b)
{
    if (sigma(b.t).hi() < 0.0) {
        return std::nullopt;
    }
    return b;
}

Certificate certify(const CertConfig &cfg, const CertifyOptions &opts)
{
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    Certificate cert;
    cert.config = cfg;
    const auto root = root_box(cfg);
    cert.domain_volume = root.volume();

    // Geometric pre-split into independent work items.
    std::vector<Box> items{root};
    const int presplit = std::min(kPresplitDepth, cfg.max_depth);
    for (int level = 0; level < presplit; ++level) {
        std::vector<Box> next;
        next.reserve(items.size() * 2);
        for (const auto &b : items) {
            const auto [lo, hi] = split_box(b, cfg.lambda_split_weight);
            next.push_back(lo);
            next.push_back(hi);
        }
        cert.boxes_split += items.size();
        items = std::move(next);
    }

    std::vector<ItemResult> results(items.size());
    std::atomic<std::uint64_t> budget_used{0};
    std::atomic<bool> exhausted{false};
    std::atomic<std::size_t> first_refuted{items.size()};
    const bool strict = cfg.mode == CertMode::strict_interior;

    detail::for_each_index(items.size(), opts.threads, [&](std::size_t index) {
        auto &r = results[index];
        std::vector<Box> stack{items[index]};
        while (!stack.empty()) {
            if (exhausted.load(std::memory_order_relaxed) || first_refuted.load(std::memory_order_relaxed) < index) {
                r.aborted = true;
                r.inconclusive_witness = r.inconclusive_witness.value_or(stack.back());
                return;
            }
            if (budget_used.fetch_add(1, std::memory_order_relaxed) >= cfg.max_boxes) {
                exhausted.store(true);
                r.aborted = true;
                r.inconclusive_witness = r.inconclusive_witness.value_or(stack.back());
                return;
            }

            const Box b = stack.back();
            stack.pop_back();
            ++r.processed;
            r.max_depth = std::max(r.max_depth, b.depth);

            const auto S = sigma(b.t);
            if (cfg.use_symmetry && S.hi() < 0.0) {
                ++r.discarded;
                r.discarded_volume += b.volume();
                continue;
            }
            if (strict) {
                const bool outside = cfg.use_symmetry ? S.hi() < cfg.sigma_min
                                                      : (S.hi() < cfg.sigma_min && S.lo() > -cfg.sigma_min);
                if (outside) {
                    ++r.excluded;
                    r.excluded_volume += b.volume();
                    continue;
                }
            }

            const auto verdict = process_box(b, cfg);
            if (verdict.outcome == BoxOutcome::verified) {
                ++r.verified;
                r.verified_volume += b.volume();
                r.worst = std::min(r.worst, verdict.enclosure.lo());
                if (opts.verified_boxes != nullptr) {
                    r.verified_boxes.push_back(b);
                }
                continue;
            }
            if (verdict.outcome == BoxOutcome::candidate && confirm_counterexample(*verdict.candidate, cfg)) {
                r.refuted_box = b;
                r.refuted_point = verdict.candidate;
                auto seen = first_refuted.load();
                while (index < seen && !first_refuted.compare_exchange_weak(seen, index)) {
                }
                return;
            }
            if (b.depth >= cfg.max_depth) {
                if (!r.inconclusive_witness) {
                    r.inconclusive_witness = b;
                }
                continue;
            }
            auto [lo, hi] = split_box(b, cfg.lambda_split_weight);
            ++r.split;
            stack.push_back(std::move(hi));
            stack.push_back(std::move(lo));
        }
    });

    bool any_inconclusive = false;
    double worst = std::numeric_limits<double>::infinity();
    cert.max_depth_reached = presplit;
    for (std::size_t i = 0; i < results.size(); ++i) {
        auto &r = results[i];
        if (r.aborted && !exhausted.load() && i > first_refuted.load()) {
            break;
        }
        cert.boxes_processed += r.processed;
        cert.boxes_verified += r.verified;
        cert.boxes_split += r.split;
        cert.boxes_discarded += r.discarded;
        cert.boxes_excluded += r.excluded;
        cert.max_depth_reached = std::max(cert.max_depth_reached, r.max_depth);
        cert.verified_volume += r.verified_volume;
        cert.discarded_volume += r.discarded_volume;
        cert.excluded_volume += r.excluded_volume;
        worst = std::min(worst, r.worst);
        if (opts.verified_boxes != nullptr) {
            opts.verified_boxes->insert(opts.verified_boxes->end(), r.verified_boxes.begin(),
                                        r.verified_boxes.end());
        }
        if (r.refuted_box) {
            cert.status = CertStatus::refuted;
            cert.witness = r.refuted_box;
            cert.witness_point = r.refuted_point;
            break;
        }
        if (r.inconclusive_witness && !any_inconclusive) {
            any_inconclusive = true;
            cert.witness = r.inconclusive_witness;
        }
    }

    if (std::isfinite(worst)) {
        cert.worst_lower_bound = worst;
    }
    cert.budget_exhausted = exhausted.load();
    if (cert.status != CertStatus::refuted) {
        cert.status = (any_inconclusive || cert.budget_exhausted) ? CertStatus::inconclusive : CertStatus::proved;
        if (cert.status == CertStatus::proved) {
            cert.witness.reset();
        }
    }
    cert.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

} // namespace atanhcert
