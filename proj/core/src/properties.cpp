#include <atanhcert/properties.hpp>

#include <atanhcert/oracle.hpp>
#include <atanhcert/proof_steps.hpp>
#include <atanhcert/random.hpp>

#include "parallel.hpp"

#include <quadmath.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

namespace atanhcert
{

namespace
{

constexpr double kMargin = 1e-3; // t_i in [-1 + kMargin, 1 - kMargin]
constexpr double kEdge = 1.0 - kMargin;
constexpr std::uint64_t kChunk = 1024;
constexpr int kLambdaGrid = 1000;

// Per-sample draws; draw k of sample i is a pure function of (seed, i, k).
class Draw
{
public:
    Draw(std::uint64_t seed, std::uint64_t index) : seed_(seed), index_(index) {}

    double u() { return counter_uniform(seed_, index_, k_++); }
    double u(double a, double b) { return a + (b - a) * u(); }
    double log_u(double a, double b) { return std::exp(u(std::log(a), std::log(b))); }
    double t() { return u(-kEdge, kEdge); }
    Triple triple() { return {t(), t(), t()}; }

    [[nodiscard]] std::uint64_t index() const noexcept { return index_; }

private:
    std::uint64_t seed_;
    std::uint64_t index_;
    std::uint64_t k_ = 0;
};

struct Outcome {
    double residual = 0.0;
    bool failed = false;
    bool inconclusive = false;
    bool skipped = false;
    int tag = -1; // generator case, counted per tag
};

struct Tally {
    double max_residual = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t failures = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t skipped = 0;
    std::array<std::uint64_t, 8> per_tag{};
    std::optional<std::uint64_t> first_failure;
};

std::uint64_t stream_seed(std::uint64_t seed, std::string_view name)
{
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (char ch : name) {
        h = (h ^ static_cast<unsigned char>(ch)) * 0x100000001b3ULL;
    }
    return splitmix64(seed ^ h);
}

using SampleFn = std::function<Outcome(Draw &)>;

Tally sample_loop(std::uint64_t n, std::uint64_t seed, unsigned threads, const SampleFn &fn)
{
    const auto chunks = static_cast<std::size_t>((n + kChunk - 1) / kChunk);
    std::vector<Tally> parts(chunks);
    detail::for_each_index(chunks, threads, [&](std::size_t c) {
        auto &t = parts[c];
        const auto begin = static_cast<std::uint64_t>(c) * kChunk;
        const auto end = std::min(n, begin + kChunk);
        for (auto i = begin; i < end; ++i) {
            Draw d(seed, i);
            const auto o = fn(d);
            if (o.skipped) {
                ++t.skipped;
                continue;
            }
            ++t.samples;
            if (o.tag >= 0 && o.tag < static_cast<int>(t.per_tag.size())) {
                ++t.per_tag[static_cast<std::size_t>(o.tag)];
            }
            t.max_residual = std::max(t.max_residual, o.residual);
            t.inconclusive += o.inconclusive ? 1 : 0;
            if (o.failed) {
                ++t.failures;
                if (!t.first_failure) {
                    t.first_failure = i;
                }
            }
        }
    });
    Tally total;
    for (const auto &t : parts) {
        total.max_residual = std::max(total.max_residual, t.max_residual);
        total.samples += t.samples;
        total.failures += t.failures;
        total.inconclusive += t.inconclusive;
        total.skipped += t.skipped;
        for (std::size_t k = 0; k < total.per_tag.size(); ++k) {
            total.per_tag[k] += t.per_tag[k];
        }
        if (!total.first_failure) {
            total.first_failure = t.first_failure;
        }
    }
    return total;
}

PropertyResult finish(std::string_view name, const Tally &t, double tolerance, std::string note = {})
{
    PropertyResult r;
    r.name = std::string(name);
    r.samples = t.samples;
    r.failures = t.failures;
    r.inconclusive = t.inconclusive;
    r.max_residual = t.max_residual;
    r.tolerance = tolerance;
    r.passed = t.failures == 0 && t.samples > 0;
    if (t.first_failure) {
        if (!note.empty()) {
            note += "; ";
        }
        note += "first failing sample index " + std::to_string(*t.first_failure);
    }
    r.note = std::move(note);
    return r;
}

Outcome residual_check(double residual, double tolerance)
{
    Outcome o;
    o.residual = residual;
    o.failed = !(residual <= tolerance);
    return o;
}

std::string tag_counts(const Tally &t, std::initializer_list<std::string_view> names)
{
    std::ostringstream os;
    std::size_t k = 0;
    for (auto n : names) {
        os << (k ? ", " : "") << n << '=' << t.per_tag[k];
        ++k;
    }
    return os.str();
}

// Flip all signs if needed so that sigma > 0; nullopt on sigma == 0.
std::optional<Triple> positive_sigma(Triple t)
{
    const double sg = sigma(t);
    if (sg == 0.0) {
        return std::nullopt;
    }
    if (sg < 0.0) {
        for (auto &x : t) {
            x = -x;
        }
    }
    return t;
}

// (c, d) with 0 < c - d < ln c - ln d. Even samples come from the product
// substitution, odd ones from direct rejection sampling.
std::optional<std::pair<double, double>> premise_pair(Draw &d)
{
    if (d.index() % 2 == 0) {
        for (int tries = 0; tries < 16; ++tries) {
            const auto t = positive_sigma(d.triple());
            if (!t) {
                continue;
            }
            const auto [c, dd] = product_pair(*t);
            if (lemma5_premise(c, dd) == PremiseStatus::holds) {
                return std::pair{c, dd};
            }
        }
        return std::nullopt;
    }
    for (int tries = 0; tries < 64; ++tries) {
        double a = d.log_u(1e-3, 8.0);
        double b = d.log_u(1e-3, 8.0);
        if (a < b) {
            std::swap(a, b);
        }
        if (lemma5_premise(a, b) == PremiseStatus::holds) {
            return std::pair{a, b};
        }
    }
    return std::nullopt;
}

double lambda_at(int i)
{
    return i + 1 == kLambdaGrid ? 1.0 : static_cast<double>(i) / (kLambdaGrid - 1);
}

// ---------------------------------------------------------------- identities

PropertyResult prop_identity(std::string_view name, Identity id, double tolerance, double delta,
                             const PropertyOptions &o)
{
    ScanConfig cfg;
    cfg.mode = ScanMode::random;
    cfg.sample_count = o.samples;
    cfg.seed = stream_seed(o.seed, name);
    cfg.delta = delta;
    const auto rep = scan_identity(id, cfg, tolerance, o.threads);
    Tally t;
    t.samples = rep.samples_evaluated;
    t.failures = rep.violation_count;
    t.max_residual = rep.max_residual.value_or(0.0);
    std::ostringstream note;
    note << "|t_i| <= " << 1.0 - delta;
    return finish(name, t, tolerance, note.str());
}

PropertyResult prop_sign_flip(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-12;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const SamplePoint p{d.u(), d.triple()};
        const SamplePoint q{p.lam, {-p.t[0], -p.t[1], -p.t[2]}};
        return residual_check(std::fabs(gap(p) - gap(q)), tol);
    });
    return finish(name, t, tol, "gap(lambda, -t) vs gap(lambda, t), absolute");
}

PropertyResult prop_endpoint_equality(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-12;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const auto tt = d.triple();
        const double lam = d.u();
        const double a = d.t();
        double r = std::fabs(gap(SamplePoint{0.0, tt}));
        r = std::max(r, std::fabs(gap(SamplePoint{1.0, tt})));
        r = std::max(r, std::fabs(gap(SamplePoint{lam, {a, -a, 0.0}})));
        Outcome out = residual_check(r, tol);
        return out;
    });
    return finish(name, t, tol, "lambda = 0, lambda = 1 and sigma = 0 slices");
}

// --------------------------------------------------------------- proof_heart

PropertyResult prop_h_endpoints(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-14;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const double x = d.log_u(1e-3, 1e3);
        const double lam = d.u();
        const double r = std::max({std::fabs(h(x, 0.0)), std::fabs(h(x, 1.0)), std::fabs(h(1.0, lam))});
        return residual_check(r, tol);
    });
    return finish(name, t, tol, "x log-uniform in [1e-3, 1e3]");
}

PropertyResult prop_h_prime_fd(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-6;
    constexpr double step = 1e-6;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const double x = d.log_u(1e-2, 1e2);
        const double lam = d.u(step, 1.0 - step);
        const double fd = (h(x, lam + step) - h(x, lam - step)) / (2.0 * step);
        return residual_check(std::fabs(h_prime(x, lam) - fd), tol);
    });
    return finish(name, t, tol, "central difference, step 1e-6, x in [1e-2, 1e2]");
}

PropertyResult prop_lambda_star_root(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-12;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const double x = d.log_u(1e-3, 1e3);
        if (x == 1.0) {
            return Outcome{.skipped = true};
        }
        const double ls = lambda_star(x);
        Outcome out = residual_check(std::fabs(h_prime(x, ls)), tol);
        out.failed = out.failed || !(ls > 0.0 && ls < 1.0);
        return out;
    });
    return finish(name, t, tol, "|h'(x, lambda*)|, x log-uniform in [1e-3, 1e3]");
}

PropertyResult prop_h_shape(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-14;
    const auto n = std::max<std::uint64_t>(1, o.samples / 100);
    const auto t = sample_loop(n, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const double x = d.log_u(1e-3, 1e3);
        if (x == 1.0) {
            return Outcome{.skipped = true};
        }
        const double ls = lambda_star(x);
        double worst = 0.0;
        double prev = h(x, 0.0);
        for (int i = 1; i < kLambdaGrid; ++i) {
            const double a = lambda_at(i - 1);
            const double b = lambda_at(i);
            const double cur = h(x, b);
            if (b <= ls) {
                worst = std::max(worst, prev - cur); // must not decrease
            } else if (a >= ls) {
                worst = std::max(worst, cur - prev); // must not increase
            }
            prev = cur;
        }
        return residual_check(worst, tol);
    });
    return finish(name, t, tol, "1000-point lambda grid; samples / 100 values of x");
}

PropertyResult prop_lemma5_conclusion(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-12;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const auto pair = premise_pair(d);
        if (!pair) {
            return Outcome{.skipped = true};
        }
        const auto [c, dd] = *pair;
        double worst = 0.0;
        for (int i = 0; i < kLambdaGrid; ++i) {
            const double lam = lambda_at(i);
            worst = std::max(worst, h(c, lam) - h(dd, lam));
        }
        return residual_check(worst, tol);
    });
    return finish(name, t, tol, "max of h_c - h_d over a 1000-point lambda grid");
}

PropertyResult prop_h_prime_gap_at_zero(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-12;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const auto pair = premise_pair(d);
        if (!pair) {
            return Outcome{.skipped = true};
        }
        const auto [c, dd] = *pair;
        const double lhs = h_prime(c, 0.0) - h_prime(dd, 0.0);
        const double rhs = c - dd - std::log(c / dd);
        Outcome out = residual_check(std::fabs(lhs - rhs) / (1.0 + c), tol);
        if (!(lhs < 0.0)) {
            if (std::fabs(lhs) <= 1e-14 * (1.0 + c)) {
                out.inconclusive = true;
            } else {
                out.failed = true;
            }
        }
        return out;
    });
    return finish(name, t, tol, "sign of h'_c(0) - h'_d(0) and agreement with c - d - ln(c/d)");
}

enum QuadCase { straddle = 0, both_above = 1, both_below = 2, c_is_one = 3, d_is_one = 4 };

PropertyResult prop_quad_root_cases(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-9;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        Outcome out;
        out.tag = static_cast<int>(d.index() % 5);
        double c = 1.0, dd = 1.0;
        switch (out.tag) {
        case straddle: {
            bool found = false;
            for (int tries = 0; tries < 64 && !found; ++tries) {
                c = d.log_u(1.0 + 1e-6, 8.0);
                dd = d.log_u(1e-3, 1.0 - 1e-6);
                found = lemma5_premise(c, dd) == PremiseStatus::holds;
            }
            if (!found) {
                return Outcome{.skipped = true};
            }
            break;
        }
        case both_above:
            c = d.log_u(1.0 + 1e-6, 8.0);
            dd = d.log_u(1.0 + 1e-6, 8.0);
            break;
        case both_below:
            c = d.log_u(1e-3, 1.0 - 1e-6);
            dd = d.log_u(1e-3, 1.0 - 1e-6);
            break;
        case c_is_one: {
            // h_d >= 0 = h_c on the whole lambda grid.
            dd = d.log_u(1e-3, 8.0);
            double worst = 0.0;
            for (int i = 0; i < kLambdaGrid; i += 10) {
                worst = std::max(worst, h(1.0, lambda_at(i)) - h(dd, lambda_at(i)));
            }
            out.failed = worst > 1e-15;
            out.residual = worst;
            return out;
        }
        case d_is_one:
            // premise c - 1 < ln c never holds
            c = d.log_u(1e-3, 8.0);
            out.failed = lemma5_premise(c, 1.0) == PremiseStatus::holds;
            return out;
        }
        if (c == dd) {
            return Outcome{.skipped = true};
        }
        const auto qa = quad_analysis(c, dd);
        if (qa.degenerate) {
            out.inconclusive = true;
            return out;
        }
        bool ok = qa.roots_in_unit() <= 1;
        if (out.tag == straddle) {
            ok = ok && qa.A < 0.0 && qa.roots.size() == 2 && qa.roots[0] * qa.roots[1] < 0.0;
        } else if (out.tag == both_above) {
            ok = ok && qa.vertex && *qa.vertex < 0.0;
        } else {
            ok = ok && qa.vertex && *qa.vertex > 1.0;
        }
        double res = 0.0;
        for (double r : qa.roots) {
            const double scale = std::fabs(qa.A) * r * r + std::fabs(qa.B * r) + std::fabs(qa.C) + 1.0;
            res = std::max(res, std::fabs((qa.A * r + qa.B) * r + qa.C) / scale);
        }
        if (qa.roots.size() == 2) {
            ok = ok && qa.vertex && qa.roots[0] <= *qa.vertex && *qa.vertex <= qa.roots[1];
            const double prod = qa.C / qa.A;
            res = std::max(res, std::fabs(qa.roots[0] * qa.roots[1] - prod) / std::max(1.0, std::fabs(prod)));
        }
        out.residual = res;
        out.failed = !ok || !(res <= tol);
        return out;
    });
    return finish(name, t, tol,
                  tag_counts(t, {"c>1>d under premise", "c,d>1", "c,d<1", "c=1", "d=1"})
                      + "; residual is the scaled root residual and Vieta product error");
}

// -------------------------------------------------------- conditionistrivial

enum SCase { generic = 0, two_zeros, one_zero, mixed_sign, both_negative, both_positive };

// t with sigma > 0 hitting one branch of the proof.
std::optional<Triple> s_case_point(Draw &d, int tag)
{
    const auto above_star = [&d](double t1, double t2) -> std::optional<Triple> {
        // sigma = (t1 + t2) + t3 (1 + t1 t2) > 0  iff  t3 > t3*
        const double lo = std::max(t3_star(t1, t2), -kEdge);
        const double t3 = d.u(lo, kEdge);
        const Triple t{t1, t2, t3};
        if (!(sigma(t) > 0.0)) {
            return std::nullopt;
        }
        return t;
    };
    switch (tag) {
    case generic:
        return positive_sigma(d.triple());
    case two_zeros:
        return Triple{0.0, 0.0, d.u(1e-6, kEdge)};
    case one_zero:
        return above_star(0.0, d.t());
    case mixed_sign:
        return above_star(d.u(1e-6, kEdge), -d.u(1e-6, kEdge));
    case both_negative:
        return above_star(-d.u(1e-6, kEdge), -d.u(1e-6, kEdge));
    case both_positive:
        return above_star(d.u(1e-6, kEdge), d.u(1e-6, kEdge));
    }
    return std::nullopt;
}

PropertyResult prop_s_negative(std::string_view name, const PropertyOptions &o)
{
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const int tag = static_cast<int>(d.index() % 6);
        const auto p = s_case_point(d, tag);
        if (!p) {
            return Outcome{.skipped = true};
        }
        Outcome out;
        out.tag = tag;
        const double v = s(*p);
        if (!(v < 0.0)) {
            const double floor = 1e-15 * (std::fabs(sigma(*p)) + std::fabs(f(*p)));
            if (v <= floor) {
                out.inconclusive = true;
            } else {
                out.failed = true;
                out.residual = v;
            }
        }
        return out;
    });
    return finish(name, t, 0.0,
                  tag_counts(t, {"generic", "two zeros", "one zero", "t1 t2 < 0", "both negative", "both positive"}));
}

PropertyResult prop_t3_star_root(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-12;
    constexpr double prod_tol = 1e-13;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        for (int tries = 0; tries < 64; ++tries) {
            const double t1 = d.t();
            const double t2 = d.t();
            const double t3 = t3_star(t1, t2);
            if (std::fabs(t3) > kEdge) {
                continue;
            }
            const Triple p{t1, t2, t3};
            const auto [c, dd] = product_pair(p);
            const double prod_res = std::fabs(c - dd) / (c + dd);
            Outcome out = residual_check(std::fabs(s(p)), tol);
            out.failed = out.failed || prod_res > prod_tol;
            return out;
        }
        return Outcome{.skipped = true};
    });
    return finish(name, t, tol, "|s(t1, t2, t3*)|; c = d to 1e-13 relative; t3* kept inside the margin");
}

PropertyResult prop_s_prime_roots(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-12;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        Outcome out;
        out.tag = static_cast<int>(d.index() % 3);
        double t1 = d.t();
        double t2 = d.t();
        if (out.tag == 1) {
            t1 = 0.0; // t1 t2 == 0: double root at 0
        } else if (out.tag == 2) {
            t2 = std::copysign(t2, -t1); // t1 t2 <= 0
        }
        const auto roots = s_prime_roots(t1, t2);
        const bool real_expected = t1 * t2 >= 0.0;
        if (roots.has_value() != real_expected) {
            out.failed = true;
            return out;
        }
        if (roots) {
            const auto [lo, hi] = *roots;
            out.residual = std::max(std::fabs(s_prime(t1, t2, lo)), std::fabs(s_prime(t1, t2, hi)));
            out.failed = !(out.residual <= tol) || lo != -hi || lo > hi;
        }
        return out;
    });
    return finish(name, t, tol, tag_counts(t, {"generic", "t1 = 0", "t1 t2 <= 0"}));
}

PropertyResult prop_s_prime_fd(std::string_view name, const PropertyOptions &o)
{
    constexpr double tol = 1e-6;
    constexpr double step = 1e-6;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const double t1 = d.u(-0.99, 0.99);
        const double t2 = d.u(-0.99, 0.99);
        const double t3 = d.u(-0.99, 0.99);
        const double fd = (s({t1, t2, t3 + step}) - s({t1, t2, t3 - step})) / (2.0 * step);
        return residual_check(std::fabs(s_prime(t1, t2, t3) - fd), tol);
    });
    return finish(name, t, tol, "central difference in t3, step 1e-6, |t_i| <= 0.99");
}

PropertyResult prop_taylor_bound(std::string_view name, const PropertyOptions &o)
{
    const auto n = std::max<std::uint64_t>(2, o.samples);
    const auto t = sample_loop(n, stream_seed(o.seed, name), o.threads, [n](Draw &d) {
        // Even samples walk a uniform grid including both ends, odd ones are
        // log-uniform so the small-t end is well covered.
        const auto i = d.index();
        double x = 0.0;
        if (i % 2 == 0) {
            const auto m = (n + 1) / 2;
            x = m < 2 ? kMargin : kMargin + (kEdge - kMargin) * (static_cast<double>(i / 2) / (m - 1));
            x = std::min(x, kEdge);
        } else {
            x = d.log_u(kMargin, kEdge);
        }
        const auto tc = taylor_check(x);
        Outcome out;
        if (tc.verdict == TaylorVerdict::violated) {
            out.failed = true;
        } else if (tc.verdict == TaylorVerdict::inconclusive) {
            // Settle the sign in binary128.
            const __float128 q = x;
            out.inconclusive = true;
            out.failed = !(atanhq(q) - q - q * q * q / 3 > 0);
        }
        return out;
    });
    return finish(name, t, 0.0,
                  "t in [1e-3, 1 - 1e-3]; margins below 1e-15 are inconclusive in binary64 and confirmed "
                  "positive in binary128");
}

PropertyResult prop_implication_chain(std::string_view name, const PropertyOptions &o)
{
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const int tag = static_cast<int>(d.index() % 6);
        const auto p = s_case_point(d, tag);
        if (!p) {
            return Outcome{.skipped = true};
        }
        Outcome out;
        out.tag = tag;
        const auto [c, dd] = product_pair(*p);
        const auto st = lemma5_premise(c, dd);
        if (st == PremiseStatus::degenerate) {
            out.inconclusive = true;
        } else if (st == PremiseStatus::fails) {
            const double margin = (std::log(c) - std::log(dd)) - (c - dd);
            if (std::fabs(margin) <= 1e-14 * (c + dd)) {
                out.inconclusive = true;
            } else {
                out.failed = true;
            }
        }
        return out;
    });
    return finish(name, t, 0.0, "lemma5_condition(prod_plus, prod_minus) for sigma > 0");
}

PropertyResult prop_both_negative_chain(std::string_view name, const PropertyOptions &o)
{
    std::uint64_t equal_pairs = 0;
    const auto t = sample_loop(o.samples, stream_seed(o.seed, name), o.threads, [](Draw &d) {
        const double t1 = -d.u(1e-6, kEdge);
        const double t2 = d.index() % 4 == 0 ? t1 : -d.u(1e-6, kEdge);
        const double p = t1 * t2;
        const double lhs = (t1 + t2) * (t1 + t2);
        const double mid = 2.0 * p;
        const double rhs = p * (1.0 + p);
        Outcome out;
        out.tag = t1 == t2 ? 1 : 0;
        const double ts = t3_star(t1, t2);
        const double rp = s_prime_roots(t1, t2)->second;
        out.failed = !(lhs > mid) || !(mid >= rhs) || !(ts > 0.0) || !(ts > rp);
        return out;
    });
    equal_pairs = t.per_tag[1];
    return finish(name, t, 0.0,
                  "(t1 + t2)^2 > 2 t1 t2 >= t1 t2 (1 + t1 t2) and t3* > r+; " + std::to_string(equal_pairs)
                      + " samples with t1 == t2, where the first inequality stays strict");
}

using Runner = PropertyResult (*)(std::string_view, const PropertyOptions &);

struct Entry {
    PropertyInfo info;
    Runner run;
};

PropertyResult run_prop2(std::string_view n, const PropertyOptions &o)
{
    return prop_identity(n, Identity::prop2, 1e-12, kMargin, o);
}
PropertyResult run_product_facts(std::string_view n, const PropertyOptions &o)
{
    return prop_identity(n, Identity::product_facts, 1e-13, kMargin, o);
}
PropertyResult run_log_forms(std::string_view n, const PropertyOptions &o)
{
    return prop_identity(n, Identity::log_forms, 1e-12, 0.01, o);
}

const std::vector<Entry> &entries()
{
    using S = PropertySuite;
    static const std::vector<Entry> table{
        {{"prop2", S::identities, "symmetrize_g equals sum t_i atanh(t_i)"}, run_prop2},
        {{"product_facts", S::identities, "c + d = 2(1 + e2), c - d = 2 sigma"}, run_product_facts},
        {{"log_forms", S::identities, "log and atanh forms of f and F_lambda agree"}, run_log_forms},
        {{"sign_flip", S::identities, "gap is even under t -> -t"}, prop_sign_flip},
        {{"endpoint_equality", S::identities, "gap vanishes at lambda in {0, 1} and sigma = 0"},
         prop_endpoint_equality},
        {{"h_endpoints", S::proof_heart, "h_x(0) = h_x(1) = 0 and h_1 = 0"}, prop_h_endpoints},
        {{"h_prime_fd", S::proof_heart, "h' matches central differences"}, prop_h_prime_fd},
        {{"lambda_star_root", S::proof_heart, "h'(x, lambda*) = 0"}, prop_lambda_star_root},
        {{"h_shape", S::proof_heart, "h rises on [0, lambda*] and falls on [lambda*, 1]"}, prop_h_shape},
        {{"lemma5_conclusion", S::proof_heart, "h_c <= h_d under 0 < c - d < ln c/d"}, prop_lemma5_conclusion},
        {{"h_prime_gap_at_zero", S::proof_heart, "h'_c(0) - h'_d(0) = c - d - ln c/d < 0"},
         prop_h_prime_gap_at_zero},
        {{"quad_root_cases", S::proof_heart, "at most one root in [0, 1], per sign case"}, prop_quad_root_cases},
        {{"s_negative", S::conditionistrivial, "s(t) < 0 whenever sigma > 0, per proof case"}, prop_s_negative},
        {{"t3_star_root", S::conditionistrivial, "s(t1, t2, t3*) = 0 and c = d there"}, prop_t3_star_root},
        {{"s_prime_roots", S::conditionistrivial, "r+- real iff t1 t2 >= 0 and zero s'"}, prop_s_prime_roots},
        {{"s_prime_fd", S::conditionistrivial, "s' matches central differences"}, prop_s_prime_fd},
        {{"taylor_bound", S::conditionistrivial, "atanh(t) > t + t^3/3"}, prop_taylor_bound},
        {{"implication_chain", S::conditionistrivial, "sigma > 0 implies the lemma premise for (c, d)"},
         prop_implication_chain},
        {{"both_negative_chain", S::conditionistrivial, "t3* > r+ when t1, t2 < 0"}, prop_both_negative_chain},
    };
    return table;
}

} // namespace

std::string_view to_string(PropertySuite s)
{
    switch (s) {
    case PropertySuite::identities:
        return "identities";
    case PropertySuite::proof_heart:
        return "proof_heart";
    case PropertySuite::conditionistrivial:
        return "conditionistrivial";
    }
    return "unknown";
}

const std::vector<PropertyInfo> &property_catalog()
{
    static const std::vector<PropertyInfo> catalog = [] {
        std::vector<PropertyInfo> v;
        for (const auto &e : entries()) {
            v.push_back(e.info);
        }
        return v;
    }();
    return catalog;
}

std::optional<PropertyResult> run_property(std::string_view name, const PropertyOptions &opts)
{
    for (const auto &e : entries()) {
        if (e.info.name == name) {
            return e.run(e.info.name, opts);
        }
    }
    return std::nullopt;
}

std::vector<PropertyResult> run_suite(PropertySuite suite, const PropertyOptions &opts)
{
    std::vector<PropertyResult> out;
    for (const auto &e : entries()) {
        if (e.info.suite == suite) {
            out.push_back(e.run(e.info.name, opts));
        }
    }
    return out;
}

std::vector<PropertyResult> run_all_properties(const PropertyOptions &opts)
{
    std::vector<PropertyResult> out;
    for (const auto &e : entries()) {
        out.push_back(e.run(e.info.name, opts));
    }
    return out;
}

} // namespace atanhcert
