// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include "cli.hpp"
#include "fuzz.hpp"

#include <atanhcert/certifier.hpp>
#include <atanhcert/properties.hpp>
#include <atanhcert/random.hpp>
#include <atanhcert/report.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace atanhcert;

namespace
{

int failures = 0;

void report(int id, const std::string &name, bool ok, const std::string &detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
    if (!ok) {
        ++failures;
    }
}

struct CliRun {
    int code;
    std::string out;
    double seconds;
};

CliRun cli(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::run_cli(args, out, err);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    if (!err.str().empty()) {
        std::cerr << err.str();
    }
    return {code, out.str(), dt.count()};
}

std::string num(double x) { return format_shortest(x); }

void certify_relaxed()
{
    const auto r = cli({"certify", "--mode", "relaxed", "--epsilon", "1e-9", "--delta", "1e-3", "--max-boxes",
                        "10000000"});
    bool ok = r.code == cli::kOk && r.seconds < 600.0;
    std::string detail = "exit " + std::to_string(r.code);
    if (ok) {
        const auto c = certificate_from_json(r.out).certificate;
        ok = c.status == CertStatus::proved && c.worst_lower_bound && *c.worst_lower_bound >= -1e-9
             && *c.worst_lower_bound <= 0.0;
        detail = std::string(to_string(c.status)) + ", worst lower bound "
                 + (c.worst_lower_bound ? num(*c.worst_lower_bound) : "none") + ", "
                 + std::to_string(c.boxes_verified) + " boxes verified";
    }
    report(1, "relaxed certification", ok, detail + ", " + num(r.seconds) + " s");
}

void certify_strict()
{
    const auto r = cli({"certify", "--mode", "strict", "--sigma-min", "0.1", "--lambda-margin", "0.05"});
    bool ok = r.code == cli::kOk && r.seconds < 600.0;
    std::string detail = "exit " + std::to_string(r.code);
    if (ok) {
        const auto c = certificate_from_json(r.out).certificate;
        ok = c.status == CertStatus::proved && c.worst_lower_bound && *c.worst_lower_bound > 0.0;
        detail = std::string(to_string(c.status)) + ", worst lower bound "
                 + (c.worst_lower_bound ? num(*c.worst_lower_bound) : "none");
    }
    report(2, "strict-interior certification", ok, detail + ", " + num(r.seconds) + " s");
}

void oracle_scans()
{
    bool ok = true;
    std::string detail;
    for (const auto &args : {std::vector<std::string>{"scan", "--grid", "21", "--delta", "0.05"},
                             std::vector<std::string>{"scan", "--random", "1000000", "--seed", "42"}}) {
        const auto r = cli(args);
        if (r.code != cli::kOk) {
            ok = false;
            detail += args[1] + ": exit " + std::to_string(r.code) + "; ";
            continue;
        }
        const auto doc = scan_report_from_json(r.out);
        const double prox = manifold_proximity(doc.report.argmin);
        ok = ok && doc.report.violation_count == 0 && doc.report.min_gap >= -1e-11 && prox < 1e-2;
        detail += args[1] + ": " + std::to_string(doc.report.samples_evaluated) + " points, "
                  + std::to_string(doc.report.violation_count) + " violations, min " + num(doc.report.min_gap)
                  + ", proximity " + num(prox) + "; ";
    }
    report(3, "oracle scans", ok, detail);
}

void single_property(int id, const char *name, const char *label)
{
    const auto r = run_property(name, PropertyOptions{.samples = 100'000});
    const bool ok = r && r->passed;
    report(id, label, ok,
           r ? "max residual " + num(r->max_residual) + " (tolerance " + num(r->tolerance) + ")" : "missing");
}

void suite(int id, PropertySuite s, const char *label)
{
    bool ok = true;
    std::string failed;
    const auto results = run_suite(s, PropertyOptions{.samples = 100'000});
    for (const auto &r : results) {
        if (!r.passed) {
            ok = false;
            failed += " " + r.name;
        }
    }
    report(id, label, ok && !results.empty(),
           std::to_string(results.size()) + " properties" + (failed.empty() ? ", all pass" : ", failed:" + failed));
}

std::uint64_t resample(const std::vector<Box> &boxes, double floor, std::uint64_t seed)
{
    CounterRng rng(seed);
    std::uint64_t bad = 0;
    for (const auto &b : boxes) {
        for (int k = 0; k < 100; ++k) {
            SamplePoint p{rng.uniform(b.lam.lo(), b.lam.hi()), {}};
            for (int j = 0; j < 3; ++j) {
                p.t[j] = rng.uniform(b.t[j].lo(), b.t[j].hi());
            }
            if (gap(p) < floor) {
                ++bad;
            }
        }
    }
    return bad;
}

void soundness()
{
    const auto fz = testing::containment_fuzz(1'000'000, 20260101);

    CertConfig relaxed;
    std::vector<Box> rb;
    const auto rc = certify(relaxed, {.verified_boxes = &rb});
    const auto rbad = resample(rb, -relaxed.epsilon - 1e-12, 1);

    CertConfig strict;
    strict.mode = CertMode::strict_interior;
    std::vector<Box> sb;
    const auto sc = certify(strict, {.verified_boxes = &sb});
    const auto sbad = resample(sb, -1e-12, 2);

    const bool ok = fz.violations == 0 && rbad == 0 && sbad == 0 && rc.status == CertStatus::proved
                    && sc.status == CertStatus::proved;
    std::string detail = std::to_string(fz.checks) + " containment checks, " + std::to_string(fz.violations)
                         + " violations; " + std::to_string(rb.size() + sb.size()) + " verified boxes x 100 points, "
                         + std::to_string(rbad + sbad) + " below bound";
    if (!fz.first_violation.empty()) {
        detail += "; first: " + fz.first_violation;
    }
    report(8, "interval soundness", ok, detail);
}

void determinism()
{
    bool ok = true;
    std::string detail;
    for (const auto &args : {std::vector<std::string>{"scan", "--random", "200000", "--seed", "42"},
                             std::vector<std::string>{"scan", "--grid", "15", "--clustered"},
                             std::vector<std::string>{"certify", "--mode", "relaxed"},
                             std::vector<std::string>{"certify", "--mode", "strict"}}) {
        const auto a = cli(args);
        const auto b = cli(args);
        const bool same = strip_timing(a.out) == strip_timing(b.out) && a.code == b.code;
        ok = ok && same && a.code == cli::kOk;
        detail += args[0] + " " + args[2] + (same ? " identical; " : " differs; ");
    }
    // Thread count does not change the results, only the echoed arguments.
    CertConfig cfg;
    const auto one = certify(cfg, {.threads = 1});
    const auto four = certify(cfg, {.threads = 4});
    const RunManifest m;
    const bool threads_same = strip_timing(certificate_to_json(one, m)) == strip_timing(certificate_to_json(four, m));
    ok = ok && threads_same;
    detail += threads_same ? "1 vs 4 threads identical" : "1 vs 4 threads differ";
    report(9, "determinism", ok, detail);
}

} // namespace

int main()
{
    certify_relaxed();
    certify_strict();
    oracle_scans();
    single_property(4, "prop2", "Proposition 2 identity");
    single_property(5, "product_facts", "product facts");
    suite(6, PropertySuite::proof_heart, "proof_heart suite");
    suite(7, PropertySuite::conditionistrivial, "conditionistrivial suite");
    soundness();
    determinism();
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
