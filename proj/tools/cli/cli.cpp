#include "cli.hpp"

#include <atanhcert/certifier.hpp>
#include <atanhcert/oracle.hpp>
#include <atanhcert/properties.hpp>
#include <atanhcert/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace atanhcert::cli
{

namespace
{

struct CertifyArgs {
    std::string mode = "relaxed";
    std::string symmetry = "on";
    std::string enclosure = "factored";
    CertConfig cfg;
    unsigned threads = 0;
    std::string out;
};

struct ScanArgs {
    int grid = 0;
    std::uint64_t random = 0;
    std::uint64_t seed = 42;
    double delta = 1e-3;
    double lambda_min = 0.0;
    double lambda_max = 1.0;
    double tolerance = 1e-11;
    bool clustered = false;
    unsigned threads = 0;
    std::string out;
};

struct PropsArgs {
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 7;
    bool list = false;
    std::vector<std::string> only;
    unsigned threads = 0;
};

struct SurfaceArgs {
    std::vector<std::string> fix;
    int grid = 101;
    double delta = 1e-3;
    std::string out;
};

class Clock
{
public:
    Clock() : wall_(std::chrono::system_clock::now()) {}

    RunManifest finish(std::string command, const std::vector<std::string> &args, std::string outcome) const
    {
        RunManifest m;
        m.command = std::move(command);
        m.arguments = args;
        m.started_at = rfc3339_utc(wall_);
        m.finished_at = rfc3339_utc(std::chrono::system_clock::now());
        m.outcome = std::move(outcome);
        return m;
    }

private:
    std::chrono::system_clock::time_point wall_;
};

// Writes to path, or to out when path is empty.
bool emit(const std::string &path, const std::string &text, std::ostream &out, std::ostream &err)
{
    if (path.empty()) {
        out << text;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        err << "error: cannot write " << path << '\n';
        return false;
    }
    return true;
}

int cmd_certify(const CertifyArgs &a, const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CertConfig cfg = a.cfg;
    cfg.mode = *parse_cert_mode(a.mode);
    cfg.use_symmetry = a.symmetry == "on";
    cfg.enclosure = *parse_enclosure(a.enclosure);
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    const Clock clock;
    const auto cert = certify(cfg, {a.threads, nullptr});
    const auto manifest = clock.finish("certify", args, std::string(to_string(cert.status)));
    if (!emit(a.out, certificate_to_json(cert, manifest), out, err)) {
        return kUsage;
    }
    if (!a.out.empty()) {
        out << to_string(cert.status) << ": " << cert.boxes_verified << " boxes verified, " << cert.boxes_processed
            << " processed, max depth " << cert.max_depth_reached;
        if (cert.worst_lower_bound) {
            out << ", worst lower bound " << format_shortest(*cert.worst_lower_bound);
        }
        out << ", " << std::fixed << std::setprecision(2) << cert.wall_time << " s\n";
    }
    switch (cert.status) {
    case CertStatus::proved:
        return kOk;
    case CertStatus::refuted:
        return kRefuted;
    case CertStatus::inconclusive:
        return kInconclusive;
    }
    return kInconclusive;
}

int cmd_scan(const ScanArgs &a, const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    ScanConfig cfg;
    if (a.random > 0) {
        cfg.mode = ScanMode::random;
        cfg.sample_count = a.random;
        cfg.seed = a.seed;
    } else {
        cfg.mode = ScanMode::grid;
        cfg.resolution = a.grid == 0 ? 21 : a.grid;
        cfg.clustered = a.clustered;
    }
    cfg.delta = a.delta;
    cfg.lambda_min = a.lambda_min;
    cfg.lambda_max = a.lambda_max;
    if (!(a.tolerance >= 0.0)) {
        err << "error: tolerance must be nonnegative\n";
        return kUsage;
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    const Clock clock;
    const auto report = scan_gap(cfg, a.tolerance, a.threads);
    const bool clean = report.violation_count == 0;
    const auto manifest = clock.finish("scan", args, clean ? "clean" : "violations");
    if (!emit(a.out, scan_report_to_json({report, cfg, a.tolerance, manifest}), out, err)) {
        return kUsage;
    }
    if (!a.out.empty()) {
        out << report.samples_evaluated << " points, " << report.violation_count << " violations, min gap "
            << format_shortest(report.min_gap) << " at " << report.argmin << " (proximity "
            << format_shortest(manifold_proximity(report.argmin)) << ")\n";
    }
    return clean ? kOk : kRefuted;
}

int cmd_props(const PropsArgs &a, std::ostream &out, std::ostream &err)
{
    if (a.list) {
        for (const auto &p : property_catalog()) {
            out << std::left << std::setw(22) << p.name << std::setw(20) << to_string(p.suite) << p.summary << '\n';
        }
        return kOk;
    }
    std::vector<std::string_view> names;
    if (a.only.empty()) {
        for (const auto &p : property_catalog()) {
            names.push_back(p.name);
        }
    } else {
        for (const auto &n : a.only) {
            const bool known = std::any_of(property_catalog().begin(), property_catalog().end(),
                                           [&](const PropertyInfo &p) { return p.name == n; });
            if (!known) {
                err << "error: unknown property '" << n << "' (see --list)\n";
                return kUsage;
            }
            names.push_back(n);
        }
    }

    const PropertyOptions opts{a.samples, a.seed, a.threads};
    bool all = true;
    for (auto n : names) {
        const auto r = *run_property(n, opts);
        all = all && r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.name
            << " max_residual=" << format_shortest(r.max_residual) << " tolerance=" << format_shortest(r.tolerance)
            << " samples=" << r.samples << " failures=" << r.failures << " inconclusive=" << r.inconclusive;
        if (!r.note.empty()) {
            out << "  # " << r.note;
        }
        out << '\n';
    }
    return all ? kOk : kUsage;
}

int cmd_gap_surface(const SurfaceArgs &a, std::ostream &out, std::ostream &err)
{
    if (a.fix.size() != 2) {
        err << "error: exactly two --fix axis=value options are required (got " << a.fix.size() << ")\n";
        return kUsage;
    }
    SurfaceSpec spec;
    for (std::size_t k = 0; k < 2; ++k) {
        const auto &f = a.fix[k];
        const auto eq = f.find('=');
        const auto axis = parse_axis(f.substr(0, eq));
        if (eq == std::string::npos || !axis) {
            err << "error: --fix expects lambda|t1|t2|t3=value, got '" << f << "'\n";
            return kUsage;
        }
        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(f.substr(eq + 1), &used);
            if (used != f.size() - eq - 1) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            err << "error: bad number in --fix '" << f << "'\n";
            return kUsage;
        }
        spec.fixed_axes[k] = *axis;
        spec.fixed_values[k] = v;
    }
    spec.grid = a.grid;
    spec.delta = a.delta;
    try {
        spec.validate();
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    std::ostringstream csv;
    write_gap_surface_csv(csv, compute_gap_surface(spec));
    return emit(a.out, csv.str(), out, err) ? kOk : kUsage;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Validated numerics for the arctanh mixing inequality", "atanhcert"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    CertifyArgs ca;
    auto *certify_cmd = app.add_subcommand("certify", "Branch-and-bound certification of gap >= 0");
    certify_cmd->add_option("--mode", ca.mode, "relaxed (gap >= -epsilon) or strict (gap > 0 on a sub-domain)")
        ->check(CLI::IsMember({"relaxed", "strict"}))
        ->capture_default_str();
    certify_cmd->add_option("--epsilon", ca.cfg.epsilon, "Relaxation in relaxed mode")->capture_default_str();
    certify_cmd->add_option("--delta", ca.cfg.delta_margin, "t_i range is [-1 + delta, 1 - delta]")
        ->capture_default_str();
    certify_cmd->add_option("--sigma-min", ca.cfg.sigma_min, "Strict mode: |sigma| >= sigma-min")
        ->capture_default_str();
    certify_cmd->add_option("--lambda-margin", ca.cfg.lambda_margin, "Strict mode: lambda in [m, 1 - m]")
        ->capture_default_str();
    certify_cmd->add_option("--max-depth", ca.cfg.max_depth, "Bisection depth limit")->capture_default_str();
    certify_cmd->add_option("--max-boxes", ca.cfg.max_boxes, "Budget of processed boxes")->capture_default_str();
    certify_cmd->add_option("--lambda-weight", ca.cfg.lambda_split_weight, "Split score multiplier for lambda")
        ->capture_default_str();
    certify_cmd->add_option("--symmetry", ca.symmetry, "Discard boxes mirrored by t -> -t")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    certify_cmd->add_option("--enclosure", ca.enclosure, "Box bound: factored or natural")
        ->check(CLI::IsMember({"factored", "natural"}))
        ->capture_default_str();
    certify_cmd->add_option("--threads", ca.threads, "Worker threads (0: all cores)")->capture_default_str();
    certify_cmd->add_option("--out", ca.out, "Certificate path (default: standard output)");

    ScanArgs sa;
    auto *scan_cmd = app.add_subcommand("scan", "Floating-point grid or random scan of the gap");
    auto *grid_opt = scan_cmd->add_option("--grid", sa.grid, "Points per axis (default 21)");
    auto *random_opt = scan_cmd->add_option("--random", sa.random, "Number of random samples");
    grid_opt->excludes(random_opt);
    scan_cmd->add_option("--seed", sa.seed, "Random seed")->capture_default_str();
    scan_cmd->add_option("--delta", sa.delta, "t_i range is [-1 + delta, 1 - delta]")->capture_default_str();
    scan_cmd->add_option("--lambda-min", sa.lambda_min)->capture_default_str();
    scan_cmd->add_option("--lambda-max", sa.lambda_max)->capture_default_str();
    scan_cmd->add_option("--tolerance", sa.tolerance, "Violation when gap < -tolerance")->capture_default_str();
    scan_cmd->add_flag("--clustered", sa.clustered, "Chebyshev spacing on the t axes");
    scan_cmd->add_option("--threads", sa.threads, "Worker threads (0: all cores)")->capture_default_str();
    scan_cmd->add_option("--out", sa.out, "Report path (default: standard output)");

    PropsArgs pa;
    auto *props_cmd = app.add_subcommand("props", "Run the property suites");
    props_cmd->add_option("--samples", pa.samples, "Samples per property")->capture_default_str();
    props_cmd->add_option("--seed", pa.seed, "Random seed")->capture_default_str();
    props_cmd->add_flag("--list", pa.list, "List property names and exit");
    props_cmd->add_option("--only", pa.only, "Run only the named properties");
    props_cmd->add_option("--threads", pa.threads, "Worker threads (0: all cores)")->capture_default_str();

    SurfaceArgs ga;
    auto *surface_cmd = app.add_subcommand("gap-surface", "CSV of the gap over two free axes");
    surface_cmd->add_option("--fix", ga.fix, "Pin an axis, e.g. lambda=0.5 (exactly twice)");
    surface_cmd->add_option("--grid", ga.grid, "Points per free axis")->capture_default_str();
    surface_cmd->add_option("--delta", ga.delta, "t axes end at -+(1 - delta)")->capture_default_str();
    surface_cmd->add_option("--out", ga.out, "CSV path (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (certify_cmd->parsed()) {
            return cmd_certify(ca, args, out, err);
        }
        if (scan_cmd->parsed()) {
            return cmd_scan(sa, args, out, err);
        }
        if (props_cmd->parsed()) {
            return cmd_props(pa, out, err);
        }
        if (surface_cmd->parsed()) {
            return cmd_gap_surface(ga, out, err);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace atanhcert::cli
