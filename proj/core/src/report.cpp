#include <atanhcert/report.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <tuple>

namespace atanhcert
{

using Json = nlohmann::ordered_json;

namespace
{

Json interval_json(const Interval &x)
{
    return Json::array({x.lo(), x.hi()});
}

Interval interval_from(const Json &j)
{
    return Interval::make(j.at(0).get<double>(), j.at(1).get<double>());
}

Json box_json(const Box &b)
{
    return Json{{"lambda", interval_json(b.lam)},
                {"t", Json::array({interval_json(b.t[0]), interval_json(b.t[1]), interval_json(b.t[2])})},
                {"depth", b.depth}};
}

Box box_from(const Json &j)
{
    Box b;
    b.lam = interval_from(j.at("lambda"));
    for (std::size_t i = 0; i < 3; ++i) {
        b.t[i] = interval_from(j.at("t").at(i));
    }
    b.depth = j.at("depth").get<int>();
    return b;
}

Json point_json(const SamplePoint &p)
{
    return Json{{"lambda", p.lam}, {"t", Json::array({p.t[0], p.t[1], p.t[2]})}};
}

SamplePoint point_from(const Json &j)
{
    SamplePoint p;
    p.lam = j.at("lambda").get<double>();
    for (std::size_t i = 0; i < 3; ++i) {
        p.t[i] = j.at("t").at(i).get<double>();
    }
    return p;
}

Json cert_config_json(const CertConfig &c)
{
    return Json{{"mode", to_string(c.mode)},
                {"epsilon", c.epsilon},
                {"delta_margin", c.delta_margin},
                {"sigma_min", c.sigma_min},
                {"lambda_margin", c.lambda_margin},
                {"max_depth", c.max_depth},
                {"max_boxes", c.max_boxes},
                {"use_symmetry", c.use_symmetry},
                {"lambda_split_weight", c.lambda_split_weight},
                {"enclosure", to_string(c.enclosure)}};
}

CertConfig cert_config_from(const Json &j)
{
    CertConfig c;
    const auto mode = parse_cert_mode(j.at("mode").get<std::string>());
    const auto enc = parse_enclosure(j.at("enclosure").get<std::string>());
    if (!mode || !enc) {
        throw ReportError("unknown mode or enclosure in config");
    }
    c.mode = *mode;
    c.enclosure = *enc;
    c.epsilon = j.at("epsilon").get<double>();
    c.delta_margin = j.at("delta_margin").get<double>();
    c.sigma_min = j.at("sigma_min").get<double>();
    c.lambda_margin = j.at("lambda_margin").get<double>();
    c.max_depth = j.at("max_depth").get<int>();
    c.max_boxes = j.at("max_boxes").get<std::uint64_t>();
    c.use_symmetry = j.at("use_symmetry").get<bool>();
    c.lambda_split_weight = j.at("lambda_split_weight").get<double>();
    return c;
}

Json scan_config_json(const ScanConfig &c, double tolerance)
{
    Json j{{"mode", c.mode == ScanMode::grid ? "grid" : "random"}};
    if (c.mode == ScanMode::grid) {
        j["resolution"] = c.resolution;
        j["clustered"] = c.clustered;
    } else {
        j["sample_count"] = c.sample_count;
        j["seed"] = c.seed;
    }
    j["delta"] = c.delta;
    j["lambda_min"] = c.lambda_min;
    j["lambda_max"] = c.lambda_max;
    j["tolerance"] = tolerance;
    return j;
}

std::pair<ScanConfig, double> scan_config_from(const Json &j)
{
    ScanConfig c;
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "grid") {
        c.mode = ScanMode::grid;
        c.resolution = j.at("resolution").get<int>();
        c.clustered = j.at("clustered").get<bool>();
    } else if (mode == "random") {
        c.mode = ScanMode::random;
        c.sample_count = j.at("sample_count").get<std::uint64_t>();
        c.seed = j.at("seed").get<std::uint64_t>();
    } else {
        throw ReportError("unknown scan mode: " + mode);
    }
    c.delta = j.at("delta").get<double>();
    c.lambda_min = j.at("lambda_min").get<double>();
    c.lambda_max = j.at("lambda_max").get<double>();
    return {c, j.at("tolerance").get<double>()};
}

Json manifest_json(const RunManifest &m, const Json &config)
{
    return Json{{"command", m.command},
                {"arguments", m.arguments},
                {"config", config},
                {"tool_version", m.tool_version},
                {"started_at", m.started_at},
                {"finished_at", m.finished_at},
                {"wall_time_seconds", m.wall_time_seconds},
                {"outcome", m.outcome}};
}

RunManifest manifest_from(const Json &j)
{
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.arguments = j.at("arguments").get<std::vector<std::string>>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.started_at = j.at("started_at").get<std::string>();
    m.finished_at = j.at("finished_at").get<std::string>();
    m.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    m.outcome = j.at("outcome").get<std::string>();
    return m;
}

Json parse_document(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception &e) {
        throw ReportError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("schema_version") || j["schema_version"] != kSchemaVersion) {
        throw ReportError("missing or unsupported schema_version");
    }
    return j;
}

template <typename Fn>
auto guarded(Fn &&fn)
{
    try {
        return fn();
    } catch (const Json::exception &e) {
        throw ReportError(std::string("invalid document: ") + e.what());
    } catch (const IntervalError &e) {
        throw ReportError(std::string("invalid interval: ") + e.what());
    }
}

std::string dump(const Json &j)
{
    return j.dump(2) + "\n";
}

bool needs_quotes(std::string_view s)
{
    return s.find_first_of(",\"\r\n") != std::string_view::npos;
}

} // namespace

std::string rfc3339_utc(std::chrono::system_clock::time_point tp)
{
    const auto secs = std::chrono::time_point_cast<std::chrono::seconds>(tp);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(tp - secs).count();
    const std::time_t tt = std::chrono::system_clock::to_time_t(secs);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[40];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
    char out[48];
    std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
    return out;
}

std::string certificate_to_json(const Certificate &c, const RunManifest &m)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["status"] = to_string(c.status);
    j["worst_lower_bound"] = c.worst_lower_bound ? Json(*c.worst_lower_bound) : Json(nullptr);
    j["boxes_processed"] = c.boxes_processed;
    j["boxes_verified"] = c.boxes_verified;
    j["boxes_split"] = c.boxes_split;
    j["boxes_discarded"] = c.boxes_discarded;
    j["boxes_excluded"] = c.boxes_excluded;
    j["max_depth_reached"] = c.max_depth_reached;
    j["budget_exhausted"] = c.budget_exhausted;
    j["volume"] = Json{{"domain", c.domain_volume},
                       {"verified", c.verified_volume},
                       {"discarded_by_symmetry", c.discarded_volume},
                       {"excluded", c.excluded_volume}};
    if (c.witness) {
        j["witness"] = box_json(*c.witness);
    }
    if (c.witness_point) {
        j["witness_point"] = point_json(*c.witness_point);
        j["witness_gap"] = gap(*c.witness_point);
    }
    const auto cfg = cert_config_json(c.config);
    j["config"] = cfg;
    auto manifest = m;
    manifest.wall_time_seconds = c.wall_time;
    j["manifest"] = manifest_json(manifest, cfg);
    return dump(j);
}

ParsedCertificate certificate_from_json(std::string_view text)
{
    const auto j = parse_document(text);
    return guarded([&] {
        ParsedCertificate p;
        auto &c = p.certificate;
        const auto status = parse_cert_status(j.at("status").get<std::string>());
        if (!status) {
            throw ReportError("unknown certificate status");
        }
        c.status = *status;
        if (!j.at("worst_lower_bound").is_null()) {
            c.worst_lower_bound = j["worst_lower_bound"].get<double>();
        }
        c.boxes_processed = j.at("boxes_processed").get<std::uint64_t>();
        c.boxes_verified = j.at("boxes_verified").get<std::uint64_t>();
        c.boxes_split = j.at("boxes_split").get<std::uint64_t>();
        c.boxes_discarded = j.at("boxes_discarded").get<std::uint64_t>();
        c.boxes_excluded = j.at("boxes_excluded").get<std::uint64_t>();
        c.max_depth_reached = j.at("max_depth_reached").get<int>();
        c.budget_exhausted = j.at("budget_exhausted").get<bool>();
        const auto &v = j.at("volume");
        c.domain_volume = v.at("domain").get<double>();
        c.verified_volume = v.at("verified").get<double>();
        c.discarded_volume = v.at("discarded_by_symmetry").get<double>();
        c.excluded_volume = v.at("excluded").get<double>();
        if (j.contains("witness")) {
            c.witness = box_from(j["witness"]);
        }
        if (j.contains("witness_point")) {
            c.witness_point = point_from(j["witness_point"]);
        }
        c.config = cert_config_from(j.at("config"));
        p.manifest = manifest_from(j.at("manifest"));
        c.wall_time = p.manifest.wall_time_seconds;
        return p;
    });
}

std::string scan_report_to_json(const ScanDocument &d)
{
    const auto &r = d.report;
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["min_gap"] = r.min_gap;
    j["argmin"] = point_json(r.argmin);
    j["argmin_proximity"] = manifold_proximity(r.argmin);
    j["samples_evaluated"] = r.samples_evaluated;
    j["violation_count"] = r.violation_count;
    Json violations = Json::array();
    for (const auto &p : r.violations) {
        violations.push_back(point_json(p));
    }
    j["violations"] = std::move(violations);
    const auto cfg = scan_config_json(d.config, d.tolerance);
    j["config"] = cfg;
    auto manifest = d.manifest;
    manifest.wall_time_seconds = r.wall_time;
    j["manifest"] = manifest_json(manifest, cfg);
    return dump(j);
}

ScanDocument scan_report_from_json(std::string_view text)
{
    const auto j = parse_document(text);
    return guarded([&] {
        ScanDocument d;
        auto &r = d.report;
        r.min_gap = j.at("min_gap").get<double>();
        r.argmin = point_from(j.at("argmin"));
        r.samples_evaluated = j.at("samples_evaluated").get<std::uint64_t>();
        r.violation_count = j.at("violation_count").get<std::uint64_t>();
        for (const auto &p : j.at("violations")) {
            r.violations.push_back(point_from(p));
        }
        std::tie(d.config, d.tolerance) = scan_config_from(j.at("config"));
        d.manifest = manifest_from(j.at("manifest"));
        r.wall_time = d.manifest.wall_time_seconds;
        return d;
    });
}

std::string config_to_json(const CertConfig &cfg)
{
    return dump(cert_config_json(cfg));
}

CertConfig config_from_json(std::string_view text)
{
    return guarded([&] {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception &e) {
            throw ReportError(std::string("malformed JSON: ") + e.what());
        }
        return cert_config_from(j);
    });
}

std::string strip_timing(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception &e) {
        throw ReportError(std::string("malformed JSON: ") + e.what());
    }
    if (j.contains("manifest") && j["manifest"].is_object()) {
        for (const char *key : {"started_at", "finished_at", "wall_time_seconds"}) {
            j["manifest"].erase(key);
        }
    }
    return dump(j);
}

std::string format_shortest(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void CsvWriter::header(std::span<const std::string> names)
{
    bool first = true;
    for (const auto &n : names) {
        os_ << (first ? "" : ",");
        first = false;
        if (needs_quotes(n)) {
            os_ << '"';
            for (char ch : n) {
                os_ << (ch == '"' ? "\"\"" : std::string(1, ch));
            }
            os_ << '"';
        } else {
            os_ << n;
        }
    }
    os_ << '\n';
}

void CsvWriter::row(std::span<const double> values)
{
    bool first = true;
    for (double v : values) {
        os_ << (first ? "" : ",") << format_shortest(v);
        first = false;
    }
    os_ << '\n';
}

std::string_view to_string(Axis a)
{
    switch (a) {
    case Axis::lambda:
        return "lambda";
    case Axis::t1:
        return "t1";
    case Axis::t2:
        return "t2";
    case Axis::t3:
        return "t3";
    }
    return "?";
}

std::optional<Axis> parse_axis(std::string_view s)
{
    for (auto a : {Axis::lambda, Axis::t1, Axis::t2, Axis::t3}) {
        if (to_string(a) == s) {
            return a;
        }
    }
    return std::nullopt;
}

void SurfaceSpec::validate() const
{
    if (fixed_axes[0] == fixed_axes[1]) {
        throw std::invalid_argument("the two pinned axes must differ");
    }
    if (grid < 2) {
        throw std::invalid_argument("grid must be at least 2");
    }
    if (!(delta > 0.0 && delta < 0.5)) {
        throw std::invalid_argument("delta must lie in (0, 0.5)");
    }
    for (int k = 0; k < 2; ++k) {
        const double v = fixed_values[k];
        const bool ok = fixed_axes[k] == Axis::lambda ? (v >= 0.0 && v <= 1.0) : std::fabs(v) < 1.0;
        if (!ok) {
            throw std::invalid_argument("pinned value for " + std::string(to_string(fixed_axes[k]))
                                        + " lies outside the domain");
        }
    }
}

std::vector<double> surface_axis(Axis a, int n, double delta)
{
    std::vector<double> v(static_cast<std::size_t>(n));
    const auto last = n - 1;
    for (int j = 0; j < n; ++j) {
        const double frac = static_cast<double>(j) / last;
        if (a == Axis::lambda) {
            v[static_cast<std::size_t>(j)] = j == last ? 1.0 : frac;
        } else if (j == 0) {
            v[0] = -(1.0 - delta);
        } else if (j == last) {
            v[static_cast<std::size_t>(j)] = 1.0 - delta;
        } else {
            const double x = static_cast<double>(2 * j - last) / last;
            v[static_cast<std::size_t>(j)] = std::clamp(x, -(1.0 - delta), 1.0 - delta);
        }
    }
    return v;
}

GapSurface compute_gap_surface(const SurfaceSpec &spec)
{
    spec.validate();
    GapSurface s;
    int k = 0;
    for (auto a : {Axis::lambda, Axis::t1, Axis::t2, Axis::t3}) {
        if (a != spec.fixed_axes[0] && a != spec.fixed_axes[1]) {
            s.free_axes[k++] = a;
        }
    }
    s.first = surface_axis(s.free_axes[0], spec.grid, spec.delta);
    s.second = surface_axis(s.free_axes[1], spec.grid, spec.delta);

    const auto set = [](SamplePoint &p, Axis a, double v) {
        if (a == Axis::lambda) {
            p.lam = v;
        } else {
            p.t[static_cast<std::size_t>(a) - 1] = v;
        }
    };
    SamplePoint p;
    set(p, spec.fixed_axes[0], spec.fixed_values[0]);
    set(p, spec.fixed_axes[1], spec.fixed_values[1]);
    s.gap.reserve(s.first.size() * s.second.size());
    for (double x : s.first) {
        for (double y : s.second) {
            set(p, s.free_axes[0], x);
            set(p, s.free_axes[1], y);
            s.gap.push_back(gap(p));
        }
    }
    return s;
}

void write_gap_surface_csv(std::ostream &os, const GapSurface &s)
{
    CsvWriter w(os);
    const std::string names[3] = {std::string(to_string(s.free_axes[0])), std::string(to_string(s.free_axes[1])),
                                  "gap"};
    w.header(names);
    std::size_t k = 0;
    for (double x : s.first) {
        for (double y : s.second) {
            const double row[3] = {x, y, s.gap[k++]};
            w.row(row);
        }
    }
}

} // namespace atanhcert
