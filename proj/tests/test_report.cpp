#include <atanhcert/report.hpp>

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace atanhcert;

namespace
{

RunManifest sample_manifest()
{
    RunManifest m;
    m.command = "certify";
    m.arguments = {"certify", "--delta", "0.05"};
    m.started_at = "2026-01-02T03:04:05Z";
    m.finished_at = "2026-01-02T03:04:06Z";
    m.wall_time_seconds = 1.25;
    m.outcome = "proved";
    return m;
}

} // namespace

TEST_CASE("rfc3339_utc")
{
    using namespace std::chrono;
    CHECK(rfc3339_utc(system_clock::time_point{}) == "1970-01-01T00:00:00.000Z");
    const auto tp = sys_days{year{2026} / 10 / 15} + hours{13} + minutes{7} + seconds{9};
    CHECK(rfc3339_utc(tp) == "2026-10-15T13:07:09.000Z");
}

TEST_CASE("format_shortest round trips")
{
    CHECK(format_shortest(0.1) == "0.1");
    CHECK(format_shortest(-1e-9) == "-1e-09");
    for (double x : {1.0 / 3.0, -9.993444809282204e-10, 5e-324, 1.7976931348623157e308}) {
        CHECK(std::strtod(format_shortest(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("config json round trip")
{
    CertConfig cfg;
    cfg.mode = CertMode::strict_interior;
    cfg.epsilon = 3e-10;
    cfg.max_boxes = 12345;
    cfg.use_symmetry = false;
    cfg.enclosure = Enclosure::natural;
    CHECK(config_from_json(config_to_json(cfg)) == cfg);
    CHECK(config_from_json(config_to_json(CertConfig{})) == CertConfig{});
    CHECK_THROWS_AS((void)config_from_json("{"), ReportError);
    CHECK_THROWS_AS((void)config_from_json("{\"mode\": \"sideways\"}"), ReportError);
}

TEST_CASE("certificate json round trip")
{
    CertConfig cfg;
    cfg.delta_margin = 0.05;
    const auto cert = certify(cfg, {.threads = 1});
    const auto text = certificate_to_json(cert, sample_manifest());
    CHECK(text.back() == '\n');
    CHECK(text.find("\"schema_version\": 1") != std::string::npos);
    CHECK(text.find("\"status\": \"" + std::string(to_string(CertStatus::proved)) + "\"") != std::string::npos);

    const auto parsed = certificate_from_json(text);
    const auto &c = parsed.certificate;
    CHECK(c.status == cert.status);
    CHECK(c.boxes_processed == cert.boxes_processed);
    CHECK(c.boxes_verified == cert.boxes_verified);
    CHECK(c.boxes_split == cert.boxes_split);
    CHECK(c.boxes_discarded == cert.boxes_discarded);
    CHECK(c.max_depth_reached == cert.max_depth_reached);
    CHECK(c.worst_lower_bound == cert.worst_lower_bound);
    CHECK(c.verified_volume == cert.verified_volume);
    CHECK(c.config == cert.config);
    CHECK(parsed.manifest.command == "certify");
    CHECK(parsed.manifest.arguments == sample_manifest().arguments);
    CHECK(parsed.manifest.outcome == "proved");
    CHECK(certificate_to_json(c, parsed.manifest) == text);
}

TEST_CASE("refuted certificate carries its witness")
{
    CertConfig cfg;
    cfg.epsilon = -1.0;
    const auto cert = certify(cfg, {.threads = 1});
    const auto parsed = certificate_from_json(certificate_to_json(cert, sample_manifest())).certificate;
    CHECK(parsed.status == CertStatus::refuted);
    REQUIRE(parsed.witness);
    CHECK(*parsed.witness == *cert.witness);
    CHECK(parsed.witness_point == cert.witness_point);
}

TEST_CASE("schema version and malformed documents")
{
    CertConfig cfg;
    cfg.max_boxes = 10;
    auto text = certificate_to_json(certify(cfg, {.threads = 1}), sample_manifest());
    CHECK(text.find("\"worst_lower_bound\"") != std::string::npos);
    const auto pos = text.find("\"schema_version\": 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 19, "\"schema_version\": 2");
    CHECK_THROWS_AS((void)certificate_from_json(text), ReportError);
    CHECK_THROWS_AS((void)certificate_from_json("[]"), ReportError);
    CHECK_THROWS_AS((void)scan_report_from_json("not json"), ReportError);
}

TEST_CASE("scan report round trip")
{
    ScanConfig cfg;
    cfg.resolution = 5;
    ScanDocument doc{scan_gap(cfg, 1e-11, 1), cfg, 1e-11, sample_manifest()};
    doc.manifest.command = "scan";
    // The document stores the scan wall time in the manifest.
    doc.manifest.wall_time_seconds = doc.report.wall_time;
    const auto text = scan_report_to_json(doc);
    const auto back = scan_report_from_json(text);
    CHECK(back.report.min_gap == doc.report.min_gap);
    CHECK(back.report.argmin == doc.report.argmin);
    CHECK(back.report.samples_evaluated == doc.report.samples_evaluated);
    CHECK(back.report.violation_count == 0);
    CHECK(back.config.resolution == 5);
    CHECK(back.tolerance == 1e-11);
    CHECK(back.manifest == doc.manifest);
    CHECK(scan_report_to_json(back) == text);
}

TEST_CASE("strip_timing removes only the timing fields")
{
    auto a = sample_manifest();
    auto b = a;
    b.started_at = "2030-01-01T00:00:00Z";
    b.finished_at = "2030-01-01T00:00:09Z";
    b.wall_time_seconds = 9.0;
    CertConfig cfg;
    cfg.max_boxes = 10;
    auto cert = certify(cfg, {.threads = 1});
    const auto ta = certificate_to_json(cert, a);
    cert.wall_time = 123.0;
    const auto tb = certificate_to_json(cert, b);
    CHECK(ta != tb);
    CHECK(strip_timing(ta) == strip_timing(tb));
    CHECK(strip_timing(ta).find("started_at") == std::string::npos);
    CHECK(strip_timing(ta).find("wall_time") == std::string::npos);
    CHECK(strip_timing(ta).find("\"command\": \"certify\"") != std::string::npos);
    b.outcome = "other";
    CHECK(strip_timing(ta) != strip_timing(certificate_to_json(cert, b)));
}

TEST_CASE("csv writer")
{
    std::ostringstream os;
    CsvWriter w(os);
    const std::vector<std::string> names{"a", "b,c", "d\"e"};
    w.header(names);
    const std::vector<double> row{0.5, -1e-20, 3.0};
    w.row(row);
    CHECK(os.str() == "a,\"b,c\",\"d\"\"e\"\n0.5,-1e-20,3\n");
}

TEST_CASE("axes")
{
    CHECK(parse_axis("lambda") == Axis::lambda);
    CHECK(parse_axis("t3") == Axis::t3);
    CHECK_FALSE(parse_axis("t4"));
    CHECK(to_string(Axis::t2) == "t2");

    const auto lam = surface_axis(Axis::lambda, 5, 1e-3);
    CHECK(lam == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const auto t = surface_axis(Axis::t1, 5, 1e-3);
    CHECK(t == std::vector<double>{-0.999, -0.5, 0.0, 0.5, 0.999});
}

TEST_CASE("surface spec validation")
{
    SurfaceSpec spec;
    CHECK_NOTHROW(spec.validate());
    spec.fixed_axes[1] = Axis::lambda;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = {};
    spec.grid = 1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = {};
    spec.fixed_values[1] = 1.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = {};
    spec.fixed_values[0] = -0.1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("gap surface")
{
    SurfaceSpec spec;
    spec.grid = 5;
    const auto s = compute_gap_surface(spec);
    CHECK(s.free_axes[0] == Axis::t1);
    CHECK(s.free_axes[1] == Axis::t2);
    REQUIRE(s.gap.size() == 25);
    // (t1, t2) = (0.5, -0.5) with t3 = 0 has sigma = 0.
    CHECK(s.gap[3 * 5 + 1] == 0.0);
    CHECK(s.gap[1 * 5 + 3] == 0.0);
    CHECK(s.gap[2 * 5 + 2] == 0.0);
    CHECK(s.gap[4 * 5 + 4] > 0.0);
    for (double g : s.gap) {
        CHECK(g >= -1e-11);
    }

    std::ostringstream os;
    write_gap_surface_csv(os, s);
    const auto csv = os.str();
    CHECK(csv.rfind("t1,t2,gap\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 26);
    CHECK(csv.find("\n0.5,-0.5,0\n") != std::string::npos);

    SurfaceSpec other;
    other.fixed_axes[0] = Axis::t1;
    other.fixed_axes[1] = Axis::t2;
    other.fixed_values[0] = 0.3;
    other.fixed_values[1] = -0.2;
    other.grid = 3;
    const auto o = compute_gap_surface(other);
    CHECK(o.free_axes[0] == Axis::lambda);
    CHECK(o.free_axes[1] == Axis::t3);
    CHECK(o.gap.front() == 0.0); // lambda = 0
}
