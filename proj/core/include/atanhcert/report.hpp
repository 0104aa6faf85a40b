#ifndef ATANHCERT_REPORT_HPP
#define ATANHCERT_REPORT_HPP

#include <atanhcert/certifier.hpp>
#include <atanhcert/oracle.hpp>

#include <chrono>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace atanhcert
{

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

class ReportError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Attached to every emitted document. started_at, finished_at and
// wall_time_seconds are the only fields that vary between identical runs.
struct RunManifest {
    std::string command;                // subcommand name
    std::vector<std::string> arguments; // argv after the program name
    std::string tool_version{kToolVersion};
    std::string started_at;  // RFC 3339, UTC
    std::string finished_at; // RFC 3339, UTC
    double wall_time_seconds = 0.0;
    std::string outcome;

    friend bool operator==(const RunManifest &, const RunManifest &) = default;
};

[[nodiscard]] std::string rfc3339_utc(std::chrono::system_clock::time_point tp);

// Documents are pretty-printed JSON with a trailing newline. Parsers throw
// ReportError on malformed input or a schema_version other than 1.

[[nodiscard]] std::string certificate_to_json(const Certificate &cert, const RunManifest &manifest);

struct ParsedCertificate {
    Certificate certificate;
    RunManifest manifest;
};
[[nodiscard]] ParsedCertificate certificate_from_json(std::string_view text);

struct ScanDocument {
    ScanReport report;
    ScanConfig config;
    double tolerance = 0.0;
    RunManifest manifest;
};
[[nodiscard]] std::string scan_report_to_json(const ScanDocument &doc);
[[nodiscard]] ScanDocument scan_report_from_json(std::string_view text);

[[nodiscard]] std::string config_to_json(const CertConfig &cfg);
[[nodiscard]] CertConfig config_from_json(std::string_view text);

// Re-serializes a document with the manifest timing fields removed.
[[nodiscard]] std::string strip_timing(std::string_view text);

// Shortest decimal that parses back to the same double.
[[nodiscard]] std::string format_shortest(double x);

// RFC 4180 output with LF line endings.
class CsvWriter
{
public:
    explicit CsvWriter(std::ostream &os) : os_(os) {}

    void header(std::span<const std::string> names);
    void row(std::span<const double> values);

private:
    std::ostream &os_;
};

enum class Axis { lambda, t1, t2, t3 };

[[nodiscard]] std::string_view to_string(Axis a);
[[nodiscard]] std::optional<Axis> parse_axis(std::string_view s);

struct SurfaceSpec {
    Axis fixed_axes[2] = {Axis::lambda, Axis::t3};
    double fixed_values[2] = {0.5, 0.0};
    int grid = 101;
    double delta = 1e-3;

    // Throws std::invalid_argument: repeated axis, grid < 2, pinned value
    // outside the domain.
    void validate() const;
};

// Free-axis coordinates: lambda runs over i / (n - 1); t axes over
// -1 + 2 j / (n - 1), with the two end points pulled in to -+(1 - delta).
[[nodiscard]] std::vector<double> surface_axis(Axis a, int n, double delta);

struct GapSurface {
    Axis free_axes[2] = {Axis::t1, Axis::t2};
    std::vector<double> first;  // values along free_axes[0]
    std::vector<double> second; // values along free_axes[1]
    std::vector<double> gap;    // row-major: first index outer
};

[[nodiscard]] GapSurface compute_gap_surface(const SurfaceSpec &spec);
void write_gap_surface_csv(std::ostream &os, const GapSurface &surface);

} // namespace atanhcert

#endif
