#ifndef ATANHCERT_PROPERTIES_HPP
#define ATANHCERT_PROPERTIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atanhcert
{

// Seeded, numeric checks of every claim made along the proof. Each property
// draws its own counter-based stream, so results do not depend on which
// other properties run or on the thread count.

enum class PropertySuite { identities, proof_heart, conditionistrivial };

[[nodiscard]] std::string_view to_string(PropertySuite s);

struct PropertyInfo {
    std::string_view name;
    PropertySuite suite;
    std::string_view summary;
};

[[nodiscard]] const std::vector<PropertyInfo> &property_catalog();

struct PropertyOptions {
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 7;
    unsigned threads = 0;
};

struct PropertyResult {
    std::string name;
    bool passed = false;
    double max_residual = 0.0;      // property specific; 0 for pure sign checks
    double tolerance = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t failures = 0;
    std::uint64_t inconclusive = 0; // below a documented floor, counted as pass
    std::string note;
};

// nullopt for an unknown name.
[[nodiscard]] std::optional<PropertyResult> run_property(std::string_view name, const PropertyOptions &opts);
[[nodiscard]] std::vector<PropertyResult> run_suite(PropertySuite suite, const PropertyOptions &opts);
[[nodiscard]] std::vector<PropertyResult> run_all_properties(const PropertyOptions &opts);

} // namespace atanhcert

#endif
