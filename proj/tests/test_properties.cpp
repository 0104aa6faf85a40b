#include <atanhcert/properties.hpp>

#include <doctest.h>

#include <set>
#include <string>

using namespace atanhcert;

TEST_CASE("catalog lists every property once")
{
    const auto &cat = property_catalog();
    std::set<std::string_view> names;
    for (const auto &p : cat) {
        CHECK(names.insert(p.name).second);
        CHECK_FALSE(p.summary.empty());
    }
    for (auto n : {"prop2", "product_facts", "log_forms", "sign_flip", "endpoint_equality", "h_endpoints",
                   "h_prime_fd", "lambda_star_root", "h_shape", "lemma5_conclusion", "h_prime_gap_at_zero",
                   "quad_root_cases", "s_negative", "t3_star_root", "s_prime_roots", "s_prime_fd", "taylor_bound",
                   "implication_chain", "both_negative_chain"}) {
        CHECK_MESSAGE(names.count(n) == 1, n);
    }
    CHECK(to_string(PropertySuite::proof_heart) == "proof_heart");
}

TEST_CASE("unknown property")
{
    CHECK_FALSE(run_property("no_such_property", {}));
}

TEST_CASE("every property passes at a reduced sample count")
{
    const PropertyOptions opts{.samples = 5000, .seed = 3, .threads = 1};
    for (const auto &r : run_all_properties(opts)) {
        INFO(r.name << " residual " << r.max_residual << " failures " << r.failures << " " << r.note);
        CHECK(r.passed);
        CHECK(r.failures == 0);
        CHECK(r.samples > 0);
        CHECK(r.max_residual <= r.tolerance);
    }
}

TEST_CASE("results do not depend on which properties run or on threads")
{
    const PropertyOptions one{.samples = 4000, .seed = 17, .threads = 1};
    const PropertyOptions many{.samples = 4000, .seed = 17, .threads = 4};
    const auto alone = run_property("log_forms", one);
    REQUIRE(alone);
    const auto suite = run_suite(PropertySuite::identities, many);
    bool found = false;
    for (const auto &r : suite) {
        if (r.name == "log_forms") {
            found = true;
            CHECK(r.max_residual == alone->max_residual);
            CHECK(r.samples == alone->samples);
        }
    }
    CHECK(found);
}

TEST_CASE("suites partition the catalog")
{
    const PropertyOptions opts{.samples = 1000, .seed = 1, .threads = 1};
    std::size_t total = 0;
    for (auto s : {PropertySuite::identities, PropertySuite::proof_heart, PropertySuite::conditionistrivial}) {
        total += run_suite(s, opts).size();
    }
    CHECK(total == property_catalog().size());
}
