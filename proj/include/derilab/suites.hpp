#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace derilab {

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> failing_cases;
    bool passed() const { return failures == 0 && checks > 0; }
};

// Seeded property suites shared by the command line driver and the tests.
SuiteResult run_identities_suite(std::uint64_t seed);
SuiteResult run_traces_suite(std::uint64_t seed);
SuiteResult run_spiders_suite(std::uint64_t seed, int g);
SuiteResult run_slides_suite(std::uint64_t seed, int g);
SuiteResult run_mirror_suite(std::uint64_t seed, int g);

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int g);

}  // namespace derilab
