#pragma once

#include "plie/catalog.hpp"

namespace plie {
namespace suites {

struct Options {
    Budget budget;
    bool parallel = true;
    // exhaustive sample regimes: (2, <=3) and (3, <=2) by default
    std::vector<std::pair<u64, u32>> sample_regimes = {{2, 3}, {3, 2}};
};

struct Failure {
    std::string instance;
    std::string law;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    u32 instances = 0;
    u32 checks = 0;
    std::vector<Failure> failures;
    double seconds = 0;
    bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const Options& opt);
std::vector<SuiteResult> run_all(const Options& opt);

/// The shared exhaustive sample: every (algebra, p-operation) pair of the
/// configured regimes, in deterministic order. Memoized per regime.
struct SampleItem {
    std::string tag;  // "p=2 dim=3 #k op=j"
    RestrictedAlgebra R;
    bool soluble;
};
const std::vector<SampleItem>& restricted_sample(const Options& opt);

/// Catalog algebras the projector/formation suites also run on.
std::vector<std::pair<std::string, RestrictedAlgebra>> catalog_sample();

}  // namespace suites
}  // namespace plie
