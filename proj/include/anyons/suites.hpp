// Verification suites run by the command-line driver.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "anyons/report.hpp"

namespace anyons {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
    std::vector<double> spins{0.0, 0.25, 1.0 / 3.0, 0.5, 0.137};
    std::vector<double> masses{1.3};
    std::vector<int> multiplicities{2};
    std::vector<std::uint64_t> seeds{7};
    double tol_engine = 1e-9;    // continuation self-consistency
    double tol_boundary = 1e-8;  // boundary formulas and Morera residuals
    double tol_pipeline = 1e-8;
    int grid = 5;                // k x k momentum grid
    int samples = 1000;          // random samples for the group and cocycle laws
    bool timing = false;         // runtime_ms stays 0 unless set
    std::string out;

    /// Throws ConfigError on an invalid field.
    void validate() const;
    ordered_json echo() const;
};

/// group, wigner, continuation, cones, pauli-lubanski, spinstat
const std::vector<std::string>& suite_names();

/// `name` is one of suite_names() or "all". Failures become failing records;
/// only an unknown name or an invalid config throws (ConfigError).
Report run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace anyons
