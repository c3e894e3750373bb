#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homsob/config.hpp"

namespace homsob {

/// One checked statement of a verification suite.
struct Assertion {
    std::string id;
    std::string description;
    double measured = 0.0;
    double threshold = 0.0;
    /// "<=", ">=", "in" (bracket [threshold, upper]), "thrown", or "info" (recorded only).
    std::string relation;
    double upper = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Assertion> assertions;

    bool passed() const;
    std::vector<std::string> failing_ids() const;
    void write_csv(std::ostream& os) const;
    void write_summary(std::ostream& os) const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite in a fixed order). Throws DomainError for an unknown name.
std::vector<SuiteReport> run_verify(const std::string& suite, const RunConfig& cfg);

}  // namespace homsob
