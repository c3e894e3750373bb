#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homsob/config.hpp"
#include "homsob/oracles.hpp"
#include "homsob/realization.hpp"

namespace homsob {

/// Trend polynomial as CSV: one row per term, columns a1..ad, coeff (center 0).
void write_trend_csv(std::ostream& os, const Polynomial& P);
Polynomial read_trend_csv(std::istream& is, int d);

void write_diagnostics_csv(std::ostream& os, const RealizationResult& r);
void write_constraints_csv(std::ostream& os, const ConstraintReport& rep);

/// Files written by the realize experiment, all inside the output directory.
struct RealizeOutputs {
    std::string field;        // sampled representative (FLD1)
    std::string periodic;     // periodic part (FLD1)
    std::string trend;        // trend polynomial CSV
    std::string diagnostics;  // per-j CSV
    std::string constraints;  // constraint report CSV
};

RealizeOutputs run_realize_experiment(const Field& u, const RegimeParams& rp, const RunConfig& cfg);

/// check: loads the sampled field, removes the optional trend and verifies the constraints.
ConstraintReport check_representative(const Field& sampled, const Polynomial& trend, const RegimeParams& rp,
                                       const Ball& ball);

}  // namespace homsob
