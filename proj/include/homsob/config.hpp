#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homsob/direct_norms.hpp"
#include "homsob/littlewood_paley.hpp"
#include "homsob/quadrature.hpp"

namespace homsob {

/// Settings shared by verify and experiment runs. Values come from an INI-style file
/// ([section] headers, key = value, '#' or ';' comments) and command-line overrides.
struct RunConfig {
    std::optional<int> d;
    std::optional<double> L;
    std::optional<int> N;
    double s = 1.0;
    double p = 2.0;
    std::optional<int> jmin;
    std::optional<int> jmax;
    std::optional<Ball> ball;
    DiffSamplingPlan diff_plan;
    BallSamplingPlan ball_plan;
    std::string suite = "all";
    std::string out_dir = ".";
    std::uint64_t seed = 1;

    /// Primary grid: the desk grid of dimension d (default 1) with L and N overrides.
    GridSpec grid() const;
    /// Grid used for work in dimension dim: the primary grid when dim matches, else the desk grid.
    GridSpec grid_for(int dim) const;
    DyadicPartition partition_for(const GridSpec& g) const;
    Ball ball_for(const GridSpec& g) const;

    /// Throws StructuralError / DomainError / PlanError naming the violated invariant.
    void validate() const;
};

/// Sets one key; throws FormatError on an unknown section or key or an unparsable value.
void apply_setting(RunConfig& cfg, const std::string& section, const std::string& key, const std::string& value);

RunConfig parse_config(std::istream& is);
RunConfig load_config(const std::string& path);

/// Comma-separated list of reals ("1,2,4").
std::vector<double> parse_list(const std::string& text);

/// Deterministic uniform generator: identical streams on every platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    double uniform(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace homsob
