#include "homsob/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "homsob/errors.hpp"

namespace homsob {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        throw FormatError("config key '" + key + "': '" + v + "' is not a number");
    return out;
}

long long to_integer(const std::string& key, const std::string& v) {
    long long out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        throw FormatError("config key '" + key + "': '" + v + "' is not an integer");
    return out;
}

int to_int(const std::string& key, const std::string& v) { return static_cast<int>(to_integer(key, v)); }

}  // namespace

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double("list", trim(item)));
    if (out.empty()) throw FormatError("empty list");
    return out;
}

GridSpec RunConfig::grid() const {
    GridSpec g = GridSpec::desk(std::clamp(d.value_or(1), 1, 3));
    g.d = d.value_or(1);
    if (L) g.L = *L;
    if (N) g.N = *N;
    return g;
}

GridSpec RunConfig::grid_for(int dim) const {
    if (dim == d.value_or(1)) return grid();
    return GridSpec::desk(dim);
}

DyadicPartition RunConfig::partition_for(const GridSpec& g) const {
    if ((jmin || jmax) && g.d == d.value_or(1)) {
        const DyadicPartition def = DyadicPartition::for_grid(g);
        return DyadicPartition(jmin.value_or(def.jmin()), jmax.value_or(def.jmax()));
    }
    return DyadicPartition::for_grid(g);
}

Ball RunConfig::ball_for(const GridSpec& g) const {
    if (ball && g.d == d.value_or(1)) return *ball;
    return default_ball(g);
}

void RunConfig::validate() const {
    const GridSpec g = grid();
    g.validate();
    if (!(s > 0.0)) throw DomainError("regime s must be positive");
    if (!(p > 1.0)) throw DomainError("regime p must exceed 1");
    if (jmin || jmax) (void)partition_for(g);
    if (ball) (void)ball_points(g, *ball);
    if (diff_plan.base_step < 1) throw PlanError("lipschitz base_step must be >= 1");
    if (diff_plan.magnitudes < 0) throw PlanError("lipschitz magnitudes must be >= 0");
    if (ball_plan.center_stride < 1) throw PlanError("bmo center_stride must be >= 1");
    if (!(ball_plan.rho > 1.0 && ball_plan.rho <= 2.0)) throw PlanError("bmo rho must lie in (1, 2]");
    if (ball_plan.r0 < 0.0) throw PlanError("bmo r0 must be >= 0");
    if (ball_plan.radii_count < 0) throw PlanError("bmo radii_count must be >= 0");
    if (out_dir.empty()) throw FormatError("output directory is empty");
}

void apply_setting(RunConfig& cfg, const std::string& section, const std::string& key, const std::string& value) {
    const std::string full = section.empty() ? key : section + "." + key;
    if (section == "grid") {
        if (key == "d") return void(cfg.d = to_int(full, value));
        if (key == "L") return void(cfg.L = to_double(full, value));
        if (key == "N") return void(cfg.N = to_int(full, value));
    } else if (section == "regime") {
        if (key == "s") return void(cfg.s = to_double(full, value));
        if (key == "p") return void(cfg.p = to_double(full, value));
    } else if (section == "partition") {
        if (key == "jmin") return void(cfg.jmin = to_int(full, value));
        if (key == "jmax") return void(cfg.jmax = to_int(full, value));
    } else if (section == "ball") {
        Ball b = cfg.ball.value_or(Ball{{0.0, 0.0, 0.0}, 0.0});
        if (key == "center") {
            const auto c = parse_list(value);
            if (c.size() > 3) throw FormatError("ball.center has more than 3 components");
            b.center = {0.0, 0.0, 0.0};
            std::copy(c.begin(), c.end(), b.center.begin());
            cfg.ball = b;
            return;
        }
        if (key == "radius") {
            b.radius = to_double(full, value);
            cfg.ball = b;
            return;
        }
    } else if (section == "lipschitz") {
        if (key == "base_step") return void(cfg.diff_plan.base_step = to_int(full, value));
        if (key == "magnitudes") return void(cfg.diff_plan.magnitudes = to_int(full, value));
        if (key == "observation_radius") return void(cfg.diff_plan.observation_radius = to_double(full, value));
    } else if (section == "bmo") {
        if (key == "center_stride") return void(cfg.ball_plan.center_stride = to_int(full, value));
        if (key == "r0") return void(cfg.ball_plan.r0 = to_double(full, value));
        if (key == "rho") return void(cfg.ball_plan.rho = to_double(full, value));
        if (key == "radii_count") return void(cfg.ball_plan.radii_count = to_int(full, value));
        if (key == "observation_radius") return void(cfg.ball_plan.observation_radius = to_double(full, value));
    } else if (section == "run") {
        if (key == "suite") return void(cfg.suite = value);
        if (key == "out") return void(cfg.out_dir = value);
        if (key == "seed") {
            const long long v = to_integer(full, value);
            if (v < 0) throw FormatError("run.seed must be non-negative");
            return void(cfg.seed = static_cast<std::uint64_t>(v));
        }
    }
    throw FormatError("unknown config key '" + full + "'");
}

RunConfig parse_config(std::istream& is) {
    RunConfig cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw FormatError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw FormatError("line " + std::to_string(lineno) + ": expected key = value");
        apply_setting(cfg, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw FormatError("cannot open config file " + path);
    return parse_config(is);
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

}  // namespace homsob
