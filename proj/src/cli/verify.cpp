#include "homsob/verify.hpp"

#include <algorithm>
#include <numbers>
#include <ostream>

#include "homsob/study_table.hpp"
#include "suite_common.hpp"

namespace homsob {

namespace suites {

double rel_l2(const Field& a, const Field& b) {
    std::vector<double> num(a.size()), den(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        num[i] = std::norm(a.values[i] - b.values[i]);
        den[i] = std::norm(b.values[i]);
    }
    const double d = pairwise_sum(den);
    return d == 0.0 ? std::sqrt(pairwise_sum(num)) : std::sqrt(pairwise_sum(num) / d);
}

double max_diff(const Field& a, const Field& b) {
    require_same_grid(a.grid, b.grid, "comparison");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

double rel_sup(const Field& a, const Field& b) { return max_diff(a, b) / b.max_abs(); }

double max_diff_within(const Field& a, const Field& b, double radius) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (norm(a.grid.point(i)) <= radius) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

double max_abs_within(const Field& a, double radius) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (norm(a.grid.point(i)) <= radius) m = std::max(m, std::abs(a.values[i]));
    return m;
}

Field random_field(const GridSpec& g, Rng& rng, int terms, int kmax) {
    if (kmax == 0) kmax = g.N / 4;
    struct Term {
        Vec3 w;
        double amp, phase;
    };
    std::vector<Term> ts;
    while (static_cast<int>(ts.size()) < terms) {
        Vec3 w{0, 0, 0};
        bool nonzero = false;
        for (int a = 0; a < g.d; ++a) {
            const int k = static_cast<int>(std::floor(rng.uniform(-kmax, kmax + 1)));
            nonzero = nonzero || k != 0;
            w[a] = 2.0 * std::numbers::pi * k / g.L;
        }
        if (!nonzero) continue;
        ts.push_back({w, rng.uniform(-1.0, 1.0), rng.uniform(-std::numbers::pi, std::numbers::pi)});
    }
    return Field::sample(g, [&](const Vec3& x) {
        double v = 0.0;
        for (const auto& t : ts) v += t.amp * std::cos(t.w[0] * x[0] + t.w[1] * x[1] + t.w[2] * x[2] + t.phase);
        return v;
    });
}

}  // namespace suites

bool SuiteReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

std::vector<std::string> SuiteReport::failing_ids() const {
    std::vector<std::string> out;
    for (const auto& a : assertions)
        if (!a.pass) out.push_back(a.id);
    return out;
}

void SuiteReport::write_csv(std::ostream& os) const {
    for (const auto& a : assertions) {
        std::string desc = a.description;
        std::replace(desc.begin(), desc.end(), ',', ';');
        std::replace(desc.begin(), desc.end(), '\n', ' ');
        os << suite << ',' << a.id << ',' << desc << ',' << format_double(a.measured) << ',' << a.relation << ','
           << format_double(a.threshold) << ',' << (a.relation == "in" ? format_double(a.upper) : "") << ','
           << (a.pass ? "pass" : "FAIL") << '\n';
    }
}

void SuiteReport::write_summary(std::ostream& os) const {
    std::size_t ok = 0, info = 0;
    for (const auto& a : assertions) {
        if (a.relation == "info") ++info;
        else if (a.pass) ++ok;
    }
    const std::size_t checked = assertions.size() - info;
    os << suite << ": " << ok << "/" << checked << " assertions passed";
    if (info > 0) os << ", " << info << " recorded";
    os << '\n';
    for (const auto& a : assertions) {
        if (a.pass && a.relation != "info") continue;
        os << "  " << (a.pass ? "note " : "FAIL ") << a.id << ": " << a.description << " (measured "
           << format_double(a.measured);
        if (a.relation == "in")
            os << ", bracket [" << format_double(a.threshold) << ", " << format_double(a.upper) << "]";
        else if (a.relation != "info" && a.relation != "thrown" && a.relation != "==")
            os << ", limit " << a.relation << ' ' << format_double(a.threshold);
        os << ")\n";
    }
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"multipliers", "littlewood-paley", "norms",
                                                   "realization", "oracles",          "embeddings"};
    return names;
}

std::vector<SuiteReport> run_verify(const std::string& suite, const RunConfig& cfg) {
    auto one = [&](const std::string& name) -> SuiteReport {
        if (name == "multipliers") return suites::multipliers_suite(cfg);
        if (name == "littlewood-paley") return suites::littlewood_paley_suite(cfg);
        if (name == "norms") return suites::norms_suite(cfg);
        if (name == "realization") return suites::realization_suite(cfg);
        if (name == "oracles") return suites::oracles_suite(cfg);
        if (name == "embeddings") return suites::embeddings_suite(cfg);
        throw DomainError("unknown suite '" + name + "'");
    };
    std::vector<SuiteReport> out;
    if (suite == "all") {
        for (const auto& name : suite_names()) out.push_back(one(name));
    } else {
        out.push_back(one(suite));
    }
    return out;
}

}  // namespace homsob
