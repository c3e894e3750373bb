#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "homsob/config.hpp"
#include "homsob/multiplier.hpp"
#include "homsob/oracles.hpp"
#include "homsob/quadrature.hpp"
#include "homsob/verify.hpp"

using namespace homsob;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

void report(int n, const Outcome& o, int& failures) {
    std::printf("criterion %2d: %s  %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    if (!o.pass) ++failures;
}

bool matches(const std::string& id, const std::vector<std::string>& selectors) {
    for (const std::string& s : selectors) {
        if (!s.empty() && s.back() == '*') {
            if (id.rfind(s.substr(0, s.size() - 1), 0) == 0) return true;
        } else if (id == s) {
            return true;
        }
    }
    return false;
}

// Every non-informational assertion selected by id must pass.
Outcome from_assertions(const std::vector<SuiteReport>& reports, const std::vector<std::string>& selectors) {
    Outcome o;
    int count = 0;
    std::string failing;
    for (const SuiteReport& r : reports)
        for (const Assertion& a : r.assertions) {
            if (a.relation == "info" || !matches(a.id, selectors)) continue;
            ++count;
            if (!a.pass) {
                o.pass = false;
                std::ostringstream ss;
                ss << ' ' << a.id << '=' << a.measured;
                failing += ss.str();
            }
        }
    if (count == 0) {
        o.pass = false;
        o.detail = "no assertions matched";
        return o;
    }
    o.detail = std::to_string(count) + " assertions" + (failing.empty() ? "" : "; failing:" + failing);
    return o;
}

double info_value(const std::vector<SuiteReport>& reports, const std::string& id) {
    for (const SuiteReport& r : reports)
        for (const Assertion& a : r.assertions)
            if (a.id == id) return a.measured;
    return std::nan("");
}

double rel_l2(const Field& a, const Field& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a.values[i] - b.values[i]);
        den += std::norm(b.values[i]);
    }
    return std::sqrt(num / den);
}

Outcome inverse_identity() {
    Outcome o;
    double worst = 0.0, slowest = 0.0;
    for (int d : {1, 2, 3}) {
        const GridSpec g = GridSpec::desk(d);
        for (double s : {0.3, 0.5, 0.9 * d}) {
            const auto t0 = Clock::now();
            for (const Field& phi : s_infty_corpus(g)) worst = std::max(worst, rel_l2(riesz_potential(frac_laplacian(phi, s), s), phi));
            slowest = std::max(slowest, seconds_since(t0));
        }
    }
    o.pass = worst <= 1e-10 && slowest < 5.0;
    std::ostringstream ss;
    ss << "max rel L2 " << worst << " (<= 1e-10); slowest case " << slowest << " s (< 5 s)";
    o.detail = ss.str();
    return o;
}

Outcome ga_scaling() {
    struct Case {
        int d;
        double p, nu;
    };
    Outcome o;
    double worst = 0.0;
    const auto t0 = Clock::now();
    for (const Case c : {Case{1, 2.0, 1.0}, Case{1, 1.5, 1.4}, Case{2, 2.0, 1.7}}) {
        const StudyTable t = ga_norm_study(c.nu, c.p, c.d, {1.0, 2.0, 4.0});
        worst = std::max(worst, std::abs(t.rows.back().measured - (c.nu - c.d / c.p)));
    }
    const double elapsed = seconds_since(t0);
    o.pass = worst <= 1e-3 && elapsed < 30.0;
    std::ostringstream ss;
    ss << "max |slope - (nu - d/p)| " << worst << " (<= 1e-3); " << elapsed << " s (< 30 s)";
    o.detail = ss.str();
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + HOMSOB_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome reproducible_full_run() {
    Outcome o;
    const fs::path root = fs::temp_directory_path() / ("homsob_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    double slowest = 0.0;
    int codes[2] = {-1, -1};
    for (int i = 0; i < 2; ++i) {
        const auto t0 = Clock::now();
        codes[i] = run_cli("verify --suite all --seed 7 --out \"" + (root / std::to_string(i)).string() + "\"");
        slowest = std::max(slowest, seconds_since(t0));
    }
    const std::string a = slurp(root / "0" / "verify_all.csv");
    const std::string b = slurp(root / "1" / "verify_all.csv");
    const bool same = !a.empty() && a == b && slurp(root / "0" / "verify_all.txt") == slurp(root / "1" / "verify_all.txt");
    fs::remove_all(root);
    o.pass = codes[0] == 0 && codes[1] == 0 && same && slowest < 600.0;
    std::ostringstream ss;
    ss << "exit codes " << codes[0] << "," << codes[1] << "; reports " << (same ? "byte-identical" : "DIFFER")
       << "; slowest run " << slowest << " s (< 600 s)";
    o.detail = ss.str();
    return o;
}

}  // namespace

int main() {
    RunConfig cfg;
    cfg.seed = 7;
    const std::vector<SuiteReport> reports = run_verify("all", cfg);

    int failures = 0;
    Outcome c1 = inverse_identity();
    const Outcome c1s = from_assertions(reports, {"MUL-08-d*"});
    c1.pass = c1.pass && c1s.pass;
    c1.detail += "; suite: " + c1s.detail;
    report(1, c1, failures);
    report(2, from_assertions(reports, {"MUL-07"}), failures);
    report(3, from_assertions(reports, {"NRM-02-d1", "NRM-02-d2", "NRM-03", "NRM-03-wrap"}), failures);
    report(4, from_assertions(reports, {"LP-02", "LP-02-grid", "LP-04", "LP-05"}), failures);
    Outcome c5 = from_assertions(reports, {"MUL-12-*", "MUL-11"});
    std::ostringstream sign;
    sign << "; opposite-sign reading sum R_j^2 = I deviates by " << info_value(reports, "MUL-11-sign") << " (recorded)";
    c5.detail += sign.str();
    report(5, c5, failures);
    Outcome c6 = ga_scaling();
    c6.pass = c6.pass && from_assertions(reports, {"ORA-07-*"}).pass;
    report(6, c6, failures);
    report(7, from_assertions(reports, {"ORA-09-*", "ORA-10"}), failures);
    report(8, from_assertions(reports, {"REA-04-*", "REA-05-*", "REA-06-*", "REA-07-*"}), failures);
    report(9, from_assertions(reports, {"REA-10-*"}), failures);
    report(10, from_assertions(reports, {"ORA-03"}), failures);
    report(11, from_assertions(reports, {"EMB-*"}), failures);
    report(12, reproducible_full_run(), failures);

    std::printf("acceptance: %d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
