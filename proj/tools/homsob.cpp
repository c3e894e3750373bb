#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "homsob/embedding.hpp"
#include "homsob/errors.hpp"
#include "homsob/experiments.hpp"
#include "homsob/field_io.hpp"
#include "homsob/oracles.hpp"
#include "homsob/verify.hpp"

namespace {

using namespace homsob;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Raised for configuration and input problems (exit 2); module errors exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> d;
    std::optional<double> L;
    std::optional<int> N;
    std::optional<double> s;
    std::optional<double> p;
};

RunConfig build_config(const Common& c) {
    RunConfig cfg;
    try {
        if (!c.config.empty()) cfg = load_config(c.config);
        if (!c.out.empty()) cfg.out_dir = c.out;
        if (c.seed) cfg.seed = *c.seed;
        if (c.d) cfg.d = *c.d;
        if (c.L) cfg.L = *c.L;
        if (c.N) cfg.N = *c.N;
        if (c.s) cfg.s = *c.s;
        if (c.p) cfg.p = *c.p;
        cfg.validate();
    } catch (const Error& e) {
        throw UsageError(std::string("invalid configuration: ") + e.what());
    }
    return cfg;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("cannot write " + path.string());
    return os;
}

Field load_input(const std::string& path) {
    if (path.empty()) throw UsageError("missing --in field file");
    if (!std::filesystem::exists(path)) throw UsageError("input field file not found: " + path);
    try {
        return load_field(path);
    } catch (const Error& e) {
        throw UsageError(std::string("cannot read ") + path + ": " + e.what());
    }
}

int run_verify_command(const Common& common, const std::string& suite_flag) {
    const RunConfig cfg = build_config(common);
    const std::string suite = suite_flag.empty() ? cfg.suite : suite_flag;
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string list = "all";
        for (const auto& n : names) list += ", " + n;
        throw UsageError("unknown suite '" + suite + "' (expected one of: " + list + ")");
    }
    const auto reports = run_verify(suite, cfg);
    const std::filesystem::path dir(cfg.out_dir);
    auto csv = open_out(dir / ("verify_" + suite + ".csv"));
    csv << "suite,id,description,measured,relation,threshold,upper,status\n";
    for (const auto& r : reports) r.write_csv(csv);
    auto summary = open_out(dir / ("verify_" + suite + ".txt"));
    std::vector<std::string> failing;
    for (const auto& r : reports) {
        r.write_summary(summary);
        r.write_summary(std::cout);
        for (const auto& id : r.failing_ids()) failing.push_back(r.suite + ":" + id);
    }
    if (failing.empty()) {
        std::cout << "verify " << suite << ": PASS\n";
        return kPass;
    }
    std::cout << "verify " << suite << ": FAIL (" << failing.size() << " failing)\n";
    for (const auto& id : failing) std::cout << "  " << id << '\n';
    return kFail;
}

int write_table(const StudyTable& t, const RunConfig& cfg, const std::string& name) {
    const auto path = std::filesystem::path(cfg.out_dir) / name;
    auto os = open_out(path);
    t.write_csv(os);
    for (const auto& r : t.rows)
        if (r.params.back() == "slope")
            std::cout << "slope " << format_double(r.measured) << " (reference " << format_double(r.reference) << ")\n";
    std::cout << "wrote " << path.string() << '\n';
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homogeneous Sobolev spaces on a periodic desk grid: verification and experiments"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool regime) {
        sub->add_option("--config", common.config, "INI-style configuration file");
        sub->add_option("--out", common.out, "output directory");
        sub->add_option("--seed", common.seed, "seed for randomized property tests");
        if (regime) {
            sub->add_option("--s", common.s, "smoothness s");
            sub->add_option("--p", common.p, "integrability p");
        }
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--d", common.d, "dimension (1..3)");
        sub->add_option("--L", common.L, "period length");
        sub->add_option("--N", common.N, "samples per axis (power of two)");
    };

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, false);
    verify->add_option("--suite", suite, "multipliers, littlewood-paley, norms, realization, oracles, embeddings or all");

    auto* experiment = app.add_subcommand("experiment", "run a study and write its CSV or field artifacts");
    experiment->require_subcommand(1);

    double nu = 1.0, tol = 1e-10;
    std::string mags = "1,2,4";
    auto* ga = experiment->add_subcommand("ga-norm", "||g_a||_{p'} across magnitudes |a|");
    add_common(ga, true);
    ga->add_option("--d", common.d, "dimension");
    ga->add_option("--nu", nu, "exponent nu")->required();
    ga->add_option("--a", mags, "comma-separated magnitudes");
    ga->add_option("--tol", tol, "relative quadrature tolerance");

    int k = 0;
    std::string n_list = "1,2,4,8";
    auto* pa = experiment->add_subcommand("poly-annihilation", "||Delta^{s/2}(x^k psi(x/n))||^2 across n");
    add_common(pa, true);
    add_grid(pa);
    pa->add_option("--k", k, "polynomial degree along the first axis");
    pa->add_option("--n", n_list, "comma-separated window dilations");

    auto* emb = experiment->add_subcommand("embeddings", "embedding ratio study on the frozen corpus");
    add_common(emb, true);
    add_grid(emb);

    std::string in_path;
    auto* rz = experiment->add_subcommand("realize", "canonical representative of an input field");
    add_common(rz, true);
    rz->add_option("--in", in_path, "input field (FLD1)");

    std::string kind = "gaussian", alpha_text = "0", out_file;
    double sigma = 1.0, epsilon = 0.5, gamma = 0.5, dilation = 1.0;
    int order = 0;
    bool project = false;
    auto* mk = app.add_subcommand("make-field", "sample a test function into a field file");
    add_common(mk, false);
    add_grid(mk);
    mk->add_option("--kind", kind, "gaussian, hermite, windowed-poly, windowed-log or windowed-power");
    mk->add_option("--sigma", sigma, "Gaussian width");
    mk->add_option("--order", order, "Hermite order");
    mk->add_option("--alpha", alpha_text, "multi-index of the windowed polynomial, e.g. 2 or 1,1");
    mk->add_option("--epsilon", epsilon, "log regularization");
    mk->add_option("--gamma", gamma, "power exponent");
    mk->add_option("--dilation", dilation, "evaluate f(dilation x)");
    mk->add_flag("--project", project, "apply the S_inf projection");
    mk->add_option("--file", out_file, "output field path (default <out>/field.fld)");

    std::string trend_path;
    auto* ck = app.add_subcommand("check", "verify the canonical constraints of a field");
    add_common(ck, true);
    ck->add_option("--in", in_path, "field (FLD1)");
    ck->add_option("--trend", trend_path, "trend polynomial CSV removed before the check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (verify->parsed()) return run_verify_command(common, suite);

        if (ga->parsed()) {
            const RunConfig cfg = build_config(common);
            const std::vector<double> a = parse_list(mags);
            return write_table(ga_norm_study(nu, cfg.p, common.d.value_or(1), a, tol), cfg, "ga_norm.csv");
        }
        if (pa->parsed()) {
            const RunConfig cfg = build_config(common);
            MultiIndex alpha;
            alpha.a[0] = k;
            return write_table(polynomial_annihilation_study(alpha, cfg.s, WindowProfile{}, parse_list(n_list), cfg.grid()), cfg,
                               "poly_annihilation.csv");
        }
        if (emb->parsed()) {
            const RunConfig cfg = build_config(common);
            const GridSpec g = cfg.grid();
            const EmbeddingReport rep = embedding_ratio_study(classify_regime(cfg.s, cfg.p, g.d), s_infty_corpus(g),
                                                              {"HG5-s1", "HG6-s1", "HG6-s0.75", "HG8-s1", "HG5-s0.75"});
            const auto path = std::filesystem::path(cfg.out_dir) / "embeddings.csv";
            auto os = open_out(path);
            rep.write_csv(os);
            for (const auto& n : rep.notices) std::cout << "notice: " << n << '\n';
            std::cout << rep.left_norm << ": max ratio " << format_double(rep.max_ratio) << ", max spread "
                      << format_double(rep.max_spread) << "\nwrote " << path.string() << '\n';
            return kPass;
        }
        if (rz->parsed()) {
            const Field u = load_input(in_path);
            common.d = u.grid.d;
            common.L = u.grid.L;
            common.N = u.grid.N;
            const RunConfig cfg = build_config(common);
            const RegimeParams rp = classify_regime(cfg.s, cfg.p, u.grid.d);
            const RealizeOutputs out = run_realize_experiment(u, rp, cfg);
            std::cout << to_string(rp.regime) << " (m = " << rp.m << ")\nwrote " << out.field << ", " << out.periodic << ", "
                      << out.trend << ", " << out.diagnostics << ", " << out.constraints << '\n';
            return kPass;
        }
        if (mk->parsed()) {
            const RunConfig cfg = build_config(common);
            const GridSpec g = cfg.grid();
            TestFunctionSpec spec;
            if (kind == "gaussian") {
                spec = TestFunctionSpec::gaussian(sigma);
            } else if (kind == "hermite") {
                spec = TestFunctionSpec::hermite_gaussian(order, sigma);
            } else if (kind == "windowed-poly") {
                const auto a = parse_list(alpha_text);
                MultiIndex alpha;
                for (std::size_t i = 0; i < a.size() && i < 3; ++i) alpha.a[i] = static_cast<int>(a[i]);
                spec = TestFunctionSpec::windowed_polynomial(alpha);
            } else if (kind == "windowed-log") {
                spec = TestFunctionSpec::windowed_log_abs(epsilon);
            } else if (kind == "windowed-power") {
                spec = TestFunctionSpec::windowed_power_abs(gamma);
            } else {
                throw UsageError("unknown field kind '" + kind + "'");
            }
            spec.dilation = dilation;
            Field f = make_test_function(spec, g);
            if (project) f = s_infty_project(f);
            const std::filesystem::path path = out_file.empty() ? std::filesystem::path(cfg.out_dir) / "field.fld" : std::filesystem::path(out_file);
            std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
            save_field(path.string(), f);
            std::cout << "wrote " << path.string() << '\n';
            return kPass;
        }
        if (ck->parsed()) {
            const Field f = load_input(in_path);
            common.d = f.grid.d;
            common.L = f.grid.L;
            common.N = f.grid.N;
            const RunConfig cfg = build_config(common);
            Polynomial trend(f.grid.d);
            if (!trend_path.empty()) {
                std::ifstream is(trend_path);
                if (!is) throw UsageError("trend file not found: " + trend_path);
                try {
                    trend = read_trend_csv(is, f.grid.d);
                } catch (const Error& e) {
                    throw UsageError(std::string("cannot read ") + trend_path + ": " + e.what());
                }
            }
            const RegimeParams rp = classify_regime(cfg.s, cfg.p, f.grid.d);
            const ConstraintReport rep = check_representative(f, trend, rp, cfg.ball_for(f.grid));
            write_constraints_csv(std::cout, rep);
            std::cout << (rep.pass ? "PASS" : "FAIL") << " max residual " << format_double(rep.max_residual) << " tolerance "
                      << format_double(rep.tolerance) << '\n';
            return rep.pass ? kPass : kFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
