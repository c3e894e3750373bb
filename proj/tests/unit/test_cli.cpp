#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "homsob/config.hpp"
#include "homsob/errors.hpp"
#include "homsob/field_io.hpp"

using namespace homsob;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string output;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("homsob_cli_") + info->name() + "_" + std::to_string(::getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    RunResult run(const std::string& args) const {
        const fs::path log = dir_ / "stdout.txt";
        const std::string cmd = std::string("\"") + HOMSOB_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.output = slurp(log);
        return r;
    }

    fs::path write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    static std::string slurp(const fs::path& p) {
        std::ifstream is(p, std::ios::binary);
        std::ostringstream ss;
        ss << is.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

}  // namespace

TEST(Config, ParsesSectionsCommentsAndLists) {
    std::istringstream is(
        "# comment\n[grid]\nd = 2\nN = 64\nL = 20\n; other comment\n[regime]\ns = 1.5\np = 3\n"
        "[bmo]\nrho = 1.5\n[run]\nseed = 7\nsuite = norms\n");
    const RunConfig cfg = parse_config(is);
    EXPECT_EQ(cfg.grid(), (GridSpec{2, 20.0, 64}));
    EXPECT_DOUBLE_EQ(cfg.s, 1.5);
    EXPECT_DOUBLE_EQ(cfg.p, 3.0);
    EXPECT_DOUBLE_EQ(cfg.ball_plan.rho, 1.5);
    EXPECT_EQ(cfg.seed, 7u);
    EXPECT_EQ(cfg.suite, "norms");
    EXPECT_EQ(cfg.grid_for(1), GridSpec::desk(1));
    EXPECT_EQ(parse_list("1,2.5,4"), (std::vector<double>{1.0, 2.5, 4.0}));
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
    RunConfig cfg;
    EXPECT_THROW(apply_setting(cfg, "grid", "M", "3"), FormatError);
    EXPECT_THROW(apply_setting(cfg, "nosuch", "d", "3"), FormatError);
    EXPECT_THROW(apply_setting(cfg, "grid", "N", "abc"), FormatError);
    std::istringstream bad("[grid\nd = 1\n");
    EXPECT_THROW(parse_config(bad), FormatError);
    EXPECT_THROW(parse_list("1,,x"), FormatError);
}

TEST(Config, ValidateNamesInvariant) {
    RunConfig cfg;
    cfg.N = 100;
    try {
        cfg.validate();
        FAIL() << "N = 100 accepted";
    } catch (const StructuralError& e) {
        EXPECT_NE(std::string(e.what()).find("power of two"), std::string::npos);
    }
    RunConfig p;
    p.p = 1.0;
    EXPECT_THROW(p.validate(), DomainError);
}

TEST(Rng, SameSeedSameStream) {
    Rng a(7), b(7), c(8);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform(-1.0, 1.0);
        EXPECT_EQ(x, b.uniform(-1.0, 1.0));
        EXPECT_GE(x, -1.0);
        EXPECT_LT(x, 1.0);
        differs = differs || x != c.uniform(-1.0, 1.0);
    }
    EXPECT_TRUE(differs);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("verify --suite bogus").code, 2);
    EXPECT_EQ(run("experiment realize --s 2").code, 2);
    EXPECT_EQ(run("check --in \"" + (dir_ / "missing.fld").string() + "\" --s 1 --p 2").code, 2);
    EXPECT_EQ(run("make-field --kind nosuch --out \"" + dir_.string() + "\"").code, 2);
    EXPECT_EQ(run("experiment ga-norm --p 2").code, 2);
}

TEST_F(CliTest, InvalidGridConfigNamesInvariant) {
    const fs::path ini = write("n100.ini", "[grid]\nN = 100\n");
    const RunResult r = run("verify --suite oracles --config \"" + ini.string() + "\" --out \"" + dir_.string() + "\"");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.output.find("power of two"), std::string::npos) << r.output;
}

TEST_F(CliTest, UnknownConfigKeyIsFormatError) {
    const fs::path ini = write("bad.ini", "[grid]\nbogus = 3\n");
    const RunResult r = run("verify --suite oracles --config \"" + ini.string() + "\"");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.output.find("grid.bogus"), std::string::npos) << r.output;
}

TEST_F(CliTest, VerifyIsDeterministicForAFixedSeed) {
    const fs::path a = dir_ / "a", b = dir_ / "b";
    ASSERT_EQ(run("verify --suite oracles --seed 7 --out \"" + a.string() + "\"").code, 0);
    ASSERT_EQ(run("verify --suite oracles --seed 7 --out \"" + b.string() + "\"").code, 0);
    const std::string ca = slurp(a / "verify_oracles.csv");
    EXPECT_FALSE(ca.empty());
    EXPECT_EQ(ca.rfind("suite,id,description,measured,relation,threshold,upper,status", 0), 0u);
    EXPECT_EQ(ca, slurp(b / "verify_oracles.csv"));
    EXPECT_EQ(slurp(a / "verify_oracles.txt"), slurp(b / "verify_oracles.txt"));
}

TEST_F(CliTest, RealizeThenCheckPipeline) {
    const std::string d = dir_.string();
    ASSERT_EQ(run("make-field --kind hermite --order 1 --sigma 1.5 --out \"" + d + "\"").code, 0);
    const fs::path field = dir_ / "field.fld";
    const fs::path out = dir_ / "r";
    ASSERT_EQ(run("experiment realize --in \"" + field.string() + "\" --s 2 --p 2 --out \"" + out.string() + "\"").code, 0);
    for (const char* name : {"out.fld", "out_periodic.fld", "out_trend.csv", "out_diagnostics.csv", "out_constraints.csv"})
        EXPECT_TRUE(fs::exists(out / name)) << name;
    const RunResult ok = run("check --in \"" + (out / "out.fld").string() + "\" --trend \"" + (out / "out_trend.csv").string() +
                             "\" --s 2 --p 2");
    EXPECT_EQ(ok.code, 0) << ok.output;
    // The raw input has f'(0) = 2/3 and fails the order-1 constraint.
    const RunResult bad = run("check --in \"" + field.string() + "\" --s 2 --p 2");
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.output.find("FAIL"), std::string::npos);
    const fs::path junk = write("junk.csv", "not,a,trend\n");
    EXPECT_EQ(run("check --in \"" + field.string() + "\" --trend \"" + junk.string() + "\" --s 2 --p 2").code, 2);
}

TEST_F(CliTest, ExperimentsWriteCsv) {
    const std::string d = dir_.string();
    ASSERT_EQ(run("experiment ga-norm --nu 1 --p 2 --d 1 --out \"" + d + "\"").code, 0);
    const std::string ga = slurp(dir_ / "ga_norm.csv");
    EXPECT_EQ(ga.rfind("nu,p,d,magnitude,measured,reference,rel_dev", 0), 0u) << ga;
    EXPECT_NE(ga.find("slope"), std::string::npos);
    ASSERT_EQ(run("experiment poly-annihilation --k 1 --s 1 --out \"" + d + "\"").code, 0);
    EXPECT_TRUE(fs::exists(dir_ / "poly_annihilation.csv"));
    // Module errors surface with exit 1.
    const RunResult dom = run("experiment ga-norm --nu 0.2 --p 2 --d 1 --out \"" + d + "\"");
    EXPECT_EQ(dom.code, 1);
    EXPECT_NE(dom.output.find("nu > d/p"), std::string::npos) << dom.output;
}

TEST_F(CliTest, MakeFieldWritesReadableFile) {
    const fs::path f = dir_ / "g.fld";
    ASSERT_EQ(run("make-field --kind gaussian --d 2 --N 64 --L 20 --file \"" + f.string() + "\"").code, 0);
    std::ifstream is(f, std::ios::binary);
    const Field fld = read_field(is);
    EXPECT_EQ(fld.grid, (GridSpec{2, 20.0, 64}));
    EXPECT_NEAR(fld.values[fld.grid.origin()].real(), 1.0, 1e-15);
}
