#include "homsob/experiments.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "homsob/errors.hpp"
#include "homsob/field_io.hpp"
#include "homsob/study_table.hpp"

namespace homsob {

namespace {

std::string axis_label(const MultiIndex& a, int d) {
    std::string s;
    for (int axis = 0; axis < d; ++axis) s += std::to_string(a.a[axis]);
    return s;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw FormatError("cannot write " + path);
    return os;
}

}  // namespace

void write_trend_csv(std::ostream& os, const Polynomial& P) {
    const int d = P.dimension();
    for (int axis = 0; axis < d; ++axis) os << 'a' << axis + 1 << ',';
    os << "coeff\n";
    for (const auto& [alpha, c] : P.coeffs()) {
        for (int axis = 0; axis < d; ++axis) os << alpha.a[axis] << ',';
        os << format_double(c) << '\n';
    }
}

Polynomial read_trend_csv(std::istream& is, int d) {
    Polynomial P(d);
    std::string line;
    if (!std::getline(is, line)) throw FormatError("trend file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string header;
    for (int axis = 1; axis <= d; ++axis) header += "a" + std::to_string(axis) + ",";
    header += "coeff";
    if (line != header) throw FormatError("trend header must be '" + header + "'");
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (static_cast<int>(cells.size()) != d + 1)
            throw FormatError("trend line " + std::to_string(lineno) + ": expected " + std::to_string(d + 1) + " columns");
        MultiIndex alpha;
        try {
            for (int axis = 0; axis < d; ++axis) {
                alpha.a[axis] = std::stoi(cells[static_cast<std::size_t>(axis)]);
                if (alpha.a[axis] < 0) throw FormatError("negative exponent");
            }
            P.add(alpha, std::stod(cells.back()));
        } catch (const std::logic_error&) {
            throw FormatError("trend line " + std::to_string(lineno) + ": malformed number");
        }
    }
    return P;
}

void write_diagnostics_csv(std::ostream& os, const RealizationResult& r) {
    const int d = r.regime.d;
    os << "j,block_sup,block_lp";
    for (const MultiIndex& a : r.taylor_indices) os << ",taylor_" << axis_label(a, d);
    os << '\n';
    for (const auto& diag : r.diagnostics) {
        os << diag.j << ',' << format_double(diag.block_sup) << ',' << format_double(diag.block_lp);
        for (std::size_t i = 0; i < r.taylor_indices.size(); ++i)
            os << ',' << (i < diag.taylor_coeffs.size() ? format_double(diag.taylor_coeffs[i]) : "");
        os << '\n';
    }
}

void write_constraints_csv(std::ostream& os, const ConstraintReport& rep) {
    os << "name,value,enforced,tolerance,pass\n";
    for (const auto& res : rep.residuals)
        os << res.name << ',' << format_double(res.value) << ",1," << format_double(rep.tolerance) << ','
           << (std::abs(res.value) <= rep.tolerance ? "pass" : "FAIL") << '\n';
    for (const auto& res : rep.informational)
        os << res.name << ',' << format_double(res.value) << ",0," << format_double(rep.tolerance) << ",info\n";
    os << "sobolev_norm," << format_double(rep.sobolev_norm) << ",0,,info\n";
}

RealizeOutputs run_realize_experiment(const Field& u, const RegimeParams& rp, const RunConfig& cfg) {
    const Ball ball = cfg.ball_for(u.grid);
    const RealizationResult r = realize(u, rp, cfg.partition_for(u.grid), ball);
    const ConstraintReport rep = verify_canonical_constraints(r.f, rp, ball);

    const std::filesystem::path dir(cfg.out_dir);
    std::filesystem::create_directories(dir);
    RealizeOutputs out{(dir / "out.fld").string(), (dir / "out_periodic.fld").string(), (dir / "out_trend.csv").string(),
                       (dir / "out_diagnostics.csv").string(), (dir / "out_constraints.csv").string()};
    save_field(out.field, r.field());
    save_field(out.periodic, r.f.periodic);
    auto trend = open_out(out.trend);
    write_trend_csv(trend, r.f.trend);
    auto diag = open_out(out.diagnostics);
    write_diagnostics_csv(diag, r);
    auto cons = open_out(out.constraints);
    write_constraints_csv(cons, rep);
    return out;
}

ConstraintReport check_representative(const Field& sampled, const Polynomial& trend, const RegimeParams& rp,
                                      const Ball& ball) {
    Field periodic = sampled;
    if (!trend.empty()) periodic -= trend.sample(sampled.grid);
    return verify_canonical_constraints(Representative{periodic, trend}, rp, ball);
}

}  // namespace homsob
