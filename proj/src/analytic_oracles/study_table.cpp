#include "homsob/study_table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace homsob {

void StudyTable::add(std::vector<std::string> params, double measured, double reference) {
    const double dev = reference == 0.0 ? std::abs(measured) : std::abs(measured - reference) / std::abs(reference);
    rows.push_back({std::move(params), measured, reference, dev});
}

void StudyTable::write_csv(std::ostream& os) const {
    for (const auto& name : param_names) os << name << ',';
    os << "measured,reference,rel_dev\n";
    for (const auto& row : rows) {
        for (const auto& p : row.params) os << p << ',';
        os << format_double(row.measured) << ',' << format_double(row.reference) << ',' << format_double(row.rel_dev)
           << '\n';
    }
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace homsob
