#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homsob {

/// Rows of (parameters..., measured, reference, rel_dev).
struct StudyTable {
    std::vector<std::string> param_names;
    struct Row {
        std::vector<std::string> params;
        double measured = 0.0;
        double reference = 0.0;
        double rel_dev = 0.0;
    };
    std::vector<Row> rows;

    void add(std::vector<std::string> params, double measured, double reference);
    void write_csv(std::ostream& os) const;
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace homsob
