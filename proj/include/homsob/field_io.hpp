#pragma once

#include <iosfwd>
#include <string>

#include "homsob/grid.hpp"

namespace homsob {

// FLD1 layout: "HOMSOBF1", u32 d, u32 N, f64 L, u8 kind, N^d x (f64 re, f64 im), all little-endian.
void write_field(std::ostream& os, const Field& f);
Field read_field(std::istream& is);

void save_field(const std::string& path, const Field& f);
Field load_field(const std::string& path);

}  // namespace homsob
