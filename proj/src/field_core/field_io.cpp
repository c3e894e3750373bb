#include "homsob/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "homsob/errors.hpp"

namespace homsob {

namespace {

constexpr char kMagic[8] = {'H', 'O', 'M', 'S', 'O', 'B', 'F', '1'};

static_assert(std::endian::native == std::endian::little, "field files assume a little-endian host");

template <class T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw FormatError("truncated field file");
    return v;
}

}  // namespace

void write_field(std::ostream& os, const Field& f) {
    f.validate();
    os.write(kMagic, sizeof(kMagic));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.d));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.N));
    put<double>(os, f.grid.L);
    put<std::uint8_t>(os, static_cast<std::uint8_t>(f.kind));
    for (const auto& z : f.values) {
        put<double>(os, z.real());
        put<double>(os, z.imag());
    }
    if (!os) throw FormatError("failed writing field");
}

Field read_field(std::istream& is) {
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) throw FormatError("not a field file (bad magic)");
    GridSpec g;
    g.d = static_cast<int>(get<std::uint32_t>(is));
    g.N = static_cast<int>(get<std::uint32_t>(is));
    g.L = get<double>(is);
    const auto kind = get<std::uint8_t>(is);
    if (kind > 1) throw FormatError("unknown field kind");
    try {
        g.validate();
    } catch (const StructuralError& e) {
        throw FormatError(std::string("bad field header: ") + e.what());
    }
    std::vector<Complex> v(g.size());
    for (auto& z : v) {
        const double re = get<double>(is);
        const double im = get<double>(is);
        z = Complex(re, im);
    }
    return Field(g, std::move(v), static_cast<FieldKind>(kind));
}

void save_field(const std::string& path, const Field& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw FormatError("cannot open " + path + " for writing");
    write_field(os, f);
}

Field load_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open " + path);
    return read_field(is);
}

}  // namespace homsob
