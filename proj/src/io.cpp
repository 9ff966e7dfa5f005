#include "meanest/io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "meanest/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "binary point-set format assumes a little-endian host");

namespace meanest {

namespace {

std::uint64_t read_u64(std::istream& in) {
    std::uint64_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) throw IoError("point set: truncated binary header");
    return v;
}

void write_u64(std::ostream& out, std::uint64_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

}  // namespace

PointSet read_point_set_text(std::istream& in) {
    std::size_t n = 0, d = 0;
    if (!(in >> n >> d)) throw IoError("point set: bad text header");
    if (n == 0 || d == 0) throw IoError("point set: n and d must be >= 1");
    PointSet out(n, d);
    for (double& x : out.data())
        if (!(in >> x)) throw IoError("point set: truncated text data");
    try {
        out.check_finite();
    } catch (const std::invalid_argument& e) {
        throw IoError(e.what());
    }
    return out;
}

void write_point_set_text(std::ostream& out, const PointSet& A) {
    out << A.size() << ' ' << A.dim() << '\n';
    char buf[32];
    for (std::size_t i = 0; i < A.size(); ++i) {
        auto r = A.row(i);
        for (std::size_t k = 0; k < A.dim(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", r[k]);
            out << (k ? " " : "") << buf;
        }
        out << '\n';
    }
    if (!out) throw IoError("point set: write failed");
}

PointSet read_point_set_binary(std::istream& in) {
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (!in || std::memcmp(magic.data(), kBinaryMagic, 8) != 0)
        throw IoError("point set: missing MEANEST1 magic");
    const std::uint64_t n = read_u64(in);
    const std::uint64_t d = read_u64(in);
    if (n == 0 || d == 0) throw IoError("point set: n and d must be >= 1");
    PointSet out(n, d);
    in.read(reinterpret_cast<char*>(out.data().data()),
            static_cast<std::streamsize>(n * d * sizeof(double)));
    if (!in) throw IoError("point set: truncated binary data");
    try {
        out.check_finite();
    } catch (const std::invalid_argument& e) {
        throw IoError(e.what());
    }
    return out;
}

void write_point_set_binary(std::ostream& out, const PointSet& A) {
    out.write(kBinaryMagic, 8);
    write_u64(out, A.size());
    write_u64(out, A.dim());
    out.write(reinterpret_cast<const char*>(A.data().data()),
              static_cast<std::streamsize>(A.data().size() * sizeof(double)));
    if (!out) throw IoError("point set: write failed");
}

PointSet read_point_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::array<char, 8> head{};
    in.read(head.data(), head.size());
    const bool binary =
        in.gcount() == 8 && std::memcmp(head.data(), kBinaryMagic, 8) == 0;
    in.clear();
    in.seekg(0);
    return binary ? read_point_set_binary(in) : read_point_set_text(in);
}

void write_point_set(const std::string& path, const PointSet& A, bool binary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    if (binary)
        write_point_set_binary(out, A);
    else
        write_point_set_text(out, A);
}

}  // namespace meanest
