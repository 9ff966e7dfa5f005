#pragma once

#include <iosfwd>
#include <string>

#include "meanest/point_set.hpp"

namespace meanest {

// Point-set file formats.
//   text:   first line "n d", then n lines of d whitespace-separated floats
//   binary: magic "MEANEST1", u64 LE n, u64 LE d, n*d f64 LE row-major
inline constexpr char kBinaryMagic[8] = {'M', 'E', 'A', 'N', 'E', 'S', 'T', '1'};

PointSet read_point_set_text(std::istream& in);
void write_point_set_text(std::ostream& out, const PointSet& A);

PointSet read_point_set_binary(std::istream& in);
void write_point_set_binary(std::ostream& out, const PointSet& A);

/// Reads either format, sniffing the binary magic.
PointSet read_point_set(const std::string& path);
void write_point_set(const std::string& path, const PointSet& A, bool binary);

}  // namespace meanest
