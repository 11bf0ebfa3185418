#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "randwave/spectral/field.hpp"

namespace randwave {

/// Binary field dump, all integers and floats little-endian:
///
///   offset  size  content
///   0       4     magic "RWFD"
///   4       4     u32 format version (1)
///   8       4     u32 n_points
///   12      8     f64 box_length
///   20      1     u8 representation (0 physical, 1 spectral)
///   21      2     u16 name length N
///   23      N     field name, UTF-8
///   23+N    ...   n*n f64 samples (physical) or n*n (re, im) f64 pairs
///                 (spectral), row-major in storage order
struct NamedField {
  std::string name;
  Field field;
};

inline constexpr std::uint32_t kFieldDumpVersion = 1;

void write_field(std::ostream& out, const Field& field, const std::string& name);
void write_field(const std::filesystem::path& path, const Field& field, const std::string& name);

/// Throws std::runtime_error on a malformed or truncated stream.
NamedField read_field(std::istream& in);
NamedField read_field(const std::filesystem::path& path);

}  // namespace randwave
