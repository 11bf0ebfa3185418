#include "randwave/spectral/field_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace randwave {

namespace {

constexpr std::array<char, 4> kMagic{'R', 'W', 'F', 'D'};

template <typename T>
void put_le(std::ostream& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  std::array<unsigned char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T))) {
    throw std::runtime_error("field dump truncated");
  }
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void write_field(std::ostream& out, const Field& field, const std::string& name) {
  if (name.size() > 0xFFFF) throw std::invalid_argument("field name too long");
  const Grid& g = field.grid();
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kFieldDumpVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(g.n()));
  put_le<double>(out, g.box_length());
  put_le<std::uint8_t>(out, field.is_physical() ? 0 : 1);
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(name.size()));
  out.write(name.data(), static_cast<std::streamsize>(name.size()));
  if (field.is_physical()) {
    for (double v : field.samples()) put_le<double>(out, v);
  } else {
    for (const Complex& c : field.amplitudes()) {
      put_le<double>(out, c.real());
      put_le<double>(out, c.imag());
    }
  }
  if (!out) throw std::runtime_error("failed writing field dump");
}

void write_field(const std::filesystem::path& path, const Field& field, const std::string& name) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_field(out, field, name);
}

NamedField read_field(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("not a field dump (bad magic)");
  }
  const auto version = get_le<std::uint32_t>(in);
  if (version != kFieldDumpVersion) {
    throw std::runtime_error("unsupported field dump version " + std::to_string(version));
  }
  const auto n = get_le<std::uint32_t>(in);
  const auto length = get_le<double>(in);
  const auto rep = get_le<std::uint8_t>(in);
  const auto name_len = get_le<std::uint16_t>(in);
  std::string name(name_len, '\0');
  if (name_len > 0 && !in.read(name.data(), name_len)) throw std::runtime_error("field dump truncated");
  if (rep > 1) throw std::runtime_error("bad representation tag in field dump");
  const Grid grid(static_cast<int>(n), length);
  if (rep == 0) {
    std::vector<double> samples(grid.size());
    for (auto& v : samples) v = get_le<double>(in);
    return {name, Field::physical(grid, std::move(samples))};
  }
  std::vector<Complex> amps(grid.size());
  for (auto& c : amps) {
    const double re = get_le<double>(in);
    const double im = get_le<double>(in);
    c = {re, im};
  }
  return {name, Field::spectral(grid, std::move(amps))};
}

NamedField read_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_field(in);
}

}  // namespace randwave
