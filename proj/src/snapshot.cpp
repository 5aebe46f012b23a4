#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>

#include "gaussdiss/errors.hpp"
#include "gaussdiss/fock_oracle.hpp"

namespace gaussdiss {

namespace {

constexpr std::array<char, 8> kMagic{'F', 'O', 'C', 'K', 'R', 'H', 'O', '1'};

template <class UInt>
void put_le(std::ostream& out, UInt v) {
  std::array<char, sizeof(UInt)> bytes{};
  for (std::size_t i = 0; i < sizeof(UInt); ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

template <class UInt>
UInt get_le(std::istream& in) {
  std::array<unsigned char, sizeof(UInt)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw std::runtime_error("snapshot truncated");
  UInt v = 0;
  for (std::size_t i = 0; i < sizeof(UInt); ++i) v |= static_cast<UInt>(bytes[i]) << (8 * i);
  return v;
}

}  // namespace

void write_snapshot(std::ostream& out, const FockState& rho) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(rho.dim()));
  put_le<std::uint32_t>(out, 0);
  const auto& m = rho.matrix();
  for (int row = 0; row < rho.dim(); ++row) {
    for (int col = 0; col < rho.dim(); ++col) {
      put_le(out, std::bit_cast<std::uint64_t>(m(row, col).real()));
      put_le(out, std::bit_cast<std::uint64_t>(m(row, col).imag()));
    }
  }
  if (!out) throw std::runtime_error("snapshot write failed");
}

FockState read_snapshot(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("not a FOCKRHO1 snapshot");
  const auto dim = get_le<std::uint32_t>(in);
  get_le<std::uint32_t>(in);
  if (dim == 0 || dim > static_cast<std::uint32_t>(kMaxOracleDim)) {
    throw ResourceLimit("snapshot dimension out of range");
  }
  ComplexMatrix m(dim, dim);
  for (std::uint32_t row = 0; row < dim; ++row) {
    for (std::uint32_t col = 0; col < dim; ++col) {
      const double re = std::bit_cast<double>(get_le<std::uint64_t>(in));
      const double im = std::bit_cast<double>(get_le<std::uint64_t>(in));
      m(row, col) = Complex(re, im);
    }
  }
  return FockState(std::move(m));
}

}  // namespace gaussdiss
