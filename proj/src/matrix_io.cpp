#include "schur/matrix_io.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "schur/schur_basis.hpp"

namespace schur {

namespace {

constexpr char kMagic[8] = {'S', 'C', 'H', 'U', 'R', 'M', 'A', 'T'};

void check_shape(const MatrixFile& m) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(m.n, m.d));
  if (m.matrix.rows() != dim || m.matrix.cols() != dim)
    throw std::invalid_argument("matrix is not d^n x d^n");
}

template <class T>
void put_le(std::ostream& os, T v) {
  std::array<char, sizeof(T)> bytes;
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(bytes.data(), bytes.size());
}

template <class T>
T get_le(std::istream& is) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!is.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) throw std::runtime_error("truncated binary matrix");
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(bytes[i]) << (8 * i);
  return v;
}

void put_double(std::ostream& os, double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  put_le<std::uint64_t>(os, bits);
}

double get_double(std::istream& is) {
  const std::uint64_t bits = get_le<std::uint64_t>(is);
  double x;
  std::memcpy(&x, &bits, sizeof x);
  return x;
}

}  // namespace

void write_matrix_text(std::ostream& os, const MatrixFile& m) {
  check_shape(m);
  os << "SCHURMAT 1 " << m.n << ' ' << m.d << ' ' << m.matrix.rows() << '\n';
  os << std::setprecision(17);
  for (Eigen::Index r = 0; r < m.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.matrix.cols(); ++c) {
      if (c) os << ' ';
      os << m.matrix(r, c).real() << ' ' << m.matrix(r, c).imag();
    }
    os << '\n';
  }
  if (!os) throw std::runtime_error("failed writing matrix text");
}

MatrixFile read_matrix_text(std::istream& is) {
  std::string magic;
  int version = 0;
  long long dim = 0;
  MatrixFile m;
  if (!(is >> magic >> version >> m.n >> m.d >> dim) || magic != "SCHURMAT" || version != 1)
    throw std::runtime_error("bad matrix text header");
  if (static_cast<std::size_t>(dim) != checked_dimension(m.n, m.d)) throw std::runtime_error("header dim is not d^n");
  m.matrix.resize(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) {
      double re, im;
      if (!(is >> re >> im)) throw std::runtime_error("truncated matrix text");
      m.matrix(r, c) = cplx(re, im);
    }
  return m;
}

void write_matrix_binary(std::ostream& os, const MatrixFile& m) {
  check_shape(m);
  if (m.n > 0xffff || m.d > 0xffff) throw std::invalid_argument("n or d too large for the binary header");
  os.write(kMagic, sizeof kMagic);
  put_le<std::uint16_t>(os, static_cast<std::uint16_t>(m.n));
  put_le<std::uint16_t>(os, static_cast<std::uint16_t>(m.d));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(m.matrix.rows()));
  for (Eigen::Index r = 0; r < m.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < m.matrix.cols(); ++c) {
      put_double(os, m.matrix(r, c).real());
      put_double(os, m.matrix(r, c).imag());
    }
  if (!os) throw std::runtime_error("failed writing binary matrix");
}

MatrixFile read_matrix_binary(std::istream& is) {
  char magic[8];
  if (!is.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0)
    throw std::runtime_error("bad binary matrix magic");
  MatrixFile m;
  m.n = get_le<std::uint16_t>(is);
  m.d = get_le<std::uint16_t>(is);
  const std::uint32_t dim = get_le<std::uint32_t>(is);
  if (dim != checked_dimension(m.n, m.d)) throw std::runtime_error("header dim is not d^n");
  m.matrix.resize(dim, dim);
  for (Eigen::Index r = 0; r < m.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < m.matrix.cols(); ++c) {
      const double re = get_double(is);
      m.matrix(r, c) = cplx(re, get_double(is));
    }
  return m;
}

void save_matrix(const std::string& path, const MatrixFile& m, MatrixFormat format) {
  std::ofstream os(path, format == MatrixFormat::Binary ? std::ios::binary : std::ios::out);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  if (format == MatrixFormat::Binary)
    write_matrix_binary(os, m);
  else
    write_matrix_text(os, m);
}

MatrixFile load_matrix(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  char head[11] = {};
  is.read(head, 11);
  is.clear();
  is.seekg(0);
  // binary n=32 also puts a space after the magic, so match the version field too
  if (std::memcmp(head, "SCHURMAT 1 ", 11) == 0) return read_matrix_text(is);
  return read_matrix_binary(is);
}

}  // namespace schur
