#include "schur/linalg.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace schur {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs(const ComplexMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double unitarity_deviation(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unitarity_deviation: matrix not square");
  if (u.size() == 0) return 0.0;
  const auto id = ComplexMatrix::Identity(u.rows(), u.cols());
  ComplexMatrix a = u * u.adjoint();
  ComplexMatrix b = u.adjoint() * u;
  return std::max(max_abs_diff(a, id), max_abs_diff(b, id));
}

int hermitian_rank(const ComplexMatrix& h, double tol) {
  if (h.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()[i]) > tol) ++r;
  return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("SCHUR_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::atomic<std::size_t>& cap_slot() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::size_t dense_cap() { return cap_slot().load(); }

void set_dense_cap(std::size_t cap) { cap_slot().store(cap); }

void require_within_cap(std::size_t dim, std::size_t cap, const char* what) {
  if (dim > cap)
    throw CapExceeded(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
}

}  // namespace schur
