#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace schur {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest |A_ij - B_ij|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);
// max |U U^dagger - I| and max |U^dagger U - I|, whichever is larger.
double unitarity_deviation(const ComplexMatrix& u);
// Numerical rank from Hermitian eigenvalues above tol.
int hermitian_rank(const ComplexMatrix& h, double tol = 1e-8);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Process-wide amplitude cap for dense d^n objects; initialized from
// SCHUR_CAP when set, default 4096.
std::size_t dense_cap();
void set_dense_cap(std::size_t cap);
void require_within_cap(std::size_t dim, std::size_t cap, const char* what);

}  // namespace schur
