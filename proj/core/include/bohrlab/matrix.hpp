#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bohrlab {

using cplx = std::complex<double>;

// Dense square complex matrix. Carrier for the operator coefficients of a
// power series; dimensions stay small (the toolkit supports up to 16), so a
// flat row-major vector and O(dim^3) algorithms are entirely adequate.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(1), entries_(1) {}
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  // c * I at the given dimension.
  static ComplexMatrix scalar(std::size_t dim, cplx c);

  std::size_t dim() const { return dim_; }
  cplx& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const cplx& at(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx c);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(cplx c, ComplexMatrix a) {
    a *= c;
    return a;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  // Largest |entry|; cheap scale estimate used for tolerances and prescaling.
  double max_abs_entry() const;
  // Throws std::invalid_argument naming the offending entry if any component
  // is NaN or infinite.
  void validate_finite() const;

 private:
  std::size_t dim_;
  std::vector<cplx> entries_;
};

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations: values ascending, vectors stored as columns of `vectors`.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};
EigenSystem eigen_hermitian(const ComplexMatrix& m);

// Spectral norm (largest singular value) within relative error tol.
// tol must lie in (0, 1e-6]; the implementation converges to machine
// precision regardless, so the contract is always met.
double operator_norm(const ComplexMatrix& m, double tol = 1e-9);

// Unique positive-semidefinite square root of a Hermitian PSD matrix.
// Eigenvalues are allowed to dip to -tol*(1+||m||); anything lower throws
// std::domain_error naming the most negative eigenvalue estimate.
ComplexMatrix positive_sqrt(const ComplexMatrix& m, double tol = 1e-10);

// True iff operator_norm(m) <= 1 + tol.
bool is_contraction(const ComplexMatrix& m, double tol = 1e-9);

}  // namespace bohrlab
