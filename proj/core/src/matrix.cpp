#include "bohrlab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bohrlab {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  return scalar(dim, 1.0);
}

ComplexMatrix ComplexMatrix::scalar(std::size_t dim, cplx c) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t n = a.dim_;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

double ComplexMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

void ComplexMatrix::validate_finite() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const cplx& e = at(i, j);
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
        throw std::invalid_argument("non-finite matrix entry at (" +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    ")");
    }
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = std::conj(m.at(j, i));
  return a;
}

namespace {

// One sweep of cyclic Jacobi rotations on a Hermitian matrix `h`, with the
// accumulated unitary in `v`. Returns the off-diagonal reduction it achieved.
void jacobi_rotate(ComplexMatrix& h, ComplexMatrix& v, std::size_t p,
                   std::size_t q) {
  const cplx g = h.at(p, q);
  const double absg = std::abs(g);
  if (absg == 0.0) return;
  // Phase that makes the (p,q) entry real, then a real rotation that kills it.
  const cplx phase = g / absg;
  const double alpha = h.at(p, p).real();
  const double beta = h.at(q, q).real();
  const double tau = (beta - alpha) / (2.0 * absg);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cplx s = t * c * phase;
  const std::size_t n = h.dim();
  // Column update h <- h*J with J = [[c, s],[-conj(s), c]] on (p,q).
  for (std::size_t k = 0; k < n; ++k) {
    const cplx hkp = h.at(k, p);
    const cplx hkq = h.at(k, q);
    h.at(k, p) = c * hkp - std::conj(s) * hkq;
    h.at(k, q) = s * hkp + c * hkq;
  }
  // Row update h <- J^* h.
  for (std::size_t k = 0; k < n; ++k) {
    const cplx hpk = h.at(p, k);
    const cplx hqk = h.at(q, k);
    h.at(p, k) = c * hpk - s * hqk;
    h.at(q, k) = std::conj(s) * hpk + c * hqk;
  }
  // Re-symmetrize the pivot entries against roundoff.
  h.at(p, q) = 0.0;
  h.at(q, p) = 0.0;
  h.at(p, p) = cplx(h.at(p, p).real(), 0.0);
  h.at(q, q) = cplx(h.at(q, q).real(), 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v.at(k, p);
    const cplx vkq = v.at(k, q);
    v.at(k, p) = c * vkp - std::conj(s) * vkq;
    v.at(k, q) = s * vkp + c * vkq;
  }
}

double offdiag_norm(const ComplexMatrix& h) {
  double acc = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (i != j) acc += std::norm(h.at(i, j));
  return std::sqrt(acc);
}

}  // namespace

EigenSystem eigen_hermitian(const ComplexMatrix& m) {
  m.validate_finite();
  const std::size_t n = m.dim();
  ComplexMatrix h = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, h.max_abs_entry());
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_norm(h) <= 1e-15 * scale * static_cast<double>(n)) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(h, v, p, q);
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return h.at(a, a).real() < h.at(b, b).real();
  });
  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = h.at(idx[c], idx[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors.at(r, c) = v.at(r, idx[c]);
  }
  return out;
}

double operator_norm(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0) || tol > 1e-6)
    throw std::invalid_argument("operator_norm tolerance must lie in (0, 1e-6]");
  m.validate_finite();
  if (m.dim() == 1) return std::abs(m.at(0, 0));
  // Prescale by a power of two so that tiny (even subnormal) or huge entries
  // neither underflow nor overflow when the conjugate-transpose product is
  // formed.  Entrywise ldexp keeps the scaling exact at every magnitude.
  const double s = m.max_abs_entry();
  if (s == 0.0) return 0.0;
  int e = 0;
  std::frexp(s, &e);
  ComplexMatrix b = m;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const cplx v = b.at(i, j);
      b.at(i, j) = cplx(std::ldexp(v.real(), -e), std::ldexp(v.imag(), -e));
    }
  const ComplexMatrix bs = adjoint(b) * b;
  const EigenSystem es = eigen_hermitian(bs);
  const double lambda = std::max(0.0, es.values.back());
  return std::ldexp(std::sqrt(lambda), e);
}

ComplexMatrix positive_sqrt(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("positive_sqrt tolerance must be positive");
  m.validate_finite();
  const std::size_t n = m.dim();
  const double scale = 1.0 + m.max_abs_entry();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > tol * scale)
        throw std::domain_error("positive_sqrt requires a self-adjoint matrix");
  const EigenSystem es = eigen_hermitian(m);
  const double norm = std::max(std::abs(es.values.front()), std::abs(es.values.back()));
  if (es.values.front() < -tol * (1.0 + norm))
    throw std::domain_error(
        "matrix is not positive semidefinite: most negative eigenvalue "
        "estimate " +
        std::to_string(es.values.front()));
  ComplexMatrix root(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::max(0.0, es.values[k]);
        acc += es.vectors.at(i, k) * std::sqrt(lam) * std::conj(es.vectors.at(j, k));
      }
      root.at(i, j) = acc;
    }
  return root;
}

bool is_contraction(const ComplexMatrix& m, double tol) {
  return operator_norm(m, std::min(tol, 1e-9)) <= 1.0 + tol;
}

}  // namespace bohrlab
