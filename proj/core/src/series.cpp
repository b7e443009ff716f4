#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bohrlab/errors.hpp"
#include "bohrlab/rng.hpp"

namespace bohrlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void FamilyParam::validate() const {
  if (!(a >= 0.0 && a < 1.0))
    throw std::invalid_argument("family parameter must satisfy 0 <= a < 1");
}

std::optional<cplx> scalar_part(const ComplexMatrix& m, double tol) {
  const cplx c = m.at(0, 0);
  const double per_entry = tol / static_cast<double>(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const cplx want = (i == j) ? c : cplx{};
      if (std::abs(m.at(i, j) - want) > per_entry) return std::nullopt;
    }
  return c;
}

void MatrixPowerSeries::validate() const {
  if (dim == 0) throw std::invalid_argument("series dim must be positive");
  if (coeffs.size() != order + 1)
    throw std::invalid_argument("series must hold order + 1 coefficients");
  for (const auto& c : coeffs) {
    if (c.dim() != dim)
      throw std::invalid_argument("series coefficient dimension mismatch");
    c.validate_finite();
  }
  if (a0_scalar) {
    const ComplexMatrix delta =
        coeffs[0] - ComplexMatrix::scalar(dim, *a0_scalar);
    if (operator_norm(delta) > 1e-12)
      throw std::invalid_argument(
          "a0_scalar certificate does not match the constant coefficient");
    if (schur_certified) {
      // Coefficient bound for certified series with scalar constant term:
      // every later coefficient has norm at most 1 - |a0|^2.
      const double cap = 1.0 - std::norm(*a0_scalar) + 1e-9;
      for (std::size_t n = 1; n < coeffs.size(); ++n)
        if (operator_norm(coeffs[n]) > cap)
          throw std::invalid_argument(
              "certified series violates the coefficient bound at index " +
              std::to_string(n));
    }
  }
}

ComplexMatrix eval_at(const MatrixPowerSeries& s, cplx z) {
  if (!(std::abs(z) < 1.0))
    throw std::domain_error("series evaluation requires |z| < 1");
  if (s.coeffs.empty())
    throw std::invalid_argument("series has no coefficients");
  ComplexMatrix acc = s.coeffs.back();
  for (std::size_t n = s.order; n-- > 0;) {
    acc *= z;
    acc += s.coeffs[n];
  }
  return acc;
}

double sup_norm_on_circle(const MatrixPowerSeries& s, double r,
                          std::size_t samples) {
  if (samples < 8) throw std::invalid_argument("sup norm needs samples >= 8");
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("sup norm radius must lie in [0, 1)");
  std::vector<double> vals(samples);
  double best = 0.0;
  std::size_t argmax = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    const cplx z = r * cplx(std::cos(theta), std::sin(theta));
    vals[k] = operator_norm(eval_at(s, z));
    if (vals[k] > best) {
      best = vals[k];
      argmax = k;
    }
  }
  // One parabolic refinement through the argmax and its two neighbours; the
  // returned value is the max over all points actually evaluated, so it can
  // only improve on the plain grid maximum.
  const double h = kTwoPi / static_cast<double>(samples);
  const double ym = vals[(argmax + samples - 1) % samples];
  const double y0 = vals[argmax];
  const double yp = vals[(argmax + 1) % samples];
  const double denom = ym - 2.0 * y0 + yp;
  if (denom < 0.0) {
    const double offset = 0.5 * h * (ym - yp) / denom;
    if (std::abs(offset) <= h) {
      const double theta = kTwoPi * static_cast<double>(argmax) /
                               static_cast<double>(samples) +
                           offset;
      const cplx z = r * cplx(std::cos(theta), std::sin(theta));
      best = std::max(best, operator_norm(eval_at(s, z)));
    }
  }
  return best;
}

double tail_bound(const MatrixPowerSeries& s, double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("tail bound radius must lie in [0, 1)");
  if (s.exact) return 0.0;
  if (!s.schur_certified || !s.a0_scalar)
    throw contract_error(
        "tail bound unavailable: series lacks a Schur certificate with a "
        "scalar constant coefficient");
  const double c = 1.0 - std::norm(*s.a0_scalar);
  return c * std::pow(r, static_cast<double>(s.order + 1)) / (1.0 - r);
}

MatrixPowerSeries psi_family(FamilyParam p, std::size_t order,
                             std::size_t dim) {
  p.validate();
  MatrixPowerSeries s;
  s.dim = dim;
  s.order = order;
  s.coeffs.assign(order + 1, ComplexMatrix(dim));
  if (order >= 1) s.coeffs[1] = ComplexMatrix::scalar(dim, p.a);
  double apow = 1.0;  // a^{n-2}
  for (std::size_t n = 2; n <= order; ++n) {
    s.coeffs[n] = ComplexMatrix::scalar(dim, -(1.0 - p.a * p.a) * apow);
    apow *= p.a;
  }
  s.schur_certified = true;
  s.a0_scalar = cplx{0.0, 0.0};
  return s;
}

MatrixPowerSeries mobius_family(FamilyParam p, std::size_t order,
                                std::size_t dim) {
  p.validate();
  MatrixPowerSeries s;
  s.dim = dim;
  s.order = order;
  s.coeffs.assign(order + 1, ComplexMatrix(dim));
  s.coeffs[0] = ComplexMatrix::scalar(dim, p.a);
  double apow = 1.0;  // a^{n-1}
  for (std::size_t n = 1; n <= order; ++n) {
    s.coeffs[n] = ComplexMatrix::scalar(dim, -(1.0 - p.a * p.a) * apow);
    apow *= p.a;
  }
  s.schur_certified = true;
  s.a0_scalar = cplx{p.a, 0.0};
  return s;
}

GeneratorMode parse_generator_mode(std::string_view name) {
  if (name == "scalar-type") return GeneratorMode::ScalarType;
  if (name == "diagonal-blaschke") return GeneratorMode::DiagonalBlaschke;
  if (name == "moebius-conjugated") return GeneratorMode::MoebiusConjugated;
  throw std::invalid_argument("unknown generator mode: " + std::string(name));
}

std::string_view generator_mode_name(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::ScalarType: return "scalar-type";
    case GeneratorMode::DiagonalBlaschke: return "diagonal-blaschke";
    case GeneratorMode::MoebiusConjugated: return "moebius-conjugated";
  }
  return "?";
}

namespace {

// Taylor coefficients (exact mod z^{order+1}) of the Blaschke product
// e^{i phase} prod_k (z - w_k) / (1 - conj(w_k) z).
std::vector<cplx> blaschke_coeffs(const std::vector<cplx>& zeros, cplx front,
                                  std::size_t order) {
  std::vector<cplx> c(order + 1, cplx{});
  c[0] = front;
  std::vector<cplx> factor(order + 1), out(order + 1);
  for (const cplx& w : zeros) {
    // (z - w)/(1 - conj(w) z) = -w + (1-|w|^2) sum_{m>=1} conj(w)^{m-1} z^m.
    factor.assign(order + 1, cplx{});
    factor[0] = -w;
    const double unit = 1.0 - std::norm(w);
    cplx wpow = 1.0;
    for (std::size_t m = 1; m <= order; ++m) {
      factor[m] = unit * wpow;
      wpow *= std::conj(w);
    }
    out.assign(order + 1, cplx{});
    for (std::size_t n = 0; n <= order; ++n)
      for (std::size_t k = 0; k <= n; ++k) out[n] += c[k] * factor[n - k];
    c.swap(out);
  }
  return c;
}

std::vector<cplx> random_blaschke(Rng& rng, std::size_t degree,
                                  std::size_t order, bool zero_at_origin) {
  std::vector<cplx> zeros;
  zeros.reserve(degree);
  if (zero_at_origin && degree > 0) zeros.push_back(cplx{});
  while (zeros.size() < degree) zeros.push_back(rng.in_disk(0.9));
  return blaschke_coeffs(zeros, rng.on_circle(), order);
}

// Unitary from modified Gram-Schmidt on a complex gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
  ComplexMatrix u(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<cplx> col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = rng.gaussian();
    for (std::size_t prev = 0; prev < j; ++prev) {
      cplx proj{};
      for (std::size_t i = 0; i < dim; ++i)
        proj += std::conj(u.at(i, prev)) * col[i];
      for (std::size_t i = 0; i < dim; ++i) col[i] -= proj * u.at(i, prev);
    }
    double norm2 = 0.0;
    for (const cplx& v : col) norm2 += std::norm(v);
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i) u.at(i, j) = col[i] * inv;
  }
  return u;
}

MatrixPowerSeries diagonal_blaschke(Rng& rng, std::size_t dim,
                                    std::size_t order,
                                    const GeneratorOptions& opts,
                                    bool conjugate_by_unitaries) {
  std::vector<std::vector<cplx>> diag(dim);
  for (std::size_t i = 0; i < dim; ++i)
    diag[i] = random_blaschke(rng, opts.degree, order, opts.zero_at_origin);
  MatrixPowerSeries s;
  s.dim = dim;
  s.order = order;
  s.coeffs.assign(order + 1, ComplexMatrix(dim));
  if (conjugate_by_unitaries) {
    const ComplexMatrix u = random_unitary(rng, dim);
    const ComplexMatrix v = random_unitary(rng, dim);
    for (std::size_t n = 0; n <= order; ++n) {
      ComplexMatrix d(dim);
      for (std::size_t i = 0; i < dim; ++i) d.at(i, i) = diag[i][n];
      s.coeffs[n] = u * d * v;
    }
  } else {
    for (std::size_t n = 0; n <= order; ++n)
      for (std::size_t i = 0; i < dim; ++i) s.coeffs[n].at(i, i) = diag[i][n];
  }
  s.schur_certified = true;  // sup ||f|| = max_i sup |b_i| = 1 by construction
  s.a0_scalar = scalar_part(s.coeffs[0]);
  return s;
}

}  // namespace

MatrixPowerSeries random_schur_matrix(std::size_t dim, std::size_t order,
                                      GeneratorMode mode, std::uint64_t seed,
                                      const GeneratorOptions& opts) {
  if (dim == 0) throw std::invalid_argument("generator dim must be positive");
  if (order < 2) throw std::invalid_argument("generator order must be >= 2");
  Rng rng(splitmix64(seed));
  switch (mode) {
    case GeneratorMode::ScalarType: {
      const std::vector<cplx> b =
          random_blaschke(rng, opts.degree, order, opts.zero_at_origin);
      MatrixPowerSeries s;
      s.dim = dim;
      s.order = order;
      s.coeffs.reserve(order + 1);
      for (std::size_t n = 0; n <= order; ++n)
        s.coeffs.push_back(ComplexMatrix::scalar(dim, b[n]));
      s.schur_certified = true;
      s.a0_scalar = b[0];
      return s;
    }
    case GeneratorMode::DiagonalBlaschke:
      return diagonal_blaschke(rng, dim, order, opts, true);
    case GeneratorMode::MoebiusConjugated: {
      // Inner factor h(z) = z u(z), u = U diag(blaschke) V of smaller degree.
      GeneratorOptions inner = opts;
      inner.degree = 4;
      inner.zero_at_origin = false;
      const MatrixPowerSeries u = diagonal_blaschke(rng, dim, order, inner, true);
      const double a0 = rng.uniform(-0.9, 0.9);
      // h_0 = 0, h_n = u_{n-1}; denominator D = I + a0 h, numerator = a0 I + h.
      std::vector<ComplexMatrix> h(order + 1, ComplexMatrix(dim));
      for (std::size_t n = 1; n <= order; ++n) h[n] = u.coeffs[n - 1];
      std::vector<ComplexMatrix> inv(order + 1, ComplexMatrix(dim));
      inv[0] = ComplexMatrix::identity(dim);
      for (std::size_t n = 1; n <= order; ++n) {
        ComplexMatrix acc(dim);
        for (std::size_t k = 1; k <= n; ++k)
          acc += (cplx{a0, 0.0} * h[k]) * inv[n - k];
        inv[n] = cplx{-1.0, 0.0} * acc;
      }
      MatrixPowerSeries s;
      s.dim = dim;
      s.order = order;
      s.coeffs.assign(order + 1, ComplexMatrix(dim));
      for (std::size_t n = 0; n <= order; ++n) {
        ComplexMatrix acc(dim);
        for (std::size_t k = 0; k <= n; ++k) {
          ComplexMatrix num = (k == 0) ? ComplexMatrix::scalar(dim, a0) : h[k];
          acc += num * inv[n - k];
        }
        s.coeffs[n] = acc;
      }
      s.schur_certified = true;  // Moebius transform of an inner function
      s.a0_scalar = cplx{a0, 0.0};
      return s;
    }
  }
  throw std::logic_error("unreachable generator mode");
}

MatrixPowerSeries scalar_embed(const std::vector<cplx>& coeffs,
                               std::size_t dim) {
  if (coeffs.empty())
    throw std::invalid_argument("scalar_embed needs at least one coefficient");
  MatrixPowerSeries s;
  s.dim = dim;
  s.order = coeffs.size() - 1;
  s.coeffs.reserve(coeffs.size());
  for (const cplx& c : coeffs) s.coeffs.push_back(ComplexMatrix::scalar(dim, c));
  s.a0_scalar = coeffs[0];
  s.exact = true;
  return s;
}

MatrixPowerSeries certify_by_sampling(MatrixPowerSeries s, double tol) {
  s.validate();
  for (const double r : {0.5, 0.9, 0.99})
    if (sup_norm_on_circle(s, r, 512) > 1.0 + tol) return s;
  s.schur_certified = true;
  s.validate();
  return s;
}

}  // namespace bohrlab
