#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bohrlab/matrix.hpp"

namespace bohrlab {

// Parameter of the one-dimensional extremal family z (a - z) / (1 - a z) * I
// and of the matching Moebius factor (a - z) / (1 - a z).
struct FamilyParam {
  double a = 0.0;
  void validate() const;  // requires 0 <= a < 1
};

// Truncated power series f(z) = sum_{n<=order} A_n z^n with square matrix
// coefficients.
//
//  - schur_certified: the underlying function is known to map the unit disk
//    into the closed unit ball of operators (exact by construction for the
//    inner families generated here, or asserted by the caller / input file).
//  - a0_scalar: present iff A_0 equals a0 * I within 1e-12.
//  - exact: the series IS the function (a polynomial); every truncation tail
//    is zero. Generated truncations of infinite series leave this false and
//    rely on certificate-based tail bounds instead.
struct MatrixPowerSeries {
  std::size_t dim = 1;
  std::size_t order = 0;
  std::vector<ComplexMatrix> coeffs;  // order + 1 entries, A_0 .. A_order
  bool schur_certified = false;
  std::optional<cplx> a0_scalar;
  bool exact = false;

  void validate() const;  // throws std::invalid_argument on shape violations
};

// Scalar detection threshold shared by generators and validation: a
// coefficient counts as c * I when every entry deviation is <= 1e-12.
std::optional<cplx> scalar_part(const ComplexMatrix& m, double tol = 1e-12);

// Truncated-polynomial evaluation (Horner). Requires |z| < 1.
ComplexMatrix eval_at(const MatrixPowerSeries& s, cplx z);

// Maximum of ||f|| over `samples` equally spaced points of the circle |z|=r,
// followed by one three-point parabolic refinement around the argmax; the
// result is the max over all points actually evaluated. samples >= 8.
double sup_norm_on_circle(const MatrixPowerSeries& s, double r,
                          std::size_t samples = 256);

// (1 - |a0|^2) r^{order+1} / (1 - r), a bound on sum_{n>order} ||A_n|| r^n for
// certified series (coefficient bound ||A_n|| <= 1 - |a0|^2). Returns 0 for
// exact polynomials; throws contract_error when no certificate is available.
double tail_bound(const MatrixPowerSeries& s, double r);

// z (a - z) / (1 - a z) * I truncated at `order`:
// A_0 = 0, A_1 = a I, A_n = -(1 - a^2) a^{n-2} I.
MatrixPowerSeries psi_family(FamilyParam p, std::size_t order,
                             std::size_t dim = 2);

// (a - z) / (1 - a z) * I truncated at `order`:
// c_0 = a, c_n = -(1 - a^2) a^{n-1}. Satisfies z * mobius = psi termwise.
MatrixPowerSeries mobius_family(FamilyParam p, std::size_t order,
                                std::size_t dim = 2);

enum class GeneratorMode { ScalarType, DiagonalBlaschke, MoebiusConjugated };
GeneratorMode parse_generator_mode(std::string_view name);
std::string_view generator_mode_name(GeneratorMode mode);

struct GeneratorOptions {
  // Forces a zero of every Blaschke factor at the origin, so the generated
  // function vanishes at 0 (scalar-type / diagonal-blaschke modes). Needed by
  // checks whose hypotheses require f(0) = 0 or a scalar A_0.
  bool zero_at_origin = false;
  // Blaschke degree per factor.
  std::size_t degree = 6;
};

// Seeded Schur-class test functions:
//  - scalar-type: random finite Blaschke product (zeros uniform in |z|<=0.9,
//    unimodular front factor) embedded as b(z) * I.
//  - diagonal-blaschke: U diag(b_1, ..., b_dim) V with independent Blaschke
//    products and fixed random unitaries U, V.
//  - moebius-conjugated: (a0 I + h) (I + a0 h)^{-1} for scalar a0 in (-1, 1)
//    and inner h(z) = z u(z), expanded by power-series inversion.
MatrixPowerSeries random_schur_matrix(std::size_t dim, std::size_t order,
                                      GeneratorMode mode, std::uint64_t seed,
                                      const GeneratorOptions& opts = {});

// Polynomial with the given scalar coefficients, embedded as c * I at `dim`.
// The result is exact (tail 0) and carries no Schur certificate by itself.
MatrixPowerSeries scalar_embed(const std::vector<cplx>& coeffs,
                               std::size_t dim = 1);

// Numerical certification: samples ||f|| on the circles r in {0.5, 0.9, 0.99}
// (512 points each) and marks the series schur_certified when every sample
// stays below 1 + tol. Returns the certified copy.
MatrixPowerSeries certify_by_sampling(MatrixPowerSeries s, double tol = 1e-9);

}  // namespace bohrlab
