#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "bohrlab/bounds.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/rng.hpp"

namespace bohrlab {

// Complete circular domains handled by the several-variables checks:
//   polydisk    {z : max_j |z_j| < 1}
//   ball        {z : sum_j |z_j|^2 < 1}
//   functional  {z : max_k |l_k(z)| < 1},  l_k(z) = sum_j alphas[k][j] z_j
enum class DomainShape { Polydisk, Ball, Functional };
DomainShape parse_domain_shape(std::string_view name);
std::string_view domain_shape_name(DomainShape shape);

struct CircularDomain {
  DomainShape shape = DomainShape::Polydisk;
  std::size_t n = 1;                    // number of variables
  std::vector<std::vector<cplx>> alphas;  // functional shape only
  void validate() const;
};

// Minkowski gauge of v: the factor g with v / g on the domain boundary.
double domain_gauge(const CircularDomain& domain, const std::vector<cplx>& v);

// Polynomial map in n complex variables with square matrix coefficients,
// F(z) = sum_alpha A_alpha z^alpha, stored sparsely by multi-index.
//  - bounded_certified: ||F|| <= 1 on the domain it is checked against
//    (asserted by the caller / input file, or exact by construction).
//  - exact: the coefficient list IS the function. Truncations of infinite
//    expansions clear this and rely on certificate tail bounds downstream.
struct PowerSeriesND {
  std::size_t n = 1;
  std::size_t dim = 1;
  std::map<std::vector<std::size_t>, ComplexMatrix> coeffs;
  bool bounded_certified = false;
  bool exact = true;

  std::size_t total_degree() const;  // 0 for an empty coefficient map
  void validate() const;
};

ComplexMatrix eval_at(const PowerSeriesND& F, const std::vector<cplx>& z);

// Splits F into homogeneous layers P_0, ..., P_deg with F = sum_m P_m.
// Each layer of a bounded function obeys the same bound on a complete
// circular domain, so the certificate is inherited.
std::vector<PowerSeriesND> homogeneous_expand(const PowerSeriesND& F);

// One-variable slice g(t) = F(t w) = sum_m P_m(w) t^m, truncated at `order`.
// For w on the domain boundary (gauge 1) the slice of a certified F is a
// certified self-map of the disk, which is what the homothetic checks use.
MatrixPowerSeries line_restrict(const PowerSeriesND& F,
                                const std::vector<cplx>& w, std::size_t order);

// sum_alpha ||A_alpha|| |z^alpha|: the majorant of F at the point z, the
// quantity the polydisk Bohr inequality controls. Needs every |z_j| < 1.
double polydisk_bohr_sum(const PowerSeriesND& F, const std::vector<cplx>& z);

// Gaussian vector normalized to gauge 1 (a boundary direction).
std::vector<cplx> random_direction(const CircularDomain& domain, Rng& rng);

// conj(alpha) / ||alpha||^2: the direction where the functional l attains
// |l(w)| = 1, i.e. the extremal boundary point of a functional domain.
std::vector<cplx> defining_direction(const std::vector<cplx>& alpha);

// Checks value + tail <= 1 + tol for the chosen functional on every sampled
// boundary slice of F at radius `scale`. Directions are a fixed set of
// deterministic boundary points (corners / axes / defining directions) plus
// `directions` seeded random ones. Requires a certified F with F(0) = 0.
CheckReport verify_homothetic(const PowerSeriesND& F,
                              const CircularDomain& domain,
                              FunctionalKind kind, double scale,
                              std::size_t directions, std::uint64_t seed,
                              double tol = 1e-9);

struct HomotheticWitness {
  PowerSeriesND series;          // extremal composition, truncated
  std::vector<cplx> direction;   // boundary direction probed
  double a = 0.0;                // family parameter of the composed slice
  double scale = 0.0;
  double value = 0.0;            // functional value of the slice at `scale`
};

// Composes the one-variable extremal family at parameter `a` with a defining
// functional of the domain and evaluates the resulting slice at `scale`.
// Returns the composition whether or not it exceeds 1 — callers inspect
// `value`. Requires a functional domain whose first boundary-attaining
// defining direction exists.
HomotheticWitness compose_witness(FunctionalKind kind,
                                  const CircularDomain& domain, double scale,
                                  double a, std::size_t order = 48);

// compose_witness at the scan-optimal parameter (or at `param` when given),
// filtered: returns the composition iff its slice exceeds 1 + 1e-9 at
// `scale`, i.e. iff `scale` is demonstrably past the sharp constant.
std::optional<HomotheticWitness> sharpness_witness(
    FunctionalKind kind, const CircularDomain& domain, double scale,
    std::size_t order = 48, std::optional<double> param = std::nullopt);

}  // namespace bohrlab
