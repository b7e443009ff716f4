#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bohrlab/functionals.hpp"

namespace bohrlab {

// How a sharp constant is defined. Printed decimals are always recomputed
// from the definition, never stored.
enum class ConstantDef { Rational, Algebraic, PolynomialRoot };

struct SharpConstant {
  FunctionalKind kind;
  ConstantDef definition;
  std::string expression;   // human-readable defining expression
  std::vector<double> poly; // ascending coefficients; empty for Rational
  double lo = 0.0, hi = 0.0;  // bracketing interval for the poly root
  double value() const;     // recomputed on demand
};

// The stated best-possible radius for each kind over the one-parameter
// extremal family (Classic over the Moebius family). Note: the G2 entry
// records the stated constant (golden ratio minus one); the extremal scan
// and the empirical search measurably contradict it — see the regression
// tests — so treat the stated value as an input claim, not a verified fact.
const std::vector<SharpConstant>& sharp_constant_table();
const SharpConstant& sharp_constant(FunctionalKind kind);

struct RadiusResult {
  double lo = 0.0;
  double hi = 0.0;
  double mid = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;  // defining function evaluated at mid
};

// Bisection for a root of the ascending-coefficient polynomial inside
// [lo, hi]; requires a sign change across the bracket.
RadiusResult isolate_root(const std::vector<double>& ascending_poly, double lo,
                          double hi, double tol = 1e-10);

// Which one-parameter family the empirical search maximizes over.
enum class SeriesFamily { Psi, Moebius };
SeriesFamily default_family(FunctionalKind kind);  // Classic/ScalarRefined -> Moebius

std::vector<double> default_a_grid();  // {0.01, 0.02, ..., 0.99}

// Largest r (to within tol) such that the truncated functional stays <= 1
// over the whole family: bisection on r of the predicate
// "max over the a-grid, with golden-section refinement, of value + tail <= 1".
// Valid because every functional here is nondecreasing in r.
RadiusResult empirical_radius(FunctionalKind kind, SeriesFamily family,
                              const std::vector<double>& a_grid,
                              double tol = 1e-4, std::size_t order = 64);

struct Witness {
  double a = 0.0;
  double r = 0.0;
  double value = 0.0;
};

// Maximizes the exact closed form over the a-grid (plus golden-section
// refinement around the best cell and the explicit a -> 1 limit value) and
// returns a witness iff the maximum exceeds 1 + 1e-9. The family scanned is
// default_family(kind). Witnesses coming from the boundary limit report
// parameter 1 - 1e-12.
std::optional<Witness> sharpness_scan(FunctionalKind kind, double r,
                                      const std::vector<double>& a_grid,
                                      std::size_t refine_steps = 40);

// Reference curves: fig1 emits the two quadratics r^2 + r - 1 and
// -r^2 + 5r - 2 (columns r,phi0,phi1); fig2 the stationary-parameter value of
// the G1 sharpness polynomial (see source); fig3 the quartic
// 44r^4 - 68r^3 - 121r^2 + 22r + 23.
enum class Figure { Fig1, Fig2, Fig3 };
Figure parse_figure(const std::string& name);

struct CurveTable {
  std::vector<std::string> columns;       // first column is always "r"
  std::vector<std::vector<double>> rows;  // each row matches `columns`
};
CurveTable emit_curve(Figure figure, const std::vector<double>& r_grid);

std::vector<double> default_curve_grid();  // {0.001, ..., 0.999} step 1e-3

}  // namespace bohrlab
