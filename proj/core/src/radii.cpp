#include "bohrlab/radii.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "bohrlab/errors.hpp"

namespace bohrlab {
namespace {

double polyval(const std::vector<double>& ascending, double x) {
  double v = 0.0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) v = v * x + *it;
  return v;
}

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr double kParamCap = 1.0 - 1e-12;       // open-boundary stand-in for a = 1

// Golden-section maximization of a unimodal-enough objective on [lo, hi].
// Returns the best value seen; *arg receives the matching abscissa.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  std::size_t steps, double* arg) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  double best = f1, best_x = x1;
  if (f2 > best) best = f2, best_x = x2;
  for (std::size_t i = 0; i < steps; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
      if (f2 > best) best = f2, best_x = x2;
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
      if (f1 > best) best = f1, best_x = x1;
    }
  }
  if (arg != nullptr) *arg = best_x;
  return best;
}

// Grid sweep plus golden-section refinement around the best grid cell.
double grid_max(const std::function<double(double)>& f,
                const std::vector<double>& grid, std::size_t refine_steps,
                double* arg) {
  if (grid.empty()) throw std::invalid_argument("parameter grid is empty");
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double v = f(grid[i]);
    if (v > best) best = v, best_i = i;
  }
  double best_x = grid[best_i];
  double lo = best_i > 0 ? grid[best_i - 1] : std::max(0.0, grid[0] - (grid.size() > 1 ? grid[1] - grid[0] : 0.01));
  double hi = best_i + 1 < grid.size() ? grid[best_i + 1] : kParamCap;
  hi = std::min(hi, kParamCap);
  double rx = best_x;
  double rv = golden_max(f, lo, hi, refine_steps, &rx);
  if (rv > best) best = rv, best_x = rx;
  if (arg != nullptr) *arg = best_x;
  return best;
}

// Closed forms on the Moebius family (a - z)/(1 - a z), the extremal inputs
// for the kinds whose hypotheses allow f(0) != 0.
double closed_form_moebius(FunctionalKind kind, double a, double r) {
  const double lin = a + (1.0 - a * a) * r / (1.0 - a * r);
  if (kind == FunctionalKind::Classic) return lin;
  if (kind == FunctionalKind::ScalarRefined) {
    const double sq = (1.0 - a * a) * (1.0 - a * a) * r * r / (1.0 - a * a * r * r);
    return lin + (1.0 / (1.0 + a) + r / (1.0 - r)) * sq;
  }
  throw contract_error("closed_form_moebius supports the classic and scalar-refined kinds only");
}

double closed_form_moebius_limit(FunctionalKind kind, double /*r*/) {
  // lin -> 1 and the squared sum -> 0 as a -> 1 for both supported kinds.
  if (kind == FunctionalKind::Classic || kind == FunctionalKind::ScalarRefined) return 1.0;
  throw contract_error("closed_form_moebius supports the classic and scalar-refined kinds only");
}

double family_closed_form(FunctionalKind kind, SeriesFamily family, double a, double r) {
  if (family == SeriesFamily::Psi) return closed_form_psi(kind, FamilyParam{a}, r);
  return closed_form_moebius(kind, a, r);
}

double family_closed_form_limit(FunctionalKind kind, SeriesFamily family, double r) {
  if (family == SeriesFamily::Psi) return closed_form_psi_limit(kind, r);
  return closed_form_moebius_limit(kind, r);
}

// Truncated-series value + tail for one family member: the quantity the
// empirical radius search certifies against 1.
double family_member_total(FunctionalKind kind, SeriesFamily family, double a,
                           double r, std::size_t order) {
  MatrixPowerSeries s = family == SeriesFamily::Psi
                            ? psi_family(FamilyParam{a}, order)
                            : mobius_family(FamilyParam{a}, order);
  EvalResult e = eval_functional(kind, s, r);
  return e.value + e.tail;
}

}  // namespace

double SharpConstant::value() const {
  switch (definition) {
    case ConstantDef::Rational:
      if (poly.size() != 2 || poly[1] == 0.0)
        throw contract_error("rational constant needs {numerator, denominator}");
      return poly[0] / poly[1];
    case ConstantDef::Algebraic:
    case ConstantDef::PolynomialRoot:
      return isolate_root(poly, lo, hi, 1e-13).mid;
  }
  throw contract_error("unknown constant definition");
}

const std::vector<SharpConstant>& sharp_constant_table() {
  static const std::vector<SharpConstant> table = {
      {FunctionalKind::Classic, ConstantDef::Rational, "1/3", {1.0, 3.0}},
      {FunctionalKind::ScalarRefined, ConstantDef::Rational, "1/3", {1.0, 3.0}},
      {FunctionalKind::G, ConstantDef::Rational, "3/5", {3.0, 5.0}},
      {FunctionalKind::G1, ConstantDef::PolynomialRoot,
       "root of 44r^4 - 68r^3 - 121r^2 + 22r + 23 in (0.4, 0.6)",
       {23.0, 22.0, -121.0, -68.0, 44.0}, 0.4, 0.6},
      {FunctionalKind::G2, ConstantDef::Algebraic, "(sqrt(5) - 1)/2",
       {-1.0, 1.0, 1.0}, 0.0, 1.0},
      {FunctionalKind::H, ConstantDef::Algebraic, "(5 - sqrt(17))/2",
       {-2.0, 5.0, -1.0}, 0.0, 1.0},
      {FunctionalKind::H1, ConstantDef::Rational, "1/3", {1.0, 3.0}},
      {FunctionalKind::H2, ConstantDef::PolynomialRoot,
       "root of 2r^3 - r^2 - 5r + 2 in (0.3, 0.5)",
       {2.0, -5.0, -1.0, 2.0}, 0.3, 0.5},
  };
  return table;
}

const SharpConstant& sharp_constant(FunctionalKind kind) {
  for (const auto& c : sharp_constant_table())
    if (c.kind == kind) return c;
  throw contract_error("no tabulated constant for this functional kind");
}

RadiusResult isolate_root(const std::vector<double>& ascending_poly, double lo,
                          double hi, double tol) {
  if (ascending_poly.empty()) throw std::invalid_argument("polynomial has no coefficients");
  for (double c : ascending_poly)
    if (!std::isfinite(c)) throw std::invalid_argument("polynomial coefficient is not finite");
  if (!(lo < hi)) throw std::invalid_argument("bracket interval is empty");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  double flo = polyval(ascending_poly, lo);
  double fhi = polyval(ascending_poly, hi);
  if (!(flo * fhi < 0.0))
    throw std::invalid_argument("bracket does not straddle a sign change");
  RadiusResult res;
  std::size_t it = 0;
  while (hi - lo > tol && it < 200) {
    double mid = 0.5 * (lo + hi);
    double fmid = polyval(ascending_poly, mid);
    if (fmid == 0.0) {
      lo = hi = mid;
      ++it;
      break;
    }
    if (flo * fmid < 0.0)
      hi = mid, fhi = fmid;
    else
      lo = mid, flo = fmid;
    ++it;
  }
  res.lo = lo;
  res.hi = hi;
  res.mid = 0.5 * (lo + hi);
  res.iterations = it;
  res.residual = polyval(ascending_poly, res.mid);
  return res;
}

SeriesFamily default_family(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::Classic:
    case FunctionalKind::ScalarRefined:
      return SeriesFamily::Moebius;
    default:
      return SeriesFamily::Psi;
  }
}

std::vector<double> default_a_grid() {
  std::vector<double> g;
  g.reserve(99);
  for (int i = 1; i <= 99; ++i) g.push_back(i / 100.0);
  return g;
}

RadiusResult empirical_radius(FunctionalKind kind, SeriesFamily family,
                              const std::vector<double>& a_grid, double tol,
                              std::size_t order) {
  if (a_grid.empty()) throw std::invalid_argument("parameter grid is empty");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  auto family_max = [&](double r) {
    return grid_max([&](double a) { return family_member_total(kind, family, a, r, order); },
                    a_grid, 40, nullptr);
  };
  double lo = 0.0, hi = 0.999;
  if (family_max(lo) > 1.0)
    throw contract_error("family already exceeds the bound at r = 0");
  if (family_max(hi) <= 1.0)
    throw contract_error("family stays within the bound over the whole search range");
  RadiusResult res;
  std::size_t it = 0;
  while (hi - lo > tol && it < 200) {
    double mid = 0.5 * (lo + hi);
    if (family_max(mid) <= 1.0)
      lo = mid;
    else
      hi = mid;
    ++it;
  }
  res.lo = lo;
  res.hi = hi;
  res.mid = 0.5 * (lo + hi);
  res.iterations = it;
  res.residual = family_max(res.mid) - 1.0;
  return res;
}

std::optional<Witness> sharpness_scan(FunctionalKind kind, double r,
                                      const std::vector<double>& a_grid,
                                      std::size_t refine_steps) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radius must lie in [0, 1)");
  const SeriesFamily family = default_family(kind);
  double best_a = 0.0;
  double best = grid_max([&](double a) { return family_closed_form(kind, family, a, r); },
                         a_grid, refine_steps, &best_a);
  const double limit = family_closed_form_limit(kind, family, r);
  if (limit > best) {
    best = limit;
    best_a = kParamCap;
  }
  if (best > 1.0 + 1e-9) return Witness{best_a, r, best};
  return std::nullopt;
}

Figure parse_figure(const std::string& name) {
  if (name == "fig1") return Figure::Fig1;
  if (name == "fig2") return Figure::Fig2;
  if (name == "fig3") return Figure::Fig3;
  throw std::invalid_argument("unknown figure name: " + name);
}

std::vector<double> default_curve_grid() {
  std::vector<double> g;
  g.reserve(999);
  for (int i = 1; i <= 999; ++i) g.push_back(i / 1000.0);
  return g;
}

CurveTable emit_curve(Figure figure, const std::vector<double>& r_grid) {
  CurveTable t;
  for (double r : r_grid)
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("curve grid must lie in (0, 1)");
  switch (figure) {
    case Figure::Fig1:
      // The two crossing indicators whose positive roots are the H-group
      // constants (sqrt(5)-1)/2 and (5-sqrt(17))/2.
      t.columns = {"r", "phi0", "phi1"};
      for (double r : r_grid)
        t.rows.push_back({r, r * r + r - 1.0, -r * r + 5.0 * r - 2.0});
      break;
    case Figure::Fig2: {
      // Sharpness indicator for the ||f|| + G functional: the sign of
      // g6(a1(r), r) with g6(a, r) = r(a+r)(1-r) + (a^2 r^2 - 1)(1-r)
      // + (1-a^2)(1+ar) r^2, evaluated at the stationary parameter
      // a1 = (-r + sqrt(4r^2 - 3r + 3)) / (3r).
      t.columns = {"r", "value"};
      for (double r : r_grid) {
        const double a1 = (-r + std::sqrt(4.0 * r * r - 3.0 * r + 3.0)) / (3.0 * r);
        const double g6 = r * (a1 + r) * (1.0 - r) + (a1 * a1 * r * r - 1.0) * (1.0 - r) +
                          (1.0 - a1 * a1) * (1.0 + a1 * r) * r * r;
        t.rows.push_back({r, g6});
      }
      break;
    }
    case Figure::Fig3:
      // Quartic whose (0.4, 0.6) root is the ||f|| + G sharpness constant.
      t.columns = {"r", "value"};
      for (double r : r_grid)
        t.rows.push_back({r, polyval({23.0, 22.0, -121.0, -68.0, 44.0}, r)});
      break;
  }
  return t;
}

}  // namespace bohrlab
