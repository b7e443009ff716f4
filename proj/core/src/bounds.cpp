#include "bohrlab/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "bohrlab/errors.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/rng.hpp"

namespace bohrlab {

namespace {

// n-th Taylor coefficient of f at a, i.e. f^(n)(a)/n!, computed exactly on
// the truncated polynomial: sum_{m>=n} C(m, n) A_m a^{m-n}.
ComplexMatrix taylor_coefficient_at(const MatrixPowerSeries& s, cplx a,
                                    std::size_t n) {
  ComplexMatrix acc(s.dim);
  double binom = 1.0;  // C(m, n), updated as m advances
  cplx apow = 1.0;     // a^{m-n}
  for (std::size_t m = n; m <= s.order; ++m) {
    acc += (binom * apow) * s.coeffs[m];
    binom *= static_cast<double>(m + 1) / static_cast<double>(m + 1 - n);
    apow *= a;
  }
  return acc;
}

// Both sides of the derivative bound; assumes the caller checked the
// preconditions.
std::pair<double, double> schwarz_pick_sides(const MatrixPowerSeries& s,
                                             cplx a, std::size_t n) {
  const double abs_a = std::abs(a);
  const double lhs = std::pow(1.0 - abs_a, static_cast<double>(n) - 1.0) *
                     operator_norm(taylor_coefficient_at(s, a, n));
  const ComplexMatrix fa = eval_at(s, a);
  const ComplexMatrix eye = ComplexMatrix::identity(s.dim);
  const double left = operator_norm(eye - adjoint(fa) * fa);
  const double right = operator_norm(eye - fa * adjoint(fa));
  // ||(I - f^* f)^{1/2}|| = ||I - f^* f||^{1/2} for positive semidefinite
  // arguments, so no matrix square root is needed here. Clamp tiny negative
  // roundoff before the square roots.
  const double rhs = std::sqrt(std::max(0.0, left)) *
                     std::sqrt(std::max(0.0, right)) /
                     (1.0 - abs_a * abs_a);
  return {lhs, rhs};
}

}  // namespace

bool check_schwarz_pick(const MatrixPowerSeries& s, cplx a, std::size_t n,
                        double tol) {
  s.validate();
  if (!s.schur_certified)
    throw contract_error("derivative bound check requires a certified series");
  if (n == 0 || n > s.order)
    throw contract_error("derivative order must satisfy 1 <= n <= order");
  if (!(std::abs(a) < 1.0))
    throw std::domain_error("evaluation point must satisfy |a| < 1");
  const auto [lhs, rhs] = schwarz_pick_sides(s, a, n);
  return lhs <= rhs + tol;
}

CheckReport check_growth(const MatrixPowerSeries& s,
                         const std::vector<double>& r_grid, double tol) {
  s.validate();
  if (!s.schur_certified || !s.a0_scalar)
    throw contract_error(
        "growth check requires a certified series with scalar A_0");
  CheckReport rep;
  rep.name = "growth";
  rep.trials = 1;
  rep.max_slack_used = tol;
  const double a0 = std::abs(*s.a0_scalar);
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    const double lhs = sup_norm_on_circle(s, r, 256);
    const double allowance = s.exact ? 0.0 : tail_bound(s, r);
    const double rhs = (a0 + r) / (1.0 + a0 * r) + allowance;
    if (lhs > rhs + tol)
      rep.violations.push_back({0, "", static_cast<long long>(i), lhs, rhs, tol});
  }
  return rep;
}

CheckReport check_wiener_bounds(const MatrixPowerSeries& s, double tol) {
  s.validate();
  if (!s.a0_scalar)
    throw contract_error("coefficient bound check requires scalar A_0");
  CheckReport rep;
  rep.name = "wiener";
  rep.trials = 1;
  rep.max_slack_used = tol;
  std::vector<double> nu(s.order + 1);
  for (std::size_t n = 0; n <= s.order; ++n) nu[n] = operator_norm(s.coeffs[n]);
  const double a0 = std::abs(*s.a0_scalar);
  // Odd indices 2k+1.
  for (std::size_t k = 0; 2 * k + 1 <= s.order; ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j <= k; ++j) sum += nu[j] * nu[j];
    const double lhs = nu[2 * k + 1];
    const double rhs = 1.0 - sum;
    if (lhs > rhs + tol)
      rep.violations.push_back(
          {0, "", static_cast<long long>(2 * k + 1), lhs, rhs, tol});
  }
  // Even indices 2k, k >= 1.
  for (std::size_t k = 1; 2 * k <= s.order; ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 <= k; ++j) sum += nu[j] * nu[j];
    const double lhs = nu[2 * k];
    const double rhs = 1.0 - sum - nu[k] * nu[k] / (1.0 + a0);
    if (lhs > rhs + tol)
      rep.violations.push_back(
          {0, "", static_cast<long long>(2 * k), lhs, rhs, tol});
  }
  return rep;
}

bool check_classic_bohr(const MatrixPowerSeries& s, double r, double tol) {
  s.validate();
  if (!s.schur_certified || !s.a0_scalar)
    throw contract_error(
        "classic majorant check requires a certified series with scalar A_0");
  const EvalResult res = eval_functional(FunctionalKind::Classic, s, r);
  return res.value + res.tail <= 1.0 + tol;
}

CheckReport sweep_check(const std::string& check, const SweepOptions& opts) {
  enum class Which { SchwarzPick, Growth, Wiener, ClassicBohr };
  Which which;
  std::string canonical;
  if (check == "schwarz-pick") {
    which = Which::SchwarzPick;
    canonical = "schwarz-pick";
  } else if (check == "growth") {
    which = Which::Growth;
    canonical = "growth";
  } else if (check == "wiener") {
    which = Which::Wiener;
    canonical = "wiener";
  } else if (check == "theorem-a" || check == "classic-bohr") {
    which = Which::ClassicBohr;
    canonical = "theorem-a";
  } else {
    throw std::invalid_argument("unknown check: " + check);
  }

  CheckReport rep;
  rep.name = "sweep:" + canonical;
  rep.trials = opts.trials;
  rep.max_slack_used = opts.tol;
  rep.note = "mode=" + std::string(generator_mode_name(opts.mode)) +
             " dim=" + std::to_string(opts.dim) +
             " order=" + std::to_string(opts.order);

  std::vector<double> growth_grid;
  for (int i = 1; i <= 9; ++i) growth_grid.push_back(i / 10.0);
  std::vector<double> classic_grid;
  for (int i = 1; i <= 6; ++i) classic_grid.push_back(i / 20.0);
  classic_grid.push_back(1.0 / 3.0);

  for (std::uint64_t t = 0; t < opts.trials; ++t) {
    const std::uint64_t seed_t = trial_seed(opts.seed, t);
    const MatrixPowerSeries s =
        random_schur_matrix(opts.dim, opts.order, opts.mode, seed_t);
    const std::string descriptor =
        "mode=" + std::string(generator_mode_name(opts.mode)) +
        " seed=" + std::to_string(seed_t) + " dim=" + std::to_string(opts.dim) +
        " order=" + std::to_string(opts.order);
    switch (which) {
      case Which::SchwarzPick: {
        Rng probe(trial_seed(seed_t, 0x5eedULL));
        for (int i = 0; i < 2; ++i) {
          const cplx a = probe.in_disk(0.7);
          for (std::size_t n = 1; n <= 3; ++n) {
            const auto [lhs, rhs] = schwarz_pick_sides(s, a, n);
            if (lhs > rhs + opts.tol) {
              char where[80];
              std::snprintf(where, sizeof where, " a=(%.17g,%.17g)", a.real(),
                            a.imag());
              rep.violations.push_back({t, descriptor + where,
                                        static_cast<long long>(n), lhs, rhs,
                                        opts.tol});
            }
          }
        }
        break;
      }
      case Which::Growth: {
        CheckReport one = check_growth(s, growth_grid, opts.tol);
        for (Violation v : one.violations) {
          v.trial = t;
          v.input = descriptor;
          rep.violations.push_back(std::move(v));
        }
        break;
      }
      case Which::Wiener: {
        CheckReport one = check_wiener_bounds(s, opts.tol);
        for (Violation v : one.violations) {
          v.trial = t;
          v.input = descriptor;
          rep.violations.push_back(std::move(v));
        }
        break;
      }
      case Which::ClassicBohr: {
        for (std::size_t i = 0; i < classic_grid.size(); ++i) {
          const EvalResult res =
              eval_functional(FunctionalKind::Classic, s, classic_grid[i]);
          const double total = res.value + res.tail;
          if (total > 1.0 + opts.tol)
            rep.violations.push_back({t, descriptor,
                                      static_cast<long long>(i), total, 1.0,
                                      opts.tol});
        }
        break;
      }
    }
  }
  return rep;
}

CheckReport explore_counterexamples(const std::string& target,
                                    GeneratorMode mode, std::uint64_t trials,
                                    std::uint64_t seed,
                                    const ExploreOptions& opts) {
  const bool wiener_target = target == "wiener";
  const bool g_target = target == "g-bound";
  if (!wiener_target && !g_target)
    throw std::invalid_argument("unknown exploration target: " + target +
                                " (expected \"wiener\" or \"g-bound\")");
  if (g_target && mode == GeneratorMode::MoebiusConjugated)
    throw contract_error(
        "g-bound exploration needs f(0) = 0; the moebius-conjugated mode has "
        "a nonzero constant term");

  CheckReport rep;
  rep.name = "explore-" + target;
  rep.note =
      "violations below involve genuinely matrix-valued coefficients; the "
      "scalar-coefficient form of this bound is not contradicted";

  GeneratorOptions gen;
  gen.zero_at_origin = true;  // keeps A_0 = 0 so both hypotheses hold

  auto account = [&](std::uint64_t trial, const std::string& descriptor,
                     const MatrixPowerSeries& s) {
    if (wiener_target) {
      CheckReport one = check_wiener_bounds(s, opts.slack);
      for (Violation v : one.violations) {
        v.trial = trial;
        v.input = descriptor;
        rep.violations.push_back(v);
      }
    } else {
      const EvalResult res = eval_functional(FunctionalKind::G, s, opts.r);
      if (res.value > 1.0 + res.tail + opts.slack)
        rep.violations.push_back(
            {trial, descriptor, -1, res.value, 1.0, opts.slack});
    }
  };

  std::uint64_t trial = 0;
  if (opts.include_forced) {
    // Fixed diagonal instances known to break the general-matrix statements.
    // Kept at their natural polynomial degree so every reported entry is a
    // live coefficient rather than a trailing zero.
    MatrixPowerSeries forced;
    forced.dim = 2;
    forced.schur_certified = true;
    forced.a0_scalar = cplx{};
    forced.exact = true;
    if (wiener_target) {
      // diag(z, z^3): odd bound at coefficient 3 gives lhs 1, rhs 0.
      forced.order = 3;
      forced.coeffs.assign(4, ComplexMatrix(2));
      forced.coeffs[1].at(0, 0) = 1.0;
      forced.coeffs[3].at(1, 1) = 1.0;
      account(trial++, "forced:diag(z,z^3)", forced);
    } else {
      // diag(z^2, z^4): refined majorant exceeds 1 at r = 3/5.
      forced.order = 4;
      forced.coeffs.assign(5, ComplexMatrix(2));
      forced.coeffs[2].at(0, 0) = 1.0;
      forced.coeffs[4].at(1, 1) = 1.0;
      account(trial++, "forced:diag(z^2,z^4)", forced);
    }
  }

  for (std::uint64_t t = 0; t < trials; ++t, ++trial) {
    const std::uint64_t ts = trial_seed(seed, t);
    const MatrixPowerSeries s =
        random_schur_matrix(opts.dim, opts.order, mode, ts, gen);
    const std::string descriptor = "mode=" +
                                   std::string(generator_mode_name(mode)) +
                                   " seed=" + std::to_string(ts) +
                                   " dim=" + std::to_string(opts.dim) +
                                   " order=" + std::to_string(opts.order) +
                                   " zero-at-origin=1";
    account(trial, descriptor, s);
  }
  rep.trials = trial;
  rep.max_slack_used = opts.slack;
  return rep;
}

}  // namespace bohrlab
