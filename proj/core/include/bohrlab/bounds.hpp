#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab {

// One inequality failure: lhs exceeded rhs by more than the slack.
// `index` is the coefficient/grid index the inequality refers to, and
// `input` is a replayable description of the function that produced it.
struct Violation {
  std::uint64_t trial = 0;
  std::string input;
  long long index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

struct CheckReport {
  std::string name;
  std::uint64_t trials = 0;
  std::vector<Violation> violations;
  double max_slack_used = 0.0;
  std::string note;     // context the numbers alone do not convey
  std::string warning;  // set when a precondition was met only marginally
};

// Derivative bound at an interior point of certified series:
//   (1-|a|)^{n-1} ||f^(n)(a)/n!|| <= ||I - f(a)^* f(a)||^{1/2}
//                                    ||I - f(a) f(a)^*||^{1/2} / (1-|a|^2) + tol.
// Derivatives are computed exactly on the truncated polynomial by coefficient
// shift. Requires schur_certified and n <= order.
bool check_schwarz_pick(const MatrixPowerSeries& s, cplx a, std::size_t n,
                        double tol = 1e-9);

// Norm growth on circles: sup ||f|| at radius r is at most
// (||A_0|| + r)/(1 + ||A_0|| r) plus slack and the truncation tail.
// Requires schur_certified with scalar A_0.
CheckReport check_growth(const MatrixPowerSeries& s,
                         const std::vector<double>& r_grid, double tol = 1e-9);

// Wiener-type coefficient bounds for certified series with scalar A_0:
//   odd index:  ||A_{2k+1}|| <= 1 - sum_{j<=k} ||A_j||^2
//   even index: ||A_{2k}||   <= 1 - sum_{j<=k-1} ||A_j||^2
//                                - ||A_k||^2 / (1 + ||A_0||),  k >= 1.
// Violations are reported (index = coefficient index), never asserted: the
// scalar-coefficient versions always hold, the general-matrix ones do not.
CheckReport check_wiener_bounds(const MatrixPowerSeries& s, double tol = 1e-9);

// Classic majorant bound sum ||A_n|| r^n + tail <= 1 + tol, guaranteed for
// certified series with scalar A_0 whenever r <= 1/3.
bool check_classic_bohr(const MatrixPowerSeries& s, double r,
                        double tol = 1e-9);

// Seeded multi-trial driver for the checks above, merging everything into
// one report. `check` is one of "schwarz-pick", "growth", "wiener",
// "theorem-a" (alias "classic-bohr"). Trial functions come from
// random_schur_matrix with per-trial derived seeds; every violation carries
// a replayable input descriptor. schwarz-pick probes two random interior
// points at derivative orders 1..3 per trial; growth sweeps radii
// 0.1..0.9; theorem-a sweeps radii up to 1/3.
struct SweepOptions {
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  GeneratorMode mode = GeneratorMode::ScalarType;
  std::size_t dim = 2;
  std::size_t order = 64;
  double tol = 1e-9;
};
CheckReport sweep_check(const std::string& check,
                        const SweepOptions& opts = {});

// Randomized search for inputs breaking the general-matrix forms of the
// bounds above.
//   target "wiener":  the coefficient bounds (index = coefficient index);
//   target "g-bound": the refined majorant G <= 1 at radius r (index = -1).
// Generated functions vanish at the origin so both hypotheses hold. When
// include_forced is set, trial 0 is a fixed known-bad diagonal instance:
// diag(z, z^3) for "wiener", diag(z^2, z^4) for "g-bound". Deterministic
// given (seed, trials, mode); every violation carries a replayable input
// descriptor.
struct ExploreOptions {
  double r = 0.6;  // radius for "g-bound"
  std::size_t dim = 2;
  std::size_t order = 64;
  bool include_forced = true;
  double slack = 1e-9;
};
CheckReport explore_counterexamples(const std::string& target,
                                    GeneratorMode mode, std::uint64_t trials,
                                    std::uint64_t seed,
                                    const ExploreOptions& opts = {});

}  // namespace bohrlab
