#include <cmath>
#include <complex>
#include <stdexcept>

#include "bohrlab/bounds.hpp"
#include "bohrlab/errors.hpp"
#include "doctest.h"

using namespace bohrlab;

namespace {

// Exact polynomial with a boundedness certificate asserted by the caller.
// Used to exercise honest violation reporting: the coefficients respect the
// coefficient cap, but the asserted certificate is false.
MatrixPowerSeries asserted(const std::vector<cplx>& coeffs) {
  MatrixPowerSeries s = scalar_embed(coeffs);
  s.schur_certified = true;
  return s;
}

MatrixPowerSeries diag_z_z3() {
  MatrixPowerSeries s;
  s.dim = 2;
  s.order = 3;
  s.coeffs.assign(4, ComplexMatrix(2));
  s.coeffs[1].at(0, 0) = 1.0;
  s.coeffs[3].at(1, 1) = 1.0;
  s.schur_certified = true;
  s.a0_scalar = cplx{};
  s.exact = true;
  return s;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("schwarz-pick derivative bound holds with equality on the moebius family") {
    const MatrixPowerSeries m = mobius_family(FamilyParam{0.6}, 64);
    for (cplx a : {cplx(0.3, 0.0), cplx(-0.2, 0.4), cplx(0.0, 0.0)}) {
      // Holds with slack +1e-10 and fails with slack -1e-10: the two sides
      // agree to within 1e-10 (first derivative of a disk automorphism).
      CHECK(check_schwarz_pick(m, a, 1, 1e-10));
      CHECK_FALSE(check_schwarz_pick(m, a, 1, -1e-10));
    }
    // Higher orders hold strictly.
    CHECK(check_schwarz_pick(m, cplx(0.3, 0.1), 2));
    CHECK(check_schwarz_pick(m, cplx(0.3, 0.1), 3));
  }

  TEST_CASE("schwarz-pick flags a falsely asserted certificate") {
    // f = 0.9 z + 0.9 z^2 is no self-map: at a = 1/2 the derivative bound
    // gives lhs 1.8 against rhs (1 - 0.675^2)/(1 - 0.25) < 1.
    const MatrixPowerSeries s = asserted({cplx(0.0, 0.0), cplx(0.9, 0.0), cplx(0.9, 0.0)});
    CHECK_FALSE(check_schwarz_pick(s, cplx(0.5, 0.0), 1));
  }

  TEST_CASE("schwarz-pick input contracts") {
    MatrixPowerSeries uncertified = scalar_embed({cplx(0.0, 0.0), cplx(0.5, 0.0)});
    CHECK_THROWS_AS(check_schwarz_pick(uncertified, cplx(0.2, 0.0), 1), contract_error);
    const MatrixPowerSeries m = mobius_family(FamilyParam{0.5}, 8);
    CHECK_THROWS_AS(check_schwarz_pick(m, cplx(1.0, 0.0), 1), std::domain_error);
    CHECK_THROWS_AS(check_schwarz_pick(m, cplx(0.2, 0.0), 9), contract_error);
  }

  TEST_CASE("growth bound holds on the psi family and reports honest violations") {
    const MatrixPowerSeries s = psi_family(FamilyParam{0.5}, 64);
    const CheckReport ok = check_growth(s, {0.3, 0.6, 0.9});
    CHECK(ok.violations.empty());
    CHECK(ok.name == "growth");

    // f = 0.99 z + 0.9 z^3 exceeds (0 + r)/(1 + 0) = r once 0.9 r^2 > 0.01,
    // i.e. for every r past ~0.105.
    const MatrixPowerSeries bad =
        asserted({cplx(0.0, 0.0), cplx(0.99, 0.0), cplx(0.0, 0.0), cplx(0.9, 0.0)});
    const CheckReport rep = check_growth(bad, {0.05, 0.9});
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].index == 1);  // grid position of r = 0.9
    CHECK(rep.violations[0].lhs ==
          doctest::Approx(0.99 * 0.9 + 0.9 * 0.729).epsilon(1e-9));
    CHECK(rep.violations[0].rhs == doctest::Approx(0.9).epsilon(1e-12));
  }

  TEST_CASE("growth equality case: sup of the moebius slice is (a + r)/(1 + a r)") {
    const MatrixPowerSeries m = mobius_family(FamilyParam{0.6}, 64);
    for (double r : {0.3, 0.7}) {
      const double expect = (0.6 + r) / (1.0 + 0.6 * r);
      CHECK(sup_norm_on_circle(m, r) == doctest::Approx(expect).epsilon(1e-10));
    }
    CHECK(check_growth(m, {0.3, 0.7}).violations.empty());
  }

  TEST_CASE("wiener coefficient bounds: equality on moebius, zero violations") {
    const MatrixPowerSeries m = mobius_family(FamilyParam{0.6}, 64);
    const CheckReport rep = check_wiener_bounds(m);
    CHECK(rep.violations.empty());
    // k = 0 odd bound is tight: ||A_1|| = 1 - ||A_0||^2 exactly.
    const double nu1 = operator_norm(m.coeffs[1]);
    CHECK(nu1 == doctest::Approx(1.0 - 0.36).epsilon(1e-12));
  }

  TEST_CASE("wiener bounds break for diag(z, z^3) at index 3") {
    const CheckReport rep = check_wiener_bounds(diag_z_z3());
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].index == 3);
    CHECK(rep.violations[0].lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.violations[0].rhs == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("classic bohr check passes at r <= 1/3 and fails past it on moebius") {
    const MatrixPowerSeries m = mobius_family(FamilyParam{0.5}, 64);
    CHECK(check_classic_bohr(m, 1.0 / 3.0));
    CHECK(check_classic_bohr(m, 0.2));
    CHECK_FALSE(check_classic_bohr(m, 0.6));
  }

  TEST_CASE("sweeps over seeded scalar-type functions produce no violations") {
    SweepOptions opts;
    opts.trials = 25;
    opts.seed = 2024;
    opts.order = 48;
    for (const char* check : {"schwarz-pick", "growth", "wiener", "theorem-a"}) {
      const CheckReport rep = sweep_check(check, opts);
      CHECK(rep.trials == 25);
      CHECK(rep.violations.empty());
      CHECK(rep.name == std::string("sweep:") + check);
      CHECK(rep.note.find("scalar-type") != std::string::npos);
    }
    // "classic-bohr" is an accepted alias with the same canonical name.
    CHECK(sweep_check("classic-bohr", opts).name == "sweep:theorem-a");
    CHECK_THROWS_AS(sweep_check("bogus", opts), std::invalid_argument);
  }

  TEST_CASE("matrix-valued generator modes: guaranteed bounds hold, the rest "
            "report honestly") {
    SweepOptions opts;
    opts.trials = 10;
    opts.seed = 5;
    opts.order = 32;
    opts.mode = GeneratorMode::DiagonalBlaschke;
    // The derivative bound is a theorem for any certified matrix function.
    CHECK(sweep_check("schwarz-pick", opts).violations.empty());
    // Growth and coefficient checks need a scalar constant term, which this
    // mode does not generically provide.
    CHECK_THROWS_AS(sweep_check("growth", opts), contract_error);
    CHECK_THROWS_AS(sweep_check("wiener", opts), contract_error);

    opts.mode = GeneratorMode::MoebiusConjugated;  // scalar constant term
    CHECK(sweep_check("schwarz-pick", opts).violations.empty());
    CHECK(sweep_check("theorem-a", opts).violations.empty());
    // Coefficient bounds are only a theorem for scalar coefficients; genuinely
    // matrix-valued functions break them, and the sweep must say so.
    CHECK_FALSE(sweep_check("wiener", opts).violations.empty());
  }

  TEST_CASE("exploration surfaces the forced wiener counterexample") {
    const CheckReport rep =
        explore_counterexamples("wiener", GeneratorMode::ScalarType, 3, 11);
    CHECK(rep.trials == 4);  // forced instance + 3 random ones
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].trial == 0);
    CHECK(rep.violations[0].input == "forced:diag(z,z^3)");
    CHECK(rep.violations[0].index == 3);
    CHECK(rep.violations[0].lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.violations[0].rhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.note.find("scalar") != std::string::npos);
    CHECK(rep.note.find("matrix") != std::string::npos);
  }

  TEST_CASE("exploration surfaces the forced refined-majorant counterexample") {
    const CheckReport rep =
        explore_counterexamples("g-bound", GeneratorMode::ScalarType, 3, 11);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].trial == 0);
    CHECK(rep.violations[0].input == "forced:diag(z^2,z^4)");
    CHECK(rep.violations[0].index == -1);
    // Hand value: r^2 + r^4 + (1 + r/(1-r)) (r^3 + r^7) at r = 3/5.
    const double r = 0.6;
    const double hand = r * r + std::pow(r, 4) +
                        (1.0 + r / (1.0 - r)) * (std::pow(r, 3) + std::pow(r, 7));
    CHECK(rep.violations[0].lhs == doctest::Approx(hand).epsilon(1e-12));
    CHECK(rep.violations[0].rhs == 1.0);
  }

  TEST_CASE("exploration contracts and determinism") {
    CHECK_THROWS_AS(
        explore_counterexamples("bogus", GeneratorMode::ScalarType, 1, 0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        explore_counterexamples("g-bound", GeneratorMode::MoebiusConjugated, 1, 0),
        contract_error);
    const CheckReport a =
        explore_counterexamples("wiener", GeneratorMode::ScalarType, 5, 99);
    const CheckReport b =
        explore_counterexamples("wiener", GeneratorMode::ScalarType, 5, 99);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
      CHECK(a.violations[i].input == b.violations[i].input);
      CHECK(a.violations[i].lhs == b.violations[i].lhs);
    }
  }
}
