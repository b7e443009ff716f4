#include <cmath>
#include <complex>
#include <stdexcept>

#include "bohrlab/errors.hpp"
#include "bohrlab/functionals.hpp"
#include "doctest.h"

using namespace bohrlab;

namespace {

// diag(z^2, z^4) as an exact polynomial with unit-norm coefficients.
MatrixPowerSeries diag_z2_z4() {
  MatrixPowerSeries s;
  s.dim = 2;
  s.order = 4;
  s.coeffs.assign(5, ComplexMatrix(2));
  s.coeffs[2].at(0, 0) = 1.0;
  s.coeffs[4].at(1, 1) = 1.0;
  s.schur_certified = true;
  s.a0_scalar = cplx{};
  s.exact = true;
  return s;
}

}  // namespace

TEST_SUITE("functionals") {
  TEST_CASE("kind names parse case-insensitively and round-trip") {
    CHECK(parse_functional_kind("classic") == FunctionalKind::Classic);
    CHECK(parse_functional_kind("Scalar-Refined") == FunctionalKind::ScalarRefined);
    CHECK(parse_functional_kind("g") == FunctionalKind::G);
    CHECK(parse_functional_kind("G1") == FunctionalKind::G1);
    CHECK(parse_functional_kind("g2") == FunctionalKind::G2);
    CHECK(parse_functional_kind("H") == FunctionalKind::H);
    CHECK(parse_functional_kind("h1") == FunctionalKind::H1);
    CHECK(parse_functional_kind("h2") == FunctionalKind::H2);
    for (FunctionalKind k : {FunctionalKind::Classic, FunctionalKind::ScalarRefined,
                             FunctionalKind::G, FunctionalKind::G1, FunctionalKind::G2,
                             FunctionalKind::H, FunctionalKind::H1, FunctionalKind::H2})
      CHECK(parse_functional_kind(functional_kind_name(k)) == k);
    CHECK_THROWS_AS(parse_functional_kind("g3"), std::invalid_argument);
  }

  TEST_CASE("G on the a = 0 slice at r = 1/2 is exactly 1/2") {
    // f(z) = -z^2 I: linear sum r^2, squared sum with weight (1 + r/(1-r)).
    // At a = 0, r = 1/2: 1/4 + 2 * (1/8) = 1/2.
    const MatrixPowerSeries s = psi_family(FamilyParam{0.0}, 64);
    const EvalResult e = eval_functional(FunctionalKind::G, s, 0.5);
    CHECK(e.value + e.tail == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(closed_form_psi(FunctionalKind::G, FamilyParam{0.0}, 0.5) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e.certified_leq_one);
  }

  TEST_CASE("refined scalar majorant of f = -z equals 1 at r = 1/2") {
    const MatrixPowerSeries s = scalar_embed({cplx(0.0, 0.0), cplx(-1.0, 0.0)});
    const EvalResult e = eval_functional(FunctionalKind::ScalarRefined, s, 0.5);
    CHECK(e.tail == 0.0);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("G on diag(z^2, z^4) at r = 3/5 matches the finite hand sum") {
    // nu_2 = nu_4 = 1: r^2 + r^4 + (1 + r/(1-r)) (r^3 + r^7).
    const double r = 0.6;
    const double hand =
        r * r + r * r * r * r +
        (1.0 + r / (1.0 - r)) * (r * r * r + std::pow(r, 7));
    const EvalResult e = eval_functional(FunctionalKind::G, diag_z2_z4(), r);
    CHECK(e.tail == 0.0);
    CHECK(e.value == doctest::Approx(hand).epsilon(1e-12));
    CHECK(e.value == doctest::Approx(1.099584).epsilon(1e-6));
    CHECK_FALSE(e.certified_leq_one);
  }

  TEST_CASE("closed forms match truncated evaluation across kinds") {
    const FamilyParam p{0.3};
    const MatrixPowerSeries s = psi_family(p, 64);
    const double r = 0.4;
    for (FunctionalKind k : {FunctionalKind::G, FunctionalKind::G1, FunctionalKind::G2,
                             FunctionalKind::H, FunctionalKind::H1, FunctionalKind::H2}) {
      const EvalResult e = eval_functional(k, s, r);
      const double cf = closed_form_psi(k, p, r);
      CHECK(std::abs(e.value - cf) <= e.tail + 1e-8);
    }
  }

  TEST_CASE("spot closed-form values at a = 1/2, r = 1/2") {
    const FamilyParam p{0.5};
    // lin = 1/2, sup = 2/5, G = 1/4 + 3/8 = 5/8.
    CHECK(closed_form_psi(FunctionalKind::G, p, 0.5) == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(closed_form_psi(FunctionalKind::G1, p, 0.5) == doctest::Approx(1.025).epsilon(1e-15));
    CHECK(closed_form_psi(FunctionalKind::G2, p, 0.5) ==
          doctest::Approx(0.16 + 0.625).epsilon(1e-15));
    // H = lin + sq/r / (1+a) + sq / (1-r) with sq/r = 1/5, sq = 1/10.
    CHECK(closed_form_psi(FunctionalKind::H, p, 0.5) ==
          doctest::Approx(0.5 + 0.2 / 1.5 + 0.2).epsilon(1e-14));
    CHECK(closed_form_psi(FunctionalKind::H1, p, 0.5) ==
          doctest::Approx(0.4 + 0.5 + 0.2 / 1.5 + 0.2).epsilon(1e-14));
    CHECK(closed_form_psi(FunctionalKind::H2, p, 0.5) ==
          doctest::Approx(0.16 + 0.5 + 0.2 / 1.5 + 0.2).epsilon(1e-14));
    // Moebius-based kinds on the psi closed form are rejected by eval
    // contracts, but the classic closed form is still defined on psi inputs.
  }

  TEST_CASE("limits as a -> 1 reproduce the rational expressions") {
    CHECK(closed_form_psi_limit(FunctionalKind::G, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(closed_form_psi_limit(FunctionalKind::G1, 0.3) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(closed_form_psi_limit(FunctionalKind::G2, 0.25) ==
          doctest::Approx(0.25 * 0.25 + 0.25).epsilon(1e-15));
    const double r = 0.45;
    CHECK(closed_form_psi_limit(FunctionalKind::H, r) ==
          doctest::Approx((3.0 * r - r * r) / (2.0 - 2.0 * r)).epsilon(1e-15));
    CHECK(closed_form_psi_limit(FunctionalKind::H, 0.45) ==
          doctest::Approx(1.043181818181818).epsilon(1e-12));
    CHECK(closed_form_psi_limit(FunctionalKind::H1, 1.0 / 3.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(closed_form_psi_limit(FunctionalKind::H2, 0.4) ==
          doctest::Approx((3.0 * 0.4 + 0.16 - 2.0 * 0.064) / (2.0 * 0.6)).epsilon(1e-14));
    // The closed form approaches the limit.
    CHECK(closed_form_psi(FunctionalKind::H, FamilyParam{1.0 - 1e-9}, r) ==
          doctest::Approx(closed_form_psi_limit(FunctionalKind::H, r)).epsilon(1e-7));
  }

  TEST_CASE("classic majorant on the moebius family") {
    const MatrixPowerSeries m = mobius_family(FamilyParam{0.5}, 64);
    // a + (1-a^2) r / (1 - a r) at r = 1/3: 0.5 + 0.25/(5/6) = 0.8.
    const EvalResult e = eval_functional(FunctionalKind::Classic, m, 1.0 / 3.0);
    CHECK(e.value + e.tail == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(e.certified_leq_one);
  }

  TEST_CASE("hypothesis contracts: G/H need f(0) = 0, ScalarRefined needs scalar coefficients") {
    const MatrixPowerSeries m = mobius_family(FamilyParam{0.5}, 16);
    CHECK_THROWS_AS(eval_functional(FunctionalKind::G, m, 0.5), contract_error);
    CHECK_THROWS_AS(eval_functional(FunctionalKind::H, m, 0.5), contract_error);
    MatrixPowerSeries nonscalar;
    nonscalar.dim = 2;
    nonscalar.order = 1;
    nonscalar.coeffs.assign(2, ComplexMatrix(2));
    nonscalar.coeffs[1].at(0, 0) = 0.3;
    nonscalar.coeffs[1].at(1, 1) = 0.7;
    nonscalar.exact = true;
    nonscalar.a0_scalar = cplx{};
    CHECK_THROWS_AS(eval_functional(FunctionalKind::ScalarRefined, nonscalar, 0.5),
                    contract_error);
    // Uncertified truncation: no tail bound available.
    MatrixPowerSeries trunc = psi_family(FamilyParam{0.5}, 16);
    trunc.schur_certified = false;
    CHECK_THROWS_AS(eval_functional(FunctionalKind::G, trunc, 0.5), contract_error);
  }

  TEST_CASE("radius domain is [0, 1)") {
    const MatrixPowerSeries s = psi_family(FamilyParam{0.5}, 16);
    CHECK_THROWS_AS(eval_functional(FunctionalKind::G, s, 1.0), std::domain_error);
    CHECK_THROWS_AS(eval_functional(FunctionalKind::G, s, -0.1), std::domain_error);
    CHECK_THROWS_AS(closed_form_psi(FunctionalKind::G, FamilyParam{0.5}, 1.0),
                    std::domain_error);
    for (FunctionalKind k : {FunctionalKind::G, FunctionalKind::H, FunctionalKind::H2}) {
      const EvalResult e = eval_functional(k, s, 0.0);
      CHECK(e.value == 0.0);  // H-group weights stay finite at r = 0
      CHECK(e.tail == 0.0);
    }
  }

  TEST_CASE("values are nondecreasing in r") {
    const MatrixPowerSeries s = psi_family(FamilyParam{0.4}, 48);
    for (FunctionalKind k : {FunctionalKind::G, FunctionalKind::G1, FunctionalKind::H,
                             FunctionalKind::H2}) {
      double prev = -1.0;
      for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6}) {
        const double v = eval_functional(k, s, r).value;
        CHECK(v >= prev - 1e-12);
        prev = v;
      }
    }
  }

  TEST_CASE("values are invariant under unitary conjugation of the coefficients") {
    MatrixPowerSeries s = psi_family(FamilyParam{0.35}, 32);
    // Perturb into a genuinely non-scalar certified series: rotate each
    // coefficient by fixed unitaries U, V (norms are invariant).
    const double c = std::cos(0.7), d = std::sin(0.7);
    ComplexMatrix u(2), v(2);
    u.at(0, 0) = c;
    u.at(0, 1) = cplx(0.0, d);
    u.at(1, 0) = cplx(0.0, d);
    u.at(1, 1) = c;
    v.at(0, 0) = cplx(0.6, 0.8);
    v.at(1, 1) = cplx(-0.8, 0.6);
    MatrixPowerSeries t = s;
    for (std::size_t n = 0; n <= t.order; ++n) t.coeffs[n] = u * t.coeffs[n] * v;
    t.a0_scalar = cplx{};  // A_0 = 0 stays zero under conjugation
    for (FunctionalKind k : {FunctionalKind::G, FunctionalKind::G1, FunctionalKind::H}) {
      const double a = eval_functional(k, s, 0.45).value;
      const double b = eval_functional(k, t, 0.45).value;
      CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
  }
}
