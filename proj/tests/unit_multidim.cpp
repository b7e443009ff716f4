#include <cmath>
#include <complex>
#include <stdexcept>

#include "bohrlab/errors.hpp"
#include "bohrlab/multidim.hpp"
#include "doctest.h"

using namespace bohrlab;

namespace {

// f(z) = z_1 z_2 * I, a certified exact polynomial on the bidisk (and on the
// ball, where |z_1 z_2| <= 1/2).
PowerSeriesND nd_z1z2(std::size_t dim = 2) {
  PowerSeriesND F;
  F.n = 2;
  F.dim = dim;
  F.coeffs[{1, 1}] = ComplexMatrix::identity(dim);
  F.bounded_certified = true;
  F.exact = true;
  return F;
}

// f(z) = (z_1 + z_2)/2 as a scalar (1x1) polynomial.
PowerSeriesND nd_mean() {
  PowerSeriesND F;
  F.n = 2;
  F.dim = 1;
  F.coeffs[{1, 0}] = ComplexMatrix::scalar(1, 0.5);
  F.coeffs[{0, 1}] = ComplexMatrix::scalar(1, 0.5);
  F.bounded_certified = true;
  F.exact = true;
  return F;
}

CircularDomain polydisk(std::size_t n) {
  CircularDomain d;
  d.shape = DomainShape::Polydisk;
  d.n = n;
  return d;
}

CircularDomain ball(std::size_t n) {
  CircularDomain d;
  d.shape = DomainShape::Ball;
  d.n = n;
  return d;
}

CircularDomain functional_domain(std::vector<cplx> alpha) {
  CircularDomain d;
  d.shape = DomainShape::Functional;
  d.n = alpha.size();
  d.alphas = {std::move(alpha)};
  return d;
}

}  // namespace

TEST_SUITE("multidim") {
  TEST_CASE("domain shapes parse and validate") {
    CHECK(parse_domain_shape("polydisk") == DomainShape::Polydisk);
    CHECK(parse_domain_shape("ball") == DomainShape::Ball);
    CHECK(parse_domain_shape("functional") == DomainShape::Functional);
    CHECK_THROWS_AS(parse_domain_shape("simplex"), std::invalid_argument);
    for (DomainShape s : {DomainShape::Polydisk, DomainShape::Ball, DomainShape::Functional})
      CHECK(parse_domain_shape(domain_shape_name(s)) == s);

    CHECK_NOTHROW(polydisk(3).validate());
    CHECK_NOTHROW(functional_domain({cplx(0.6, 0.0), cplx(0.8, 0.0)}).validate());
    CircularDomain empty_functional;
    empty_functional.shape = DomainShape::Functional;
    empty_functional.n = 2;
    CHECK_THROWS_AS(empty_functional.validate(), std::invalid_argument);
    CircularDomain poly_with_alphas = polydisk(2);
    poly_with_alphas.alphas = {{cplx(1.0, 0.0), cplx(0.0, 0.0)}};
    CHECK_THROWS_AS(poly_with_alphas.validate(), std::invalid_argument);
    CHECK_THROWS_AS(functional_domain({cplx(0.0, 0.0), cplx(0.0, 0.0)}).validate(),
                    std::invalid_argument);
  }

  TEST_CASE("gauges of the three shapes") {
    const std::vector<cplx> v{cplx(0.5, 0.0), cplx(0.0, -0.8)};
    CHECK(domain_gauge(polydisk(2), v) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(domain_gauge(ball(2), v) ==
          doctest::Approx(std::sqrt(0.25 + 0.64)).epsilon(1e-15));
    CHECK(domain_gauge(functional_domain({cplx(1.0, 0.0), cplx(1.0, 0.0)}),
                       {cplx(0.5, 0.0), cplx(0.25, 0.0)}) ==
          doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(domain_gauge(polydisk(2), {cplx(0.5, 0.0)}), std::invalid_argument);
  }

  TEST_CASE("defining directions reach the functional boundary") {
    const auto w = defining_direction({cplx(2.0, 0.0), cplx(0.0, 0.0)});
    CHECK(std::abs(w[0] - cplx(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(w[1]) == 0.0);
    const auto u = defining_direction({cplx(1.0, 0.0), cplx(0.0, 1.0)});
    // l(u) = sum alpha_j u_j = 1 exactly.
    const cplx l = cplx(1.0, 0.0) * u[0] + cplx(0.0, 1.0) * u[1];
    CHECK(std::abs(l - cplx(1.0, 0.0)) < 1e-15);
    CHECK(domain_gauge(functional_domain({cplx(1.0, 0.0), cplx(0.0, 1.0)}), u) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(defining_direction({cplx(0.0, 0.0)}), std::invalid_argument);
  }

  TEST_CASE("evaluation and degree of sparse multivariate series") {
    const PowerSeriesND F = nd_z1z2();
    CHECK(F.total_degree() == 2);
    const ComplexMatrix v = eval_at(F, {cplx(0.3, 0.0), cplx(0.0, 0.5)});
    CHECK(std::abs(v.at(0, 0) - cplx(0.0, 0.15)) < 1e-15);
    CHECK(std::abs(v.at(0, 1)) == 0.0);
    CHECK_THROWS_AS(eval_at(F, {cplx(0.3, 0.0)}), std::invalid_argument);
    PowerSeriesND bad = nd_z1z2();
    bad.coeffs[{0, 1, 2}] = ComplexMatrix::identity(2);  // wrong index length
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }

  TEST_CASE("homogeneous expansion splits by total degree and sums back") {
    PowerSeriesND F;
    F.n = 2;
    F.dim = 1;
    F.coeffs[{1, 0}] = ComplexMatrix::scalar(1, 0.3);
    F.coeffs[{1, 1}] = ComplexMatrix::scalar(1, 0.4);
    F.coeffs[{0, 0}] = ComplexMatrix::scalar(1, 0.1);
    F.bounded_certified = true;
    const auto layers = homogeneous_expand(F);
    REQUIRE(layers.size() == 3);
    CHECK(layers[0].coeffs.size() == 1);
    CHECK(layers[1].coeffs.size() == 1);
    CHECK(layers[2].coeffs.size() == 1);
    CHECK(layers[1].bounded_certified);
    const std::vector<cplx> z{cplx(0.2, 0.1), cplx(-0.3, 0.0)};
    cplx sum = 0.0;
    for (const auto& layer : layers) sum += eval_at(layer, z).at(0, 0);
    CHECK(std::abs(sum - eval_at(F, z).at(0, 0)) < 1e-15);
  }

  TEST_CASE("line restriction of z_1 z_2 I along the bidisk corner") {
    const MatrixPowerSeries g = line_restrict(nd_z1z2(), {cplx(1.0, 0.0), cplx(1.0, 0.0)}, 2);
    CHECK(g.order == 2);
    CHECK(g.exact);
    CHECK(g.schur_certified);
    CHECK(g.coeffs[0].max_abs_entry() == 0.0);
    CHECK(g.coeffs[1].max_abs_entry() == 0.0);
    CHECK(std::abs(g.coeffs[2].at(0, 0) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(g.coeffs[2].at(1, 1) - cplx(1.0, 0.0)) < 1e-15);
  }

  TEST_CASE("line restriction is degree-homogeneous in the direction") {
    PowerSeriesND F = nd_z1z2();
    F.bounded_certified = false;  // scaled directions leave the certified class
    const MatrixPowerSeries g1 = line_restrict(F, {cplx(1.0, 0.0), cplx(1.0, 0.0)}, 2);
    const MatrixPowerSeries g2 = line_restrict(F, {cplx(2.0, 0.0), cplx(2.0, 0.0)}, 2);
    CHECK(std::abs(g2.coeffs[2].at(0, 0) - 4.0 * g1.coeffs[2].at(0, 0)) < 1e-15);
    // Slice evaluation agrees with direct evaluation along the segment.
    const cplx t(0.25, 0.1);
    const ComplexMatrix direct = eval_at(F, {t, t});
    const ComplexMatrix sliced = eval_at(g1, t);
    CHECK(std::abs(direct.at(0, 0) - sliced.at(0, 0)) < 1e-14);
  }

  TEST_CASE("polydisk bohr sums match hand values") {
    CHECK(polydisk_bohr_sum(nd_z1z2(), {cplx(0.6, 0.0), cplx(0.6, 0.0)}) ==
          doctest::Approx(0.36).epsilon(1e-15));
    for (double r : {0.25, 0.5, 0.9})
      CHECK(polydisk_bohr_sum(nd_mean(), {cplx(r, 0.0), cplx(r, 0.0)}) ==
            doctest::Approx(r).epsilon(1e-15));
    // Moduli matter, not phases.
    CHECK(polydisk_bohr_sum(nd_z1z2(), {cplx(0.0, 0.6), cplx(-0.6, 0.0)}) ==
          doctest::Approx(0.36).epsilon(1e-15));
    CHECK_THROWS_AS(polydisk_bohr_sum(nd_z1z2(), {cplx(1.0, 0.0), cplx(0.5, 0.0)}),
                    std::domain_error);
  }

  TEST_CASE("random directions land on the boundary, deterministically") {
    for (const CircularDomain& d :
         {polydisk(3), ball(3), functional_domain({cplx(0.6, 0.0), cplx(0.8, 0.0), cplx(0.0, 0.3)})}) {
      Rng rng(77);
      const auto w = random_direction(d, rng);
      REQUIRE(w.size() == 3);
      CHECK(domain_gauge(d, w) == doctest::Approx(1.0).epsilon(1e-12));
      Rng rng2(77);
      const auto w2 = random_direction(d, rng2);
      for (std::size_t j = 0; j < 3; ++j) CHECK(w[j] == w2[j]);
    }
  }

  TEST_CASE("the corner slice of z_1 z_2 I has refined majorant 9/10 at scale 3/5") {
    const MatrixPowerSeries g = line_restrict(nd_z1z2(), {cplx(1.0, 0.0), cplx(1.0, 0.0)}, 2);
    const EvalResult e = eval_functional(FunctionalKind::G, g, 0.6);
    CHECK(e.tail == 0.0);
    // r^2 + (1 + r/(1-r)) r^3 = 0.36 + 2.5 * 0.216.
    CHECK(e.value == doctest::Approx(0.9).epsilon(1e-12));
  }

  TEST_CASE("homothetic verification passes on the bidisk, tridisk, and ball") {
    const CheckReport bidisk_g =
        verify_homothetic(nd_z1z2(), polydisk(2), FunctionalKind::G, 0.6, 32, 3);
    CHECK(bidisk_g.violations.empty());
    CHECK(bidisk_g.name == "homothetic:G");
    CHECK(bidisk_g.trials == 34);  // 2 deterministic + 32 random directions

    const double h_scale = 0.5 * (5.0 - std::sqrt(17.0));
    CHECK(verify_homothetic(nd_z1z2(), polydisk(2), FunctionalKind::H, h_scale, 16, 3)
              .violations.empty());
    CHECK(verify_homothetic(nd_z1z2(), ball(2), FunctionalKind::G, 0.6, 16, 3)
              .violations.empty());

    PowerSeriesND tri;
    tri.n = 3;
    tri.dim = 2;
    tri.coeffs[{1, 1, 1}] = ComplexMatrix::identity(2);
    tri.bounded_certified = true;
    tri.exact = true;
    CHECK(verify_homothetic(tri, polydisk(3), FunctionalKind::G1, 0.47, 16, 3)
              .violations.empty());
  }

  TEST_CASE("homothetic verification contracts") {
    PowerSeriesND with_constant = nd_z1z2();
    with_constant.coeffs[{0, 0}] = ComplexMatrix::scalar(2, 0.1);
    CHECK_THROWS_AS(
        verify_homothetic(with_constant, polydisk(2), FunctionalKind::G, 0.5, 4, 0),
        contract_error);
    PowerSeriesND uncertified = nd_z1z2();
    uncertified.bounded_certified = false;
    CHECK_THROWS_AS(
        verify_homothetic(uncertified, polydisk(2), FunctionalKind::G, 0.5, 4, 0),
        contract_error);
    CHECK_THROWS_AS(verify_homothetic(nd_z1z2(), polydisk(2), FunctionalKind::G, 1.0, 4, 0),
                    std::domain_error);
    CHECK_THROWS_AS(verify_homothetic(nd_z1z2(), polydisk(3), FunctionalKind::G, 0.5, 4, 0),
                    std::invalid_argument);
  }

  TEST_CASE("composed witness reproduces the extremal slice coefficients") {
    const CircularDomain d = functional_domain({cplx(0.6, 0.0), cplx(0.8, 0.0)});
    const HomotheticWitness w = compose_witness(FunctionalKind::G, d, 0.62, 0.6, 24);
    CHECK(w.a == doctest::Approx(0.6));
    CHECK(w.scale == doctest::Approx(0.62));
    // Slice along the defining direction is z (a - z)/(1 - a z) at a = 3/5:
    // B_1 = a I, B_k = -(1 - a^2) a^{k-2} I.
    const MatrixPowerSeries g = line_restrict(w.series, w.direction, 6);
    CHECK(std::abs(g.coeffs[1].at(0, 0) - cplx(0.6, 0.0)) < 1e-12);
    for (std::size_t k = 2; k <= 5; ++k)
      CHECK(std::abs(g.coeffs[k].at(0, 0) -
                     cplx(-0.64 * std::pow(0.6, double(k) - 2.0), 0.0)) < 1e-12);
    // Value matches the closed form a s + (1 - a^2) s^2/(1 - s) at s = 0.62.
    const double s = 0.62;
    const double closed = 0.6 * s + 0.64 * s * s / (1.0 - s);
    CHECK(w.value == doctest::Approx(closed).epsilon(1e-9));
  }

  TEST_CASE("witness filtering straddles the honest crossing of the G slice") {
    const CircularDomain d = functional_domain({cplx(0.6, 0.0), cplx(0.8, 0.0)});
    // At parameter 3/5 the slice value crosses 1 between scales 0.61 and 0.62.
    CHECK_FALSE(sharpness_witness(FunctionalKind::G, d, 0.61, 48, 0.6).has_value());
    const auto hit = sharpness_witness(FunctionalKind::G, d, 0.62, 48, 0.6);
    REQUIRE(hit.has_value());
    CHECK(hit->value > 1.0);
    CHECK(hit->value == doctest::Approx(0.6 * 0.62 + 0.64 * 0.62 * 0.62 / 0.38).epsilon(1e-9));
    // Without a pinned parameter the scan optimum already exceeds 1 at 0.61.
    const auto scan = sharpness_witness(FunctionalKind::G, d, 0.61, 48);
    REQUIRE(scan.has_value());
    CHECK(scan->value == doctest::Approx(1.0516025641025641).epsilon(1e-6));
  }

  TEST_CASE("witness composition contracts") {
    const CircularDomain d = functional_domain({cplx(0.6, 0.0), cplx(0.8, 0.0)});
    CHECK_THROWS_AS(compose_witness(FunctionalKind::G, polydisk(2), 0.5, 0.5, 8),
                    contract_error);
    CHECK_THROWS_AS(compose_witness(FunctionalKind::G, d, 0.0, 0.5, 8), std::domain_error);
    CHECK_THROWS_AS(compose_witness(FunctionalKind::G, d, 0.5, 1.0, 8), std::domain_error);
    CHECK_THROWS_AS(compose_witness(FunctionalKind::G, d, 0.5, 0.5, 1),
                    std::invalid_argument);
  }
}
