#include "bohrlab/functionals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "bohrlab/errors.hpp"

namespace bohrlab {

FunctionalKind parse_functional_kind(std::string_view name) {
  std::string low(name);
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (low == "classic") return FunctionalKind::Classic;
  if (low == "scalar-refined") return FunctionalKind::ScalarRefined;
  if (low == "g") return FunctionalKind::G;
  if (low == "g1") return FunctionalKind::G1;
  if (low == "g2") return FunctionalKind::G2;
  if (low == "h") return FunctionalKind::H;
  if (low == "h1") return FunctionalKind::H1;
  if (low == "h2") return FunctionalKind::H2;
  throw std::invalid_argument("unknown functional kind: " + std::string(name));
}

std::string_view functional_kind_name(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::Classic: return "classic";
    case FunctionalKind::ScalarRefined: return "scalar-refined";
    case FunctionalKind::G: return "G";
    case FunctionalKind::G1: return "G1";
    case FunctionalKind::G2: return "G2";
    case FunctionalKind::H: return "H";
    case FunctionalKind::H1: return "H1";
    case FunctionalKind::H2: return "H2";
  }
  return "?";
}

namespace {

bool needs_zero_at_origin(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::G:
    case FunctionalKind::G1:
    case FunctionalKind::G2:
    case FunctionalKind::H:
    case FunctionalKind::H1:
    case FunctionalKind::H2:
      return true;
    default:
      return false;
  }
}

int sup_power(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::G1:
    case FunctionalKind::H1:
      return 1;
    case FunctionalKind::G2:
    case FunctionalKind::H2:
      return 2;
    default:
      return 0;
  }
}

bool is_h_group(FunctionalKind k) {
  return k == FunctionalKind::H || k == FunctionalKind::H1 ||
         k == FunctionalKind::H2;
}

// Coefficient-norm cap c with ||A_n|| <= c for all n past the truncation,
// used by the geometric tail majorants. For f = z g with certified g and
// scalar g(0) (that is, scalar A_1) the cap is 1 - |A_1 scalar|^2; otherwise
// the certified Schur bound 1 applies.
double tail_coefficient_cap(const MatrixPowerSeries& s) {
  if (s.order >= 1) {
    if (auto a1 = scalar_part(s.coeffs[1])) return 1.0 - std::norm(*a1);
  }
  return 1.0;
}

}  // namespace

EvalResult eval_functional(FunctionalKind kind, const MatrixPowerSeries& s,
                           double r, std::size_t samples) {
  s.validate();
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("functional radius must lie in [0, 1)");

  std::vector<double> nu(s.order + 1);
  for (std::size_t n = 0; n <= s.order; ++n) nu[n] = operator_norm(s.coeffs[n]);

  const bool tails_needed = !s.exact;
  if (tails_needed && (!s.schur_certified || !s.a0_scalar))
    throw contract_error(
        "functional tail bound unavailable: series is not an exact polynomial "
        "and lacks a Schur certificate with scalar constant coefficient");

  EvalResult out;

  if (kind == FunctionalKind::Classic) {
    double lin = 0.0, rp = 1.0;
    for (std::size_t n = 0; n <= s.order; ++n, rp *= r) lin += nu[n] * rp;
    out.value = lin;
    out.tail = tails_needed ? tail_bound(s, r) : 0.0;
    out.certified_leq_one = out.value + out.tail <= 1.0;
    return out;
  }

  if (kind == FunctionalKind::ScalarRefined) {
    std::vector<double> mod(s.order + 1);
    for (std::size_t n = 0; n <= s.order; ++n) {
      const auto c = scalar_part(s.coeffs[n]);
      if (!c)
        throw contract_error(
            "scalar-refined functional requires scalar coefficients "
            "(offending index " +
            std::to_string(n) + ")");
      mod[n] = std::abs(*c);
    }
    double lin = 0.0, sq = 0.0, rp = 1.0;
    for (std::size_t n = 0; n <= s.order; ++n, rp *= r) {
      lin += mod[n] * rp;
      if (n >= 1) sq += mod[n] * mod[n] * rp * rp;
    }
    const double weight = 1.0 / (1.0 + mod[0]) + r / (1.0 - r);
    out.value = lin + weight * sq;
    if (tails_needed) {
      const double cap = 1.0 - std::norm(*s.a0_scalar);
      const double lin_tail =
          cap * std::pow(r, static_cast<double>(s.order + 1)) / (1.0 - r);
      const double sq_tail = cap * cap *
                             std::pow(r, static_cast<double>(2 * s.order + 2)) /
                             (1.0 - r * r);
      out.tail = lin_tail + weight * sq_tail;
    }
    out.certified_leq_one = out.value + out.tail <= 1.0;
    return out;
  }

  // G/H groups: hypothesis f(0) = 0.
  if (nu[0] > 1e-12)
    throw contract_error(std::string(functional_kind_name(kind)) +
                         " functional requires f(0) = 0");

  double lin = 0.0, rp = r;
  for (std::size_t n = 1; n <= s.order; ++n, rp *= r) lin += nu[n] * rp;
  const double nu1 = s.order >= 1 ? nu[1] : 0.0;

  double value, trunc_tail = 0.0;
  const double cap = tails_needed ? tail_coefficient_cap(s) : 0.0;
  const double o = static_cast<double>(s.order);
  if (!is_h_group(kind)) {
    // sum_{n>=2} nu_n^2 r^{2n-1}, weighted by 1/(1+nu_1) + r/(1-r).
    double sq = 0.0;
    double r2 = r * r * r;  // r^{2n-1} at n = 2
    for (std::size_t n = 2; n <= s.order; ++n, r2 *= r * r) sq += nu[n] * nu[n] * r2;
    const double weight = 1.0 / (1.0 + nu1) + r / (1.0 - r);
    value = lin + weight * sq;
    if (tails_needed) {
      const double lin_tail = cap * std::pow(r, o + 1.0) / (1.0 - r);
      const double sq_tail =
          cap * cap * std::pow(r, 2.0 * o + 1.0) / (1.0 - r * r);
      trunc_tail = lin_tail + weight * sq_tail;
    }
  } else {
    // sum_{n>=1} nu_n^2 r^{2n} with weight r^{-1}/(1+nu_1) + 1/(1-r); the
    // 1/r is folded into the first piece (powers r^{2n-1}) so r = 0 is finite.
    double sq = 0.0, sq_over_r = 0.0;
    double r2m1 = r;  // r^{2n-1} at n = 1
    for (std::size_t n = 1; n <= s.order; ++n, r2m1 *= r * r) {
      sq_over_r += nu[n] * nu[n] * r2m1;
      sq += nu[n] * nu[n] * r2m1 * r;
    }
    value = lin + sq_over_r / (1.0 + nu1) + sq / (1.0 - r);
    if (tails_needed) {
      const double lin_tail = cap * std::pow(r, o + 1.0) / (1.0 - r);
      const double sq_tail_over_r =
          cap * cap * std::pow(r, 2.0 * o + 1.0) / (1.0 - r * r);
      const double sq_tail =
          cap * cap * std::pow(r, 2.0 * o + 2.0) / (1.0 - r * r);
      trunc_tail =
          lin_tail + sq_tail_over_r / (1.0 + nu1) + sq_tail / (1.0 - r);
    }
  }

  const int j = sup_power(kind);
  if (j > 0) {
    const double supv = sup_norm_on_circle(s, r, samples);
    value += (j == 1) ? supv : supv * supv;
    if (tails_needed) {
      // ||f|| differs from the evaluated polynomial by at most the linear
      // tail L; for j = 2 the square differs by at most (2 + L) L since the
      // certified sup is <= 1.
      const double L = cap * std::pow(r, o + 1.0) / (1.0 - r);
      trunc_tail += (j == 1) ? L : (2.0 + L) * L;
    }
  }

  out.value = value;
  out.tail = trunc_tail;
  out.certified_leq_one = out.value + out.tail <= 1.0;
  return out;
}

double closed_form_psi(FunctionalKind kind, FamilyParam p, double r) {
  p.validate();
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("closed form radius must lie in [0, 1)");
  const double a = p.a;
  const double one_m_a2 = 1.0 - a * a;
  // Building blocks on the extremal family:
  //   linear sum  a r + (1-a^2) r^2 / (1-a r)
  //   sup norm    r (a + r) / (1 + a r)            (attained at z = -r)
  //   sq (G form) sum_{n>=2} nu_n^2 r^{2n-1} = (1-a^2)^2 r^3 / (1-a^2 r^2)
  //   sq (H form) sum_{n>=1} nu_n^2 r^{2n}
  //             = a^2 r^2 + (1-a^2)^2 r^4 / (1-a^2 r^2)
  const double mob = r * (a + r) / (1.0 + a * r);
  switch (kind) {
    case FunctionalKind::Classic:
      return a * r + one_m_a2 * r * r / (1.0 - a * r);
    case FunctionalKind::ScalarRefined: {
      const double lin = a * r + one_m_a2 * r * r / (1.0 - a * r);
      const double sq =
          a * a * r * r +
          one_m_a2 * one_m_a2 * std::pow(r, 4.0) / (1.0 - a * a * r * r);
      return lin + sq / (1.0 - r);  // weight 1/(1+0) + r/(1-r) = 1/(1-r)
    }
    case FunctionalKind::G:
      // The weighted squared sum collapses algebraically:
      // G = a r + (1-a^2) r^2 / (1-r).
      return a * r + one_m_a2 * r * r / (1.0 - r);
    case FunctionalKind::G1:
      return mob + closed_form_psi(FunctionalKind::G, p, r);
    case FunctionalKind::G2:
      return mob * mob + closed_form_psi(FunctionalKind::G, p, r);
    case FunctionalKind::H: {
      const double lin = a * r + one_m_a2 * r * r / (1.0 - a * r);
      const double sq =
          a * a * r * r +
          one_m_a2 * one_m_a2 * std::pow(r, 4.0) / (1.0 - a * a * r * r);
      // r^{-1} times the squared sum, with the division done analytically so
      // that r = 0 stays finite.
      const double sq_over_r =
          a * a * r +
          one_m_a2 * one_m_a2 * std::pow(r, 3.0) / (1.0 - a * a * r * r);
      return lin + sq_over_r / (1.0 + a) + sq / (1.0 - r);
    }
    case FunctionalKind::H1:
      return mob + closed_form_psi(FunctionalKind::H, p, r);
    case FunctionalKind::H2:
      return mob * mob + closed_form_psi(FunctionalKind::H, p, r);
  }
  throw std::logic_error("unreachable functional kind");
}

double closed_form_psi_limit(FunctionalKind kind, double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("closed form radius must lie in [0, 1)");
  switch (kind) {
    case FunctionalKind::Classic:
      return r;
    case FunctionalKind::ScalarRefined:
      return r / (1.0 - r);
    case FunctionalKind::G:
      return r;
    case FunctionalKind::G1:
      return 2.0 * r;
    case FunctionalKind::G2:
      return r * r + r;
    case FunctionalKind::H:
      return (3.0 * r - r * r) / (2.0 - 2.0 * r);
    case FunctionalKind::H1:
      return (5.0 * r - 3.0 * r * r) / (2.0 * (1.0 - r));
    case FunctionalKind::H2:
      return (3.0 * r + r * r - 2.0 * r * r * r) / (2.0 * (1.0 - r));
  }
  throw std::logic_error("unreachable functional kind");
}

}  // namespace bohrlab
