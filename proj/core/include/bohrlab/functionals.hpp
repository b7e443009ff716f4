#pragma once

#include <string_view>

#include "bohrlab/series.hpp"

namespace bohrlab {

// The Bohr-type majorant functionals handled by the toolkit. With
// f(z) = sum A_n z^n, nu_n = ||A_n||, and |z| = r:
//
//   Classic        sum_{n>=0} nu_n r^n
//   ScalarRefined  sum_{n>=0} |a_n| r^n
//                  + (1/(1+|a_0|) + r/(1-r)) sum_{n>=1} |a_n|^2 r^{2n}
//                  (scalar coefficients only)
//   G              sum_{n>=1} nu_n r^n
//                  + (1/(1+nu_1) + r/(1-r)) sum_{n>=2} nu_n^2 r^{2n-1}
//   G1, G2         ||f(z)||^j + G,  j = 1, 2
//   H              sum_{n>=1} nu_n r^n
//                  + (r^{-1}/(1+nu_1) + 1/(1-r)) sum_{n>=1} nu_n^2 r^{2n}
//   H1, H2         ||f(z)||^j + H,  j = 1, 2
//
// The G/H groups require f(0) = 0; ||f(z)|| is read as the circle supremum
// (see sup_norm_on_circle).
enum class FunctionalKind { Classic, ScalarRefined, G, G1, G2, H, H1, H2 };

FunctionalKind parse_functional_kind(std::string_view name);  // case-insensitive
std::string_view functional_kind_name(FunctionalKind kind);

// Truncated value plus a rigorous bound on everything the truncation dropped.
struct EvalResult {
  double value = 0.0;
  double tail = 0.0;
  bool certified_leq_one = false;  // value + tail <= 1
};

// Evaluates the functional on a truncated series at radius r in [0, 1).
// The tail covers the truncated linear and squared sums (geometric majorants
// from the certified coefficient bound) and, for the ||f||^j kinds, the
// polynomial-vs-function defect of the sup-norm term. Exact polynomial inputs
// carry tail 0. Throws contract_error when a kind's hypothesis fails
// (nonzero f(0) for the G/H groups, non-scalar coefficients for
// ScalarRefined) or when a non-exact series lacks the certificate needed for
// a tail bound.
EvalResult eval_functional(FunctionalKind kind, const MatrixPowerSeries& s,
                           double r, std::size_t samples = 256);

// Exact closed-form value of the functional on the extremal family
// z (a - z)/(1 - a z) * I (no truncation). Needs a, r in [0, 1).
double closed_form_psi(FunctionalKind kind, FamilyParam a, double r);

// Limit of closed_form_psi as a -> 1; the H-group suprema over a are attained
// only in this limit, so scans evaluate it explicitly.
double closed_form_psi_limit(FunctionalKind kind, double r);

}  // namespace bohrlab
