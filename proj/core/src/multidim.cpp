#include "bohrlab/multidim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bohrlab/errors.hpp"
#include "bohrlab/radii.hpp"

namespace bohrlab {
namespace {

cplx ipow(cplx z, std::size_t k) {
  cplx p{1.0, 0.0};
  for (std::size_t i = 0; i < k; ++i) p *= z;
  return p;
}

std::size_t degree_of(const std::vector<std::size_t>& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), std::size_t{0});
}

cplx functional_value(const std::vector<cplx>& alpha, const std::vector<cplx>& v) {
  cplx s{0.0, 0.0};
  for (std::size_t j = 0; j < alpha.size(); ++j) s += alpha[j] * v[j];
  return s;
}

std::string index_string(std::size_t t) { return std::to_string(t); }

}  // namespace

DomainShape parse_domain_shape(std::string_view name) {
  std::string low(name);
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (low == "polydisk") return DomainShape::Polydisk;
  if (low == "ball") return DomainShape::Ball;
  if (low == "functional") return DomainShape::Functional;
  throw std::invalid_argument("unknown domain shape: " + low);
}

std::string_view domain_shape_name(DomainShape shape) {
  switch (shape) {
    case DomainShape::Polydisk: return "polydisk";
    case DomainShape::Ball: return "ball";
    case DomainShape::Functional: return "functional";
  }
  throw contract_error("unknown domain shape");
}

void CircularDomain::validate() const {
  if (n == 0) throw std::invalid_argument("domain needs at least one variable");
  if (shape == DomainShape::Functional) {
    if (alphas.empty())
      throw std::invalid_argument("functional domain needs at least one defining functional");
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      if (alphas[k].size() != n)
        throw std::invalid_argument("defining functional " + index_string(k) +
                                    " has the wrong number of components");
      double norm2 = 0.0;
      for (cplx c : alphas[k]) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
          throw std::invalid_argument("defining functional " + index_string(k) +
                                      " has a non-finite component");
        norm2 += std::norm(c);
      }
      if (norm2 == 0.0)
        throw std::invalid_argument("defining functional " + index_string(k) + " is zero");
    }
  } else if (!alphas.empty()) {
    throw std::invalid_argument("only functional domains carry defining functionals");
  }
}

double domain_gauge(const CircularDomain& domain, const std::vector<cplx>& v) {
  domain.validate();
  if (v.size() != domain.n)
    throw std::invalid_argument("direction has the wrong number of components");
  switch (domain.shape) {
    case DomainShape::Polydisk: {
      double g = 0.0;
      for (cplx c : v) g = std::max(g, std::abs(c));
      return g;
    }
    case DomainShape::Ball: {
      double s = 0.0;
      for (cplx c : v) s += std::norm(c);
      return std::sqrt(s);
    }
    case DomainShape::Functional: {
      double g = 0.0;
      for (const auto& alpha : domain.alphas)
        g = std::max(g, std::abs(functional_value(alpha, v)));
      return g;
    }
  }
  throw contract_error("unknown domain shape");
}

std::size_t PowerSeriesND::total_degree() const {
  std::size_t deg = 0;
  for (const auto& [alpha, m] : coeffs) deg = std::max(deg, degree_of(alpha));
  return deg;
}

void PowerSeriesND::validate() const {
  if (n == 0) throw std::invalid_argument("series needs at least one variable");
  if (dim == 0) throw std::invalid_argument("series needs positive matrix dimension");
  std::size_t k = 0;
  for (const auto& [alpha, m] : coeffs) {
    if (alpha.size() != n)
      throw std::invalid_argument("multi-index " + index_string(k) +
                                  " has the wrong number of components");
    if (m.dim() != dim)
      throw std::invalid_argument("coefficient " + index_string(k) +
                                  " has the wrong matrix dimension");
    m.validate_finite();
    ++k;
  }
}

ComplexMatrix eval_at(const PowerSeriesND& F, const std::vector<cplx>& z) {
  F.validate();
  if (z.size() != F.n)
    throw std::invalid_argument("evaluation point has the wrong number of components");
  ComplexMatrix sum(F.dim);
  for (const auto& [alpha, A] : F.coeffs) {
    cplx factor{1.0, 0.0};
    for (std::size_t j = 0; j < alpha.size(); ++j) factor *= ipow(z[j], alpha[j]);
    ComplexMatrix term = A;
    term *= factor;
    sum += term;
  }
  return sum;
}

std::vector<PowerSeriesND> homogeneous_expand(const PowerSeriesND& F) {
  F.validate();
  std::vector<PowerSeriesND> layers(F.total_degree() + 1);
  for (auto& layer : layers) {
    layer.n = F.n;
    layer.dim = F.dim;
    layer.bounded_certified = F.bounded_certified;
    layer.exact = F.exact;
  }
  for (const auto& [alpha, A] : F.coeffs) layers[degree_of(alpha)].coeffs.emplace(alpha, A);
  return layers;
}

MatrixPowerSeries line_restrict(const PowerSeriesND& F,
                                const std::vector<cplx>& w, std::size_t order) {
  F.validate();
  if (w.size() != F.n)
    throw std::invalid_argument("direction has the wrong number of components");
  for (cplx c : w)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("direction has a non-finite component");
  MatrixPowerSeries s;
  s.dim = F.dim;
  s.order = order;
  s.coeffs.assign(order + 1, ComplexMatrix(F.dim));
  for (const auto& [alpha, A] : F.coeffs) {
    const std::size_t m = degree_of(alpha);
    if (m > order) continue;
    cplx factor{1.0, 0.0};
    for (std::size_t j = 0; j < alpha.size(); ++j) factor *= ipow(w[j], alpha[j]);
    ComplexMatrix term = A;
    term *= factor;
    s.coeffs[m] += term;
  }
  s.schur_certified = F.bounded_certified;
  s.exact = F.exact;
  s.a0_scalar = scalar_part(s.coeffs[0]);
  s.validate();
  return s;
}

double polydisk_bohr_sum(const PowerSeriesND& F, const std::vector<cplx>& z) {
  F.validate();
  if (z.size() != F.n)
    throw std::invalid_argument("evaluation point has the wrong number of components");
  for (cplx c : z)
    if (!(std::abs(c) < 1.0))
      throw std::domain_error("every point component must have modulus below 1");
  double sum = 0.0;
  for (const auto& [alpha, A] : F.coeffs) {
    double factor = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j)
      factor *= std::pow(std::abs(z[j]), static_cast<double>(alpha[j]));
    sum += operator_norm(A) * factor;
  }
  return sum;
}

std::vector<cplx> random_direction(const CircularDomain& domain, Rng& rng) {
  domain.validate();
  for (;;) {
    std::vector<cplx> v(domain.n);
    for (auto& c : v) c = rng.gaussian();
    const double g = domain_gauge(domain, v);
    if (g <= 1e-9) continue;
    for (auto& c : v) c /= g;
    return v;
  }
}

std::vector<cplx> defining_direction(const std::vector<cplx>& alpha) {
  double norm2 = 0.0;
  for (cplx c : alpha) norm2 += std::norm(c);
  if (norm2 == 0.0) throw std::invalid_argument("defining functional is zero");
  std::vector<cplx> w(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) w[j] = std::conj(alpha[j]) / norm2;
  return w;
}

CheckReport verify_homothetic(const PowerSeriesND& F,
                              const CircularDomain& domain,
                              FunctionalKind kind, double scale,
                              std::size_t directions, std::uint64_t seed,
                              double tol) {
  F.validate();
  domain.validate();
  if (F.n != domain.n)
    throw std::invalid_argument("series and domain have different numbers of variables");
  if (!F.bounded_certified)
    throw contract_error("the homothetic check needs a boundedness certificate on the input");
  if (!(scale >= 0.0 && scale < 1.0)) throw std::domain_error("scale must lie in [0, 1)");
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  const std::vector<std::size_t> origin(F.n, 0);
  if (auto it = F.coeffs.find(origin); it != F.coeffs.end())
    if (operator_norm(it->second) > 1e-12)
      throw contract_error("the homothetic check requires a vanishing constant term");

  // Deterministic boundary directions first: axes and corners, or the
  // defining directions of a functional domain.
  std::vector<std::pair<std::string, std::vector<cplx>>> slices;
  auto push_normalized = [&](std::string name, std::vector<cplx> v) {
    const double g = domain_gauge(domain, v);
    if (g <= 1e-9) return;
    for (auto& c : v) c /= g;
    slices.emplace_back(std::move(name), std::move(v));
  };
  if (domain.shape == DomainShape::Functional) {
    for (std::size_t k = 0; k < domain.alphas.size(); ++k)
      push_normalized("forced:defining-" + index_string(k),
                      defining_direction(domain.alphas[k]));
  } else {
    std::vector<cplx> axis(F.n, cplx{0.0, 0.0});
    axis[0] = cplx{1.0, 0.0};
    push_normalized("forced:axis", std::move(axis));
    push_normalized("forced:diagonal", std::vector<cplx>(F.n, cplx{1.0, 0.0}));
  }
  const std::size_t forced = slices.size();
  for (std::size_t t = 0; t < directions; ++t) {
    Rng rng(trial_seed(seed, t));
    std::ostringstream name;
    name << "random:gaussian trial=" << t << " seed=" << trial_seed(seed, t);
    slices.emplace_back(name.str(), random_direction(domain, rng));
  }

  CheckReport report;
  report.name = std::string("homothetic:") + std::string(functional_kind_name(kind));
  report.trials = slices.size();
  report.max_slack_used = tol;
  report.note = index_string(forced) + " deterministic boundary direction(s), " +
                index_string(directions) + " random one(s)";
  const std::size_t deg = F.total_degree();
  for (std::size_t t = 0; t < slices.size(); ++t) {
    MatrixPowerSeries g = line_restrict(F, slices[t].second, deg);
    EvalResult e = eval_functional(kind, g, scale);
    const double total = e.value + e.tail;
    if (total > 1.0 + tol)
      report.violations.push_back({t, slices[t].first, 0, total, 1.0, tol});
  }
  return report;
}

HomotheticWitness compose_witness(FunctionalKind kind,
                                  const CircularDomain& domain, double scale,
                                  double a, std::size_t order) {
  domain.validate();
  if (domain.shape != DomainShape::Functional)
    throw contract_error("sharpness witnesses are constructed for functional domains");
  if (!(scale > 0.0 && scale < 1.0)) throw std::domain_error("scale must lie in (0, 1)");
  if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("family parameter must lie in [0, 1)");
  if (order < 2) throw std::invalid_argument("witness order must be at least 2");

  // A defining direction that actually lies on the boundary of the whole
  // domain (other functionals may cut it off).
  std::optional<std::pair<std::size_t, std::vector<cplx>>> chosen;
  for (std::size_t k = 0; k < domain.alphas.size(); ++k) {
    std::vector<cplx> w = defining_direction(domain.alphas[k]);
    if (domain_gauge(domain, w) <= 1.0 + 1e-12) {
      chosen = {k, std::move(w)};
      break;
    }
  }
  if (!chosen)
    throw contract_error("no defining direction reaches the domain boundary");
  const auto& alpha = domain.alphas[chosen->first];

  // Coefficients of the one-variable extremal composed with l(z): the Psi
  // family for the vanishing-at-0 kinds, the Moebius factor otherwise.
  std::vector<double> c(order + 1, 0.0);
  if (default_family(kind) == SeriesFamily::Psi) {
    c[1] = a;
    for (std::size_t k = 2; k <= order; ++k)
      c[k] = -(1.0 - a * a) * std::pow(a, static_cast<double>(k - 2));
  } else {
    c[0] = a;
    for (std::size_t k = 1; k <= order; ++k)
      c[k] = -(1.0 - a * a) * std::pow(a, static_cast<double>(k - 1));
  }

  // Powers of the linear form by repeated sparse convolution; the monomial
  // count stays polynomial in the degree so this is exact and fast.
  using ScalarPoly = std::map<std::vector<std::size_t>, cplx>;
  ScalarPoly total;
  ScalarPoly pk;
  pk.emplace(std::vector<std::size_t>(domain.n, 0), cplx{1.0, 0.0});
  if (c[0] != 0.0) total[std::vector<std::size_t>(domain.n, 0)] += c[0];
  for (std::size_t k = 1; k <= order; ++k) {
    ScalarPoly next;
    for (const auto& [beta, coeff] : pk)
      for (std::size_t j = 0; j < domain.n; ++j) {
        if (alpha[j] == cplx{0.0, 0.0}) continue;
        std::vector<std::size_t> gamma = beta;
        ++gamma[j];
        next[gamma] += coeff * alpha[j];
      }
    pk = std::move(next);
    if (c[k] == 0.0) continue;
    for (const auto& [beta, coeff] : pk) total[beta] += c[k] * coeff;
  }

  HomotheticWitness wit;
  wit.series.n = domain.n;
  wit.series.dim = 2;
  for (const auto& [beta, coeff] : total)
    wit.series.coeffs.emplace(beta, ComplexMatrix::scalar(2, coeff));
  wit.series.bounded_certified = true;  // composition of an inner function with l
  wit.series.exact = false;             // truncated at `order`
  wit.direction = chosen->second;
  wit.a = a;
  wit.scale = scale;

  MatrixPowerSeries g = line_restrict(wit.series, wit.direction, order);
  EvalResult e = eval_functional(kind, g, scale);
  wit.value = e.value;
  return wit;
}

std::optional<HomotheticWitness> sharpness_witness(FunctionalKind kind,
                                                   const CircularDomain& domain,
                                                   double scale,
                                                   std::size_t order,
                                                   std::optional<double> param) {
  double a;
  if (param) {
    a = *param;
  } else {
    const auto scan = sharpness_scan(kind, scale, default_a_grid());
    if (!scan) return std::nullopt;
    a = scan->a;
  }
  HomotheticWitness wit = compose_witness(kind, domain, scale, a, order);
  if (wit.value <= 1.0 + 1e-9) return std::nullopt;
  return wit;
}

}  // namespace bohrlab
