#include "bohrlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bohrlab::io {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

const ordered_json& need(const ordered_json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw std::invalid_argument(std::string("missing field \"") + field + "\"");
  return j.at(field);
}

double number_in(const ordered_json& j, const std::string& where) {
  if (!j.is_number())
    throw std::invalid_argument(where + " must be a number");
  return j.get<double>();
}

std::size_t index_in(const ordered_json& j, const char* field) {
  const ordered_json& v = need(j, field);
  if (!v.is_number_unsigned())
    throw std::invalid_argument(std::string("field \"") + field +
                                "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

cplx complex_from(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument(where + " must be a [re, im] pair");
  return {number_in(j[0], where + "[0]"), number_in(j[1], where + "[1]")};
}

ordered_json complex_to(cplx c) { return ordered_json::array({c.real(), c.imag()}); }

ComplexMatrix matrix_from(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(where + " must be a non-empty array of rows");
  const std::size_t dim = j.size();
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const ordered_json& row = j[i];
    if (!row.is_array() || row.size() != dim)
      throw std::invalid_argument(where + " row " + std::to_string(i) +
                                  " must have " + std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < dim; ++k)
      m.at(i, k) = complex_from(row[k], where + " entry (" + std::to_string(i) +
                                            "," + std::to_string(k) + ")");
  }
  return m;
}

ordered_json matrix_to(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(complex_to(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixPowerSeries series_from(const ordered_json& j) {
  MatrixPowerSeries s;
  s.dim = index_in(j, "dim");
  s.order = index_in(j, "order");
  const ordered_json& cert = need(j, "schur_certified");
  if (!cert.is_boolean())
    throw std::invalid_argument("field \"schur_certified\" must be a boolean");
  s.schur_certified = cert.get<bool>();
  const ordered_json& a0 = need(j, "a0_scalar");
  if (!a0.is_null()) s.a0_scalar = complex_from(a0, "field \"a0_scalar\"");
  if (j.contains("polynomial")) {
    const ordered_json& p = j.at("polynomial");
    if (!p.is_boolean())
      throw std::invalid_argument("field \"polynomial\" must be a boolean");
    s.exact = p.get<bool>();
  }
  const ordered_json& coeffs = need(j, "coeffs");
  if (!coeffs.is_array())
    throw std::invalid_argument("field \"coeffs\" must be an array of matrices");
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    s.coeffs.push_back(matrix_from(coeffs[n], "coefficient " + std::to_string(n)));
  s.validate();
  return s;
}

ordered_json series_to(const MatrixPowerSeries& s) {
  ordered_json j;
  j["dim"] = s.dim;
  j["order"] = s.order;
  j["schur_certified"] = s.schur_certified;
  j["a0_scalar"] = s.a0_scalar ? complex_to(*s.a0_scalar) : ordered_json(nullptr);
  if (s.exact) j["polynomial"] = true;
  ordered_json coeffs = ordered_json::array();
  for (const auto& m : s.coeffs) coeffs.push_back(matrix_to(m));
  j["coeffs"] = std::move(coeffs);
  return j;
}

PowerSeriesND series_nd_from(const ordered_json& j) {
  PowerSeriesND F;
  F.n = index_in(j, "n");
  if (F.n == 0) throw std::invalid_argument("field \"n\" must be positive");
  const ordered_json& coeffs = need(j, "coeffs");
  if (!coeffs.is_array())
    throw std::invalid_argument("field \"coeffs\" must be an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const ordered_json& entry = coeffs[i];
    const std::string where = "coefficient " + std::to_string(i);
    const ordered_json& alpha = need(entry, "alpha");
    if (!alpha.is_array() || alpha.size() != F.n)
      throw std::invalid_argument(where + ": field \"alpha\" must list " +
                                  std::to_string(F.n) + " exponents");
    std::vector<std::size_t> key(F.n);
    for (std::size_t k = 0; k < F.n; ++k) {
      if (!alpha[k].is_number_unsigned())
        throw std::invalid_argument(where + ": exponents must be nonnegative integers");
      key[k] = alpha[k].get<std::size_t>();
    }
    ComplexMatrix m = matrix_from(need(entry, "matrix"), where + " matrix");
    if (!F.coeffs.emplace(std::move(key), std::move(m)).second)
      throw std::invalid_argument(where + ": duplicate multi-index");
  }
  if (j.contains("dim"))
    F.dim = index_in(j, "dim");
  else if (!F.coeffs.empty())
    F.dim = F.coeffs.begin()->second.dim();
  if (j.contains("bounded_certified")) {
    const ordered_json& b = j.at("bounded_certified");
    if (!b.is_boolean())
      throw std::invalid_argument("field \"bounded_certified\" must be a boolean");
    F.bounded_certified = b.get<bool>();
  }
  if (j.contains("polynomial")) {
    const ordered_json& p = j.at("polynomial");
    if (!p.is_boolean())
      throw std::invalid_argument("field \"polynomial\" must be a boolean");
    F.exact = p.get<bool>();
  }
  F.validate();
  return F;
}

ordered_json series_nd_to(const PowerSeriesND& F) {
  ordered_json j;
  j["n"] = F.n;
  j["dim"] = F.dim;
  j["bounded_certified"] = F.bounded_certified;
  j["polynomial"] = F.exact;
  ordered_json coeffs = ordered_json::array();
  for (const auto& [alpha, m] : F.coeffs) {
    ordered_json entry;
    entry["alpha"] = alpha;
    entry["matrix"] = matrix_to(m);
    coeffs.push_back(std::move(entry));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

ordered_json violation_to(const Violation& v) {
  ordered_json j;
  j["trial"] = v.trial;
  j["input"] = v.input;
  j["index"] = v.index;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  j["slack"] = v.slack;
  return j;
}

ordered_json report_to(const CheckReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["trials"] = r.trials;
  j["max_slack_used"] = r.max_slack_used;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.warning.empty()) j["warning"] = r.warning;
  ordered_json vs = ordered_json::array();
  for (const auto& v : r.violations) vs.push_back(violation_to(v));
  j["violations"] = std::move(vs);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

ComplexMatrix matrix_from_json_text(const std::string& text) {
  return matrix_from(parse_text(text), "matrix");
}

MatrixPowerSeries series_from_json_text(const std::string& text) {
  return series_from(parse_text(text));
}

PowerSeriesND series_nd_from_json_text(const std::string& text) {
  return series_nd_from(parse_text(text));
}

CircularDomain domain_from_json_text(const std::string& text,
                                     std::size_t fallback_n) {
  const ordered_json j = parse_text(text);
  CircularDomain d;
  const ordered_json& shape = need(j, "shape");
  if (!shape.is_string())
    throw std::invalid_argument("field \"shape\" must be a string");
  d.shape = parse_domain_shape(shape.get<std::string>());
  if (j.contains("alphas")) {
    const ordered_json& alphas = j.at("alphas");
    if (!alphas.is_array())
      throw std::invalid_argument("field \"alphas\" must be an array");
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      const ordered_json& a = alphas[k];
      const std::string where = "functional " + std::to_string(k);
      if (!a.is_array() || a.empty())
        throw std::invalid_argument(where + " must be a non-empty array");
      std::vector<cplx> row;
      for (std::size_t c = 0; c < a.size(); ++c)
        row.push_back(complex_from(a[c], where + " component " + std::to_string(c)));
      d.alphas.push_back(std::move(row));
    }
  }
  if (j.contains("n"))
    d.n = index_in(j, "n");
  else if (!d.alphas.empty())
    d.n = d.alphas.front().size();
  else
    d.n = fallback_n;
  d.validate();
  return d;
}

std::string matrix_to_json_text(const ComplexMatrix& m) { return dump(matrix_to(m)); }

std::string series_to_json_text(const MatrixPowerSeries& s) { return dump(series_to(s)); }

std::string series_nd_to_json_text(const PowerSeriesND& F) { return dump(series_nd_to(F)); }

std::string report_to_json_text(const CheckReport& report) { return dump(report_to(report)); }

std::string eval_to_json_text(FunctionalKind kind, double r,
                              const EvalResult& result) {
  ordered_json j;
  j["kind"] = functional_kind_name(kind);
  j["r"] = r;
  j["value"] = result.value;
  j["tail"] = result.tail;
  j["certified_leq_one"] = result.certified_leq_one;
  return dump(j);
}

std::string radius_to_json_text(FunctionalKind kind, SeriesFamily family,
                                const RadiusResult& result, double tabulated) {
  ordered_json j;
  j["kind"] = functional_kind_name(kind);
  j["family"] = family == SeriesFamily::Psi ? "psi" : "moebius";
  j["lo"] = result.lo;
  j["hi"] = result.hi;
  j["mid"] = result.mid;
  j["iterations"] = result.iterations;
  j["residual"] = result.residual;
  j["tabulated"] = tabulated;
  return dump(j);
}

std::string root_to_json_text(const SharpConstant& constant,
                              const std::optional<RadiusResult>& isolation) {
  ordered_json j;
  j["kind"] = functional_kind_name(constant.kind);
  switch (constant.definition) {
    case ConstantDef::Rational: j["definition"] = "rational"; break;
    case ConstantDef::Algebraic: j["definition"] = "algebraic"; break;
    case ConstantDef::PolynomialRoot: j["definition"] = "polynomial-root"; break;
  }
  j["expression"] = constant.expression;
  j["value"] = constant.value();
  if (!constant.poly.empty() && constant.definition != ConstantDef::Rational) {
    j["poly"] = constant.poly;
    j["bracket"] = ordered_json::array({constant.lo, constant.hi});
  }
  if (isolation) {
    ordered_json iso;
    iso["lo"] = isolation->lo;
    iso["hi"] = isolation->hi;
    iso["mid"] = isolation->mid;
    iso["iterations"] = isolation->iterations;
    iso["residual"] = isolation->residual;
    j["isolation"] = std::move(iso);
  }
  return dump(j);
}

std::string scan_to_json_text(FunctionalKind kind, double r,
                              const std::optional<Witness>& witness) {
  ordered_json j;
  j["kind"] = functional_kind_name(kind);
  j["r"] = r;
  if (witness) {
    ordered_json w;
    w["a"] = witness->a;
    w["r"] = witness->r;
    w["value"] = witness->value;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return dump(j);
}

std::string homothetic_witness_to_json_text(
    FunctionalKind kind, double scale,
    const std::optional<HomotheticWitness>& witness) {
  ordered_json j;
  j["kind"] = functional_kind_name(kind);
  j["scale"] = scale;
  j["found"] = witness.has_value();
  if (witness) {
    ordered_json w;
    w["a"] = witness->a;
    w["value"] = witness->value;
    ordered_json dir = ordered_json::array();
    for (cplx c : witness->direction) dir.push_back(complex_to(c));
    w["direction"] = std::move(dir);
    w["series"] = series_nd_to(witness->series);
    j["witness"] = std::move(w);
  }
  return dump(j);
}

std::string csv_text(const CurveTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  char buf[64];
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("curve row width does not match the header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      std::snprintf(buf, sizeof buf, "%.9g", row[c]);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof())
    throw std::runtime_error("error while reading file: " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << text;
  if (!out.good()) throw std::runtime_error("error while writing file: " + path);
}

}  // namespace bohrlab::io
