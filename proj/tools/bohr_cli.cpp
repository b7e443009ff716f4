// Command-line front end: evaluates Bohr-type functionals on series files,
// measures empirical radii, isolates sharp constants, scans for sharpness
// witnesses, sweeps inequality checks over seeded random functions, hunts
// for matrix-coefficient counterexamples, verifies homothetic-domain bounds
// in several variables, and emits reference curves as CSV.
//
// Exit codes: 0 value computed / all checks passed; 1 violation or witness
// found (report still written); 2 usage or contract error.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bohrlab/bounds.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/io.hpp"
#include "bohrlab/multidim.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/series.hpp"

namespace {

using namespace bohrlab;

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    io::write_text_file(out_path, text);
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Accepts functional kind names plus the historical aliases for the four
// tabulated polynomial roots.
FunctionalKind parse_root_name(const std::string& name) {
  const std::string low = lowercase(name);
  if (low == "lemma4") return FunctionalKind::G1;
  if (low == "lemma5") return FunctionalKind::G2;
  if (low == "lemma6") return FunctionalKind::H;
  if (low == "lemma8") return FunctionalKind::H2;
  return parse_functional_kind(low);
}

SeriesFamily parse_family(const std::string& name, FunctionalKind kind) {
  if (name.empty()) return default_family(kind);
  const std::string low = lowercase(name);
  if (low == "psi") return SeriesFamily::Psi;
  if (low == "moebius") return SeriesFamily::Moebius;
  throw std::invalid_argument("field \"family\" must be psi or moebius");
}

CircularDomain load_domain(const std::string& path, std::size_t fallback_n) {
  if (path.empty()) {
    CircularDomain d;
    d.shape = DomainShape::Polydisk;
    d.n = fallback_n;
    return d;
  }
  return io::domain_from_json_text(io::read_text_file(path), fallback_n);
}

struct Options {
  std::string series_path;
  std::string domain_path;
  std::string out_path;
  std::string functional;
  std::string name;
  std::string check;
  std::string mode = "scalar-type";
  std::string md_mode = "verify";
  std::string family;
  std::string figure;
  double r = 0.0;
  double tol = 0.0;
  double scale = -1.0;
  double param = -1.0;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t directions = 256;
  std::size_t order = 64;
  std::size_t dim = 2;
};

int run_eval(const Options& o) {
  const MatrixPowerSeries s = io::series_from_json_text(io::read_text_file(o.series_path));
  const FunctionalKind kind = parse_functional_kind(o.functional);
  const EvalResult res = eval_functional(kind, s, o.r);
  deliver(io::eval_to_json_text(kind, o.r, res), o.out_path);
  return 0;
}

int run_radius(const Options& o) {
  const FunctionalKind kind = parse_functional_kind(o.functional);
  const SeriesFamily family = parse_family(o.family, kind);
  const double tol = o.tol > 0.0 ? o.tol : 1e-4;
  const RadiusResult res =
      empirical_radius(kind, family, default_a_grid(), tol, o.order);
  deliver(io::radius_to_json_text(kind, family, res, sharp_constant(kind).value()),
          o.out_path);
  return 0;
}

int run_roots(const Options& o) {
  const FunctionalKind kind = parse_root_name(o.name);
  const SharpConstant& c = sharp_constant(kind);
  std::optional<RadiusResult> iso;
  if (c.definition != ConstantDef::Rational) {
    const double tol = o.tol > 0.0 ? o.tol : 1e-10;
    iso = isolate_root(c.poly, c.lo, c.hi, tol);
  }
  deliver(io::root_to_json_text(c, iso), o.out_path);
  return 0;
}

int run_sharpness(const Options& o) {
  const FunctionalKind kind = parse_functional_kind(o.functional);
  const auto witness = sharpness_scan(kind, o.r, default_a_grid());
  deliver(io::scan_to_json_text(kind, o.r, witness), o.out_path);
  return witness ? 1 : 0;
}

int run_lemma(const Options& o) {
  SweepOptions sw;
  sw.trials = o.trials;
  sw.seed = o.seed;
  sw.mode = parse_generator_mode(o.mode);
  sw.dim = o.dim;
  sw.order = o.order;
  sw.tol = o.tol > 0.0 ? o.tol : 1e-9;
  const CheckReport rep = sweep_check(lowercase(o.check), sw);
  deliver(io::report_to_json_text(rep), o.out_path);
  return rep.violations.empty() ? 0 : 1;
}

int run_explore(const Options& o) {
  ExploreOptions ex;
  if (o.r > 0.0) ex.r = o.r;
  ex.dim = o.dim;
  ex.order = o.order;
  if (o.tol > 0.0) ex.slack = o.tol;
  const CheckReport rep = explore_counterexamples(
      lowercase(o.check), parse_generator_mode(o.mode), o.trials, o.seed, ex);
  deliver(io::report_to_json_text(rep), o.out_path);
  return rep.violations.empty() ? 0 : 1;
}

int run_multidim(const Options& o) {
  const FunctionalKind kind = parse_functional_kind(o.functional);
  const std::string mode = lowercase(o.md_mode);
  if (mode == "verify") {
    if (o.series_path.empty())
      throw std::invalid_argument("--series is required in verify mode");
    const PowerSeriesND F =
        io::series_nd_from_json_text(io::read_text_file(o.series_path));
    const CircularDomain domain = load_domain(o.domain_path, F.n);
    const double scale = o.scale >= 0.0 ? o.scale : sharp_constant(kind).value();
    const double tol = o.tol > 0.0 ? o.tol : 1e-9;
    const CheckReport rep =
        verify_homothetic(F, domain, kind, scale, o.directions, o.seed, tol);
    deliver(io::report_to_json_text(rep), o.out_path);
    return rep.violations.empty() ? 0 : 1;
  }
  if (mode == "witness") {
    if (o.domain_path.empty())
      throw std::invalid_argument("--domain is required in witness mode");
    const CircularDomain domain = load_domain(o.domain_path, o.dim);
    const double scale = o.scale >= 0.0 ? o.scale : sharp_constant(kind).value();
    std::optional<double> param;
    if (o.param >= 0.0) param = o.param;
    const auto witness =
        sharpness_witness(kind, domain, scale, o.order, param);
    deliver(io::homothetic_witness_to_json_text(kind, scale, witness), o.out_path);
    return witness ? 1 : 0;
  }
  throw std::invalid_argument("--mode must be verify or witness");
}

int run_curves(const Options& o) {
  const Figure fig = parse_figure(lowercase(o.figure));
  const CurveTable table = emit_curve(fig, default_curve_grid());
  deliver(io::csv_text(table), o.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bohr-type inequality toolkit for matrix-valued analytic functions"};
  app.require_subcommand(1);
  Options o;
  int status = 0;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out_path, "also write the output to this file")
        ->envname("BOHRLAB_OUT");
  };
  auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", o.order, "truncation order")->envname("BOHRLAB_ORDER");
  };
  auto add_dim = [&](CLI::App* cmd) {
    cmd->add_option("--dim", o.dim, "matrix dimension")->envname("BOHRLAB_DIM");
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", o.tol, "tolerance / slack override")->envname("BOHRLAB_TOL");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "random seed")
        ->envname("BOHRLAB_SEED")
        ->required();
  };
  auto add_trials = [&](CLI::App* cmd) {
    cmd->add_option("--trials", o.trials, "number of seeded trials")
        ->envname("BOHRLAB_TRIALS");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a functional on a series file");
  eval->add_option("--series", o.series_path, "series JSON file")->required();
  eval->add_option("--functional", o.functional, "functional kind")->required();
  eval->add_option("--r", o.r, "evaluation radius in [0,1)")->required();
  add_out(eval);
  eval->callback([&] { status = run_eval(o); });

  CLI::App* radius = app.add_subcommand("radius", "empirical radius over an extremal family");
  radius->add_option("--functional", o.functional, "functional kind")->required();
  radius->add_option("--family", o.family, "psi or moebius (default: kind-specific)");
  add_tol(radius);
  add_order(radius);
  add_out(radius);
  radius->callback([&] { status = run_radius(o); });

  CLI::App* roots = app.add_subcommand("roots", "sharp constant from its defining polynomial");
  roots->add_option("--name", o.name, "kind name or tabulated alias")->required();
  add_tol(roots);
  add_out(roots);
  roots->callback([&] { status = run_roots(o); });

  CLI::App* sharp = app.add_subcommand("sharpness", "scan the extremal family at a radius");
  sharp->add_option("--functional", o.functional, "functional kind")->required();
  sharp->add_option("--r", o.r, "radius to scan")->required();
  add_out(sharp);
  sharp->callback([&] { status = run_sharpness(o); });

  CLI::App* lemma = app.add_subcommand("lemma", "sweep an inequality check over seeded functions");
  lemma->add_option("--check", o.check,
                    "schwarz-pick | growth | wiener | theorem-a")->required();
  lemma->add_option("--mode", o.mode, "generator mode")->envname("BOHRLAB_MODE");
  add_trials(lemma);
  add_seed(lemma);
  add_dim(lemma);
  add_order(lemma);
  add_tol(lemma);
  add_out(lemma);
  lemma->callback([&] { status = run_lemma(o); });

  CLI::App* explore = app.add_subcommand("explore", "search for matrix-coefficient counterexamples");
  explore->add_option("--check", o.check, "wiener | g-bound")->required();
  explore->add_option("--mode", o.mode, "generator mode")->envname("BOHRLAB_MODE");
  explore->add_option("--r", o.r, "radius for the g-bound target");
  add_trials(explore);
  add_seed(explore);
  add_dim(explore);
  add_order(explore);
  add_tol(explore);
  add_out(explore);
  explore->callback([&] { status = run_explore(o); });

  CLI::App* multi = app.add_subcommand("multidim", "homothetic-domain verification and witnesses");
  multi->add_option("--mode", o.md_mode, "verify or witness");
  multi->add_option("--functional", o.functional, "functional kind")->required();
  multi->add_option("--series", o.series_path, "multivariate series JSON file");
  multi->add_option("--domain", o.domain_path, "domain JSON file (default: polydisk)");
  multi->add_option("--scale", o.scale, "homothety factor (default: tabulated constant)");
  multi->add_option("--param", o.param, "extremal family parameter for witness mode");
  multi->add_option("--directions", o.directions, "random boundary directions")
      ->envname("BOHRLAB_DIRECTIONS");
  multi->add_option("--seed", o.seed, "random seed")->envname("BOHRLAB_SEED");
  add_dim(multi);
  add_order(multi);
  add_tol(multi);
  add_out(multi);
  multi->callback([&] { status = run_multidim(o); });

  CLI::App* curves = app.add_subcommand("curves", "emit a reference curve as CSV");
  curves->add_option("--figure", o.figure, "fig1 | fig2 | fig3")->required();
  add_out(curves);
  curves->callback([&] { status = run_curves(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
