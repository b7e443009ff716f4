#pragma once

#include <optional>
#include <string>

#include "bohrlab/bounds.hpp"
#include "bohrlab/multidim.hpp"
#include "bohrlab/radii.hpp"

// Text round-trips for every structure the command line reads or writes.
// Parsers throw std::invalid_argument naming the offending field; writers are
// deterministic (fixed key order, shortest round-trip numbers) so identical
// inputs produce byte-identical output.
//
// Formats:
//   matrix      [[ [re,im], ... ], ...]        row-major, square
//   series      {"dim", "order", "schur_certified", "a0_scalar": [re,im]|null,
//                "coeffs": [matrix, ...], "polynomial": bool (optional)}
//   nd series   {"n", "dim" (optional), "bounded_certified" (optional),
//                "polynomial" (optional, default true),
//                "coeffs": [{"alpha": [k1..kn], "matrix": matrix}, ...]}
//   domain      {"shape": "polydisk"|"ball"|"functional", "n" (optional),
//                "alphas": [[ [re,im], ... ], ...] (functional only)}
//
// "polynomial": true marks the coefficient list as the whole function (all
// truncation tails vanish); without it a univariate series is treated as a
// truncation and downstream tail bounds require "schur_certified": true.
namespace bohrlab::io {

ComplexMatrix matrix_from_json_text(const std::string& text);
MatrixPowerSeries series_from_json_text(const std::string& text);
PowerSeriesND series_nd_from_json_text(const std::string& text);
// fallback_n supplies the variable count when the file omits "n" and the
// shape carries no defining functionals to infer it from.
CircularDomain domain_from_json_text(const std::string& text,
                                     std::size_t fallback_n);

std::string matrix_to_json_text(const ComplexMatrix& m);
std::string series_to_json_text(const MatrixPowerSeries& s);
std::string series_nd_to_json_text(const PowerSeriesND& F);
std::string report_to_json_text(const CheckReport& report);
std::string eval_to_json_text(FunctionalKind kind, double r,
                              const EvalResult& result);
std::string radius_to_json_text(FunctionalKind kind, SeriesFamily family,
                                const RadiusResult& result, double tabulated);
std::string root_to_json_text(const SharpConstant& constant,
                              const std::optional<RadiusResult>& isolation);
std::string scan_to_json_text(FunctionalKind kind, double r,
                              const std::optional<Witness>& witness);
std::string homothetic_witness_to_json_text(
    FunctionalKind kind, double scale,
    const std::optional<HomotheticWitness>& witness);

// Header line plus one line per row; numbers carry nine significant digits.
std::string csv_text(const CurveTable& table);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bohrlab::io
