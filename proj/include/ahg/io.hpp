#pragma once

// Matrix JSON, CSV number formatting, grid specs and sampled functions.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ahg/cmatrix.hpp"
#include "ahg/oracle.hpp"

namespace ahg {

/// {"n": int, "re": [[...]], "im": [[...]]}; "im" is optional.
CMatrix parse_matrix_json(std::string_view text);
CMatrix read_matrix_file(const std::string& path);
std::string matrix_to_json(const CMatrix& m);

/// Shortest representation that reads back to the same double.
std::string format_double(double x);
double parse_double(std::string_view text);

/// "min:max:count", count ≥ 2.
struct Axis {
  double min = 0.0, max = 0.0;
  int count = 2;
  double at(int i) const;
};
Axis parse_axis(std::string_view text);
/// One spec per axis; a single spec is repeated to n axes.
std::vector<Axis> parse_grid(const std::vector<std::string>& specs, std::size_t n);
std::size_t grid_size(const std::vector<Axis>& axes);
/// Row-major point i (last axis fastest).
RVector grid_point(const std::vector<Axis>& axes, std::size_t i);

/// Samples on a regular grid read from CSV rows (x1..xn, re, im), evaluated by
/// multilinear interpolation and zero outside the grid.
class GridSamples {
 public:
  static GridSamples from_csv(std::istream& in);
  static GridSamples from_file(const std::string& path);

  std::size_t dim() const noexcept { return axes_.size(); }
  cdouble operator()(const CVector& x) const;
  const std::vector<std::vector<double>>& axes() const noexcept { return axes_; }

 private:
  std::vector<std::vector<double>> axes_;
  std::vector<cdouble> values_;  // row-major, last axis fastest
};

}  // namespace ahg
