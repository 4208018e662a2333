#include "ahg/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ahg {

namespace {

using nlohmann::json;

RMatrix parse_part(const json& rows, std::size_t n, const char* name) {
  if (!rows.is_array() || rows.size() != n) throw UsageError(std::string("matrix field '") + name + "' must have n rows");
  RMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const json& row = rows[j];
    if (!row.is_array() || row.size() != n) throw UsageError(std::string("matrix field '") + name + "' must be n x n");
    for (std::size_t k = 0; k < n; ++k) {
      if (!row[k].is_number()) throw UsageError(std::string("matrix field '") + name + "' has a non-numeric entry");
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = row[k].get<double>();
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t b = s.find_first_not_of(' ');
  return b == std::string::npos ? std::string() : s.substr(b);
}

}  // namespace

CMatrix parse_matrix_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw UsageError("matrix JSON needs an integer field 'n'");
  const long long n = j["n"].get<long long>();
  if (n < 1 || static_cast<std::size_t>(n) > kMaxDimension)
    throw UsageError("matrix dimension must be between 1 and " + std::to_string(kMaxDimension));
  if (!j.contains("re")) throw UsageError("matrix JSON needs a field 're'");
  const auto nn = static_cast<std::size_t>(n);
  const RMatrix re = parse_part(j["re"], nn, "re");
  const RMatrix im = j.contains("im") ? parse_part(j["im"], nn, "im") : RMatrix::Zero(re.rows(), re.cols());
  CMatrix out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open matrix file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix_json(ss.str());
}

std::string matrix_to_json(const CMatrix& m) {
  nlohmann::ordered_json re = nlohmann::ordered_json::array(), im = nlohmann::ordered_json::array();
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    nlohmann::ordered_json rr = nlohmann::ordered_json::array(), ii = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(j, k).real());
      ii.push_back(m(j, k).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  return nlohmann::ordered_json{{"n", m.rows()}, {"re", re}, {"im", im}}.dump();
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw UsageError("bad number '" + std::string(text) + "'");
  return v;
}

double Axis::at(int i) const { return min + (max - min) * static_cast<double>(i) / (count - 1); }

Axis parse_axis(std::string_view text) {
  const auto parts = split(std::string(text), ':');
  if (parts.size() != 3) throw UsageError("grid axis must look like min:max:count, got '" + std::string(text) + "'");
  Axis a;
  a.min = parse_double(trim(parts[0]));
  a.max = parse_double(trim(parts[1]));
  const std::string c = trim(parts[2]);
  int count = 0;
  const auto res = std::from_chars(c.data(), c.data() + c.size(), count);
  if (res.ec != std::errc() || res.ptr != c.data() + c.size()) throw UsageError("bad grid count '" + c + "'");
  if (count < 2) throw UsageError("grid count must be at least 2");
  if (!(a.max > a.min)) throw UsageError("grid axis needs min < max");
  a.count = count;
  return a;
}

std::vector<Axis> parse_grid(const std::vector<std::string>& specs, std::size_t n) {
  if (specs.empty()) throw UsageError("missing grid specification");
  if (specs.size() != 1 && specs.size() != n)
    throw UsageError("grid has " + std::to_string(specs.size()) + " axes, expected " + std::to_string(n));
  std::vector<Axis> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(parse_axis(specs[specs.size() == 1 ? 0 : k]));
  return out;
}

std::size_t grid_size(const std::vector<Axis>& axes) {
  std::size_t s = 1;
  for (const Axis& a : axes) {
    s *= static_cast<std::size_t>(a.count);
    if (s > std::size_t{1} << 26) throw ResourceError("grid has too many points");
  }
  return s;
}

RVector grid_point(const std::vector<Axis>& axes, std::size_t i) {
  RVector p(static_cast<Eigen::Index>(axes.size()));
  for (std::size_t k = axes.size(); k-- > 0;) {
    const auto c = static_cast<std::size_t>(axes[k].count);
    p(static_cast<Eigen::Index>(k)) = axes[k].at(static_cast<int>(i % c));
    i /= c;
  }
  return p;
}

GridSamples GridSamples::from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw UsageError("sample file is empty");
  const auto header = split(trim(line), ',');
  if (header.size() < 3) throw UsageError("sample file needs columns x1..xn,re,im");
  const std::size_t n = header.size() - 2;
  std::vector<RVector> xs;
  std::vector<cdouble> vs;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != n + 2) throw UsageError("sample row has the wrong number of columns");
    RVector x(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) x(static_cast<Eigen::Index>(k)) = parse_double(trim(cells[k]));
    xs.push_back(x);
    vs.emplace_back(parse_double(trim(cells[n])), parse_double(trim(cells[n + 1])));
  }
  GridSamples g;
  g.axes_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto& ax = g.axes_[k];
    for (const auto& x : xs) ax.push_back(x(static_cast<Eigen::Index>(k)));
    std::sort(ax.begin(), ax.end());
    ax.erase(std::unique(ax.begin(), ax.end()), ax.end());
    if (ax.size() < 2) throw UsageError("sample grid needs at least two values per axis");
  }
  std::size_t total = 1;
  for (const auto& ax : g.axes_) total *= ax.size();
  if (total != xs.size()) throw UsageError("samples do not form a complete regular grid");
  g.values_.assign(total, cdouble(0.0));
  std::vector<bool> seen(total, false);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& ax = g.axes_[k];
      const auto it = std::lower_bound(ax.begin(), ax.end(), xs[i](static_cast<Eigen::Index>(k)));
      flat = flat * ax.size() + static_cast<std::size_t>(it - ax.begin());
    }
    if (seen[flat]) throw UsageError("duplicate sample point");
    seen[flat] = true;
    g.values_[flat] = vs[i];
  }
  return g;
}

GridSamples GridSamples::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open sample file '" + path + "'");
  return from_csv(in);
}

cdouble GridSamples::operator()(const CVector& x) const {
  const std::size_t n = axes_.size();
  if (static_cast<std::size_t>(x.size()) != n) throw UsageError("sample dimension mismatch");
  std::vector<std::size_t> lo(n);
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& ax = axes_[k];
    const double v = x(static_cast<Eigen::Index>(k)).real();
    if (v < ax.front() || v > ax.back()) return 0.0;
    std::size_t j = static_cast<std::size_t>(std::upper_bound(ax.begin(), ax.end(), v) - ax.begin());
    j = std::clamp<std::size_t>(j, 1, ax.size() - 1) - 1;
    lo[k] = j;
    t[k] = (v - ax[j]) / (ax[j + 1] - ax[j]);
  }
  cdouble acc = 0.0;
  for (std::size_t corner = 0; corner < (std::size_t{1} << n); ++corner) {
    double w = 1.0;
    std::size_t flat = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool up = (corner >> k) & 1;
      w *= up ? t[k] : 1.0 - t[k];
      flat = flat * axes_[k].size() + lo[k] + (up ? 1 : 0);
    }
    if (w != 0.0) acc += w * values_[flat];
  }
  return acc;
}

}  // namespace ahg
