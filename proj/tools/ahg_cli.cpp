// ahg: evaluation, transforms, WVD, expansion and verification from the shell.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ahg/ahg.hpp"
#include "ahg/error.hpp"
#include "ahg/io.hpp"
#include "ahg/oracle.hpp"
#include "ahg/parallel.hpp"
#include "ahg/transforms.hpp"
#include "ahg/verify.hpp"
#include "ahg/wigner.hpp"
#include "json.hpp"

namespace {

using namespace ahg;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Common {
  std::string theta_path;
  std::string out_path;
};

AnisotropyMatrix load_theta(const std::string& path, std::size_t n_fallback) {
  if (path.empty()) return AnisotropyMatrix::identity(n_fallback);
  return AnisotropyMatrix(read_matrix_file(path));
}

void require_dim(const AnisotropyMatrix& theta, std::size_t n, const char* what) {
  if (theta.dim() != n)
    throw UsageError(std::string(what) + " has dimension " + std::to_string(n) + " but theta is " +
                     std::to_string(theta.dim()) + "x" + std::to_string(theta.dim()));
}

// Writes to the named file, or stdout when the name is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string header(const char* prefix, std::size_t n) {
  std::string h;
  for (std::size_t k = 1; k <= n; ++k) h += std::string(prefix) + std::to_string(k) + ",";
  return h;
}

// + 0.0 folds negative zero
void write_row(std::ostream& os, const RVector& x, cdouble v) {
  for (Eigen::Index k = 0; k < x.size(); ++k) os << format_double(x(k) + 0.0) << ',';
  os << format_double(v.real() + 0.0) << ',' << format_double(v.imag() + 0.0) << '\n';
}

std::vector<cdouble> evaluate_grid(const std::vector<Axis>& axes, const std::function<cdouble(const RVector&)>& f) {
  const std::size_t total = grid_size(axes);
  std::vector<cdouble> values(total);
  parallel_for(total, [&](std::size_t i) { values[i] = f(grid_point(axes, i)); });
  return values;
}

ordered_json complex_json(cdouble v) { return ordered_json::array({v.real(), v.imag()}); }

ordered_json matrix_json(const CMatrix& m) { return ordered_json::parse(matrix_to_json(m)); }

// ---------------------------------------------------------------------------

struct EvalGrid {
  Common common;
  std::string nu;
  std::vector<std::string> grid;
  bool dual = false;

  int run() const {
    const MultiIndex degree = MultiIndex::parse(nu);
    const AnisotropyMatrix theta = load_theta(common.theta_path, degree.size());
    require_dim(theta, degree.size(), "degree");
    const auto axes = parse_grid(grid, theta.dim());
    const AhgMode mode(theta, degree, dual);
    const auto values = evaluate_grid(axes, [&](const RVector& r) { return mode(r.cast<cdouble>()); });
    Output out(common.out_path);
    out.stream() << header("r", theta.dim()) << "re,im\n";
    for (std::size_t i = 0; i < values.size(); ++i) write_row(out.stream(), grid_point(axes, i), values[i]);
    return kExitOk;
  }
};

struct Transform {
  Common common;
  std::string nu;
  std::vector<std::string> grid;
  std::string kind;
  std::vector<double> abcd;
  std::string sidecar;
  bool continue_domain = false;
  std::string calibrate = "auto";

  LctOptions options() const {
    LctOptions o;
    o.require_re_pd = !continue_domain;
    if (calibrate == "on")
      o.calibration = Calibration::On;
    else if (calibrate == "off")
      o.calibration = Calibration::Off;
    return o;
  }

  std::pair<TransformedMode, ordered_json> build(const AnisotropyMatrix& theta, const MultiIndex& degree) const {
    ordered_json meta;
    if (!abcd.empty()) {
      if (!kind.empty()) throw UsageError("give either --kind or --abcd, not both");
      if (abcd.size() != 4) throw UsageError("--abcd needs four numbers a,b,c,d");
      const LctParams a(abcd[0], abcd[1], abcd[2], abcd[3]);
      meta["transform"] = "lct";
      meta["abcd"] = abcd;
      return {lct_closed(a, theta, degree, options()), meta};
    }
    if (kind == "ft") {
      meta["transform"] = "ft";
      return {fourier_closed(theta, degree), meta};
    }
    if (kind == "laplace") {
      meta["transform"] = "laplace";
      return {laplace_closed(theta, degree), meta};
    }
    if (kind.rfind("frft:", 0) == 0) {
      const double gamma = parse_double(kind.substr(5));
      meta["transform"] = "frft";
      meta["gamma"] = gamma;
      return {frft_closed(gamma, theta, degree, options()), meta};
    }
    throw UsageError("unknown --kind '" + kind + "' (expected ft, frft:<gamma> or laplace)");
  }

  int run() const {
    if (kind.empty() && abcd.empty()) throw UsageError("transform needs --kind or --abcd");
    const MultiIndex degree = MultiIndex::parse(nu);
    const AnisotropyMatrix theta = load_theta(common.theta_path, degree.size());
    require_dim(theta, degree.size(), "degree");
    const auto axes = parse_grid(grid, theta.dim());
    auto [t, meta] = build(theta, degree);

    const auto values = evaluate_grid(axes, [&](const RVector& z) { return t(z.cast<cdouble>()); });
    Output out(common.out_path);
    out.stream() << header("z", theta.dim()) << "re,im\n";
    for (std::size_t i = 0; i < values.size(); ++i) write_row(out.stream(), grid_point(axes, i), values[i]);

    std::string side = sidecar;
    if (side.empty() && !common.out_path.empty() && common.out_path != "-") side = common.out_path + ".json";
    if (!side.empty()) {
      meta["nu"] = degree.to_string();
      meta["theta"] = matrix_json(theta.matrix());
      meta["sigma"] = t.sigma ? matrix_json(*t.sigma) : ordered_json(nullptr);
      meta["xi"] = t.xi ? matrix_json(*t.xi) : ordered_json(nullptr);
      meta["C"] = matrix_json(t.quad_matrix());
      meta["arg_map"] = matrix_json(t.arg_map());
      meta["prefactor"] = complex_json(t.prefactor());
      meta["calibration"] = complex_json(t.calibration);
      meta["calibrated"] = t.calibrated;
      meta["continued_domain"] = continue_domain;
      std::ofstream f(side, std::ios::binary);
      if (!f) throw UsageError("cannot open sidecar file '" + side + "'");
      f << meta.dump(2) << '\n';
    }
    return kExitOk;
  }
};

std::map<MultiIndex, cdouble> read_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open coefficient file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid coefficient JSON: ") + e.what());
  }
  if (!j.is_object() || j.empty()) throw UsageError("coefficient JSON must be a non-empty object");
  std::map<MultiIndex, cdouble> out;
  for (const auto& [key, value] : j.items()) {
    cdouble c;
    if (value.is_number()) {
      c = value.get<double>();
    } else if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
      c = cdouble(value[0].get<double>(), value[1].get<double>());
    } else {
      throw UsageError("coefficient for '" + key + "' must be a number or [re, im]");
    }
    out[MultiIndex::parse(key)] += c;
  }
  const std::size_t n = out.begin()->first.size();
  for (const auto& [nu, c] : out)
    if (nu.size() != n) throw UsageError("coefficient degrees have different dimensions");
  return out;
}

struct Wvd {
  Common common;
  std::string coeffs_path;
  std::vector<std::string> r_grid, zeta_grid;

  int run() const {
    const auto coeffs = read_coefficients(coeffs_path);
    const std::size_t n = coeffs.begin()->first.size();
    const AnisotropyMatrix theta = load_theta(common.theta_path, n);
    require_dim(theta, n, "coefficients");
    const auto r_axes = parse_grid(r_grid, n);
    const auto z_axes = parse_grid(zeta_grid.empty() ? r_grid : zeta_grid, n);
    const WvdExpansion w{ModeExpansion(theta, coeffs)};
    const std::size_t nr = grid_size(r_axes), nz = grid_size(z_axes);
    if (nr * nz > std::size_t{1} << 26) throw ResourceError("phase grid has too many points");
    std::vector<cdouble> values(nr * nz);
    parallel_for(nr * nz, [&](std::size_t i) {
      values[i] = w(PhasePoint(grid_point(r_axes, i / nz), grid_point(z_axes, i % nz)));
    });
    Output out(common.out_path);
    out.stream() << header("r", n) << header("zeta", n) << "w_re,w_im\n";
    RVector x(static_cast<Eigen::Index>(2 * n));
    for (std::size_t i = 0; i < values.size(); ++i) {
      x << grid_point(r_axes, i / nz), grid_point(z_axes, i % nz);
      write_row(out.stream(), x, values[i]);
    }
    return kExitOk;
  }
};

struct Expand {
  Common common;
  std::string function;
  std::string samples;
  int max_order = 4;
  int nodes = 48;

  int run() const {
    if (function.empty() == samples.empty()) throw UsageError("expand needs exactly one of --function or --samples");
    if (max_order < 0) throw UsageError("--max-order must be non-negative");
    Function f;
    std::optional<AnisotropyMatrix> theta;
    std::optional<GridSamples> grid;
    if (!samples.empty()) {
      grid = GridSamples::from_file(samples);
      theta = load_theta(common.theta_path, grid->dim());
      require_dim(*theta, grid->dim(), "sample grid");
      f = [&g = *grid](const CVector& x) { return g(x); };
    } else if (function.rfind("mode:", 0) == 0) {
      const MultiIndex degree = MultiIndex::parse(function.substr(5));
      theta = load_theta(common.theta_path, degree.size());
      require_dim(*theta, degree.size(), "degree");
      f = [mode = AhgMode(*theta, degree)](const CVector& x) { return mode(x); };
    } else if (function == "gaussian") {
      if (common.theta_path.empty()) throw UsageError("builtin 'gaussian' needs --theta");
      theta = load_theta(common.theta_path, 1);
      f = [mode = AhgMode(*theta, MultiIndex::zeros(theta->dim()))](const CVector& x) { return mode(x); };
    } else {
      throw UsageError("unknown builtin function '" + function + "' (expected mode:<nu> or gaussian)");
    }
    const ExpansionResult r = expand(f, *theta, max_order, nodes);
    ordered_json coeffs = ordered_json::object();
    for (const MultiIndex& nu : degrees_up_to(theta->dim(), max_order))
      coeffs[nu.to_string()] = complex_json(r.expansion.coefficient(nu));
    ordered_json doc;
    doc["theta"] = matrix_json(theta->matrix());
    doc["max_order"] = max_order;
    doc["nodes"] = nodes;
    doc["coefficients"] = coeffs;
    doc["residual"] = r.residual;
    doc["tail_ratio"] = r.tail_ratio;
    Output out(common.out_path);
    out.stream() << doc.dump(2) << '\n';
    return kExitOk;
  }
};

struct Verify {
  std::string suite = "all";
  VerifyOptions options;
  std::vector<std::string> overrides;
  std::optional<double> tolerance;
  std::string out_path;

  int run() {
    options.tolerance = tolerance;
    for (const std::string& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects suite.check=value, got '" + o + "'");
      options.tolerances[o.substr(0, eq)] = parse_double(o.substr(eq + 1));
    }
    const auto results = run_suite(suite, options);
    Output out(out_path);
    std::size_t failed = 0;
    for (const CheckResult& c : results) {
      out.stream() << format_check(c) << '\n';
      if (!c.passed) ++failed;
    }
    out.stream() << (failed ? "FAILED " : "OK ") << results.size() - failed << "/" << results.size()
                 << " checks passed\n";
    return failed ? kExitChecksFailed : kExitOk;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--theta", c.theta_path, "Anisotropy matrix JSON {\"n\":..,\"re\":[[..]],\"im\":[[..]]}; identity when omitted")
      ->check(CLI::ExistingFile);
  app->add_option("-o,--out", c.out_path, "Output file (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anisotropic Hermite-Gauss functions: evaluation, transforms, Wigner distributions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ahg 1.0.0");

  EvalGrid eval_grid;
  auto* ev = app.add_subcommand("eval-grid", "Evaluate one mode on a regular grid");
  add_common(ev, eval_grid.common);
  ev->add_option("--nu", eval_grid.nu, "Degree, comma separated")->required();
  ev->add_option("--grid", eval_grid.grid, "min:max:count, once or once per axis")->required();
  ev->add_flag("--dual", eval_grid.dual, "Evaluate the dual mode");

  Transform transform;
  auto* tr = app.add_subcommand("transform", "Closed-form transform of one mode on a frequency grid");
  add_common(tr, transform.common);
  tr->add_option("--nu", transform.nu, "Degree, comma separated")->required();
  tr->add_option("--grid", transform.grid, "min:max:count, once or once per axis")->required();
  tr->add_option("--kind", transform.kind, "ft, frft:<gamma> or laplace");
  tr->add_option("--abcd", transform.abcd, "Real LCT parameters a,b,c,d with ad - bc = 1")->delimiter(',');
  tr->add_option("--sidecar", transform.sidecar, "Metadata JSON path (default <out>.json)");
  tr->add_flag("--continue-domain", transform.continue_domain,
               "Allow Sigma and Xi without positive definite real part (analytic continuation)");
  tr->add_option("--calibrate", transform.calibrate, "Phase calibration against quadrature")
      ->check(CLI::IsMember({"auto", "on", "off"}));

  Wvd wvd;
  auto* wv = app.add_subcommand("wvd", "Wigner distribution of a mode expansion on a phase grid");
  add_common(wv, wvd.common);
  wv->add_option("--coeffs", wvd.coeffs_path, "JSON map \"nu\" -> [re, im]")->required()->check(CLI::ExistingFile);
  wv->add_option("--r-grid", wvd.r_grid, "Position grid min:max:count")->required();
  wv->add_option("--zeta-grid", wvd.zeta_grid, "Frequency grid (defaults to the position grid)");

  Expand expand_cmd;
  auto* ex = app.add_subcommand("expand", "Project a function onto the mode basis");
  add_common(ex, expand_cmd.common);
  ex->add_option("--function", expand_cmd.function, "Builtin: mode:<nu> or gaussian");
  ex->add_option("--samples", expand_cmd.samples, "CSV of x1..xn,re,im on a regular grid")->check(CLI::ExistingFile);
  ex->add_option("--max-order", expand_cmd.max_order, "Largest total degree");
  ex->add_option("--nodes", expand_cmd.nodes, "Quadrature nodes per axis")->check(CLI::Range(2, 256));

  Verify verify;
  auto* vf = app.add_subcommand("verify", "Run verification suites");
  std::string suites_help = "One of:";
  for (const auto& s : suite_names()) suites_help += " " + s;
  vf->add_option("--suite", verify.suite, suites_help);
  vf->add_option("--n", verify.options.n, "Dimension for the orthogonality suite")->check(CLI::Range(1, 3));
  vf->add_option("--max-order", verify.options.max_order, "Degree bound for the orthogonality suite")
      ->check(CLI::Range(0, 8));
  vf->add_option("--nodes", verify.options.nodes, "Quadrature nodes per axis (0 keeps suite defaults)")
      ->check(CLI::Range(0, 256));
  vf->add_option("--tolerance", verify.tolerance, "Replace every tolerance");
  vf->add_option("--tol", verify.overrides, "Per-check tolerance suite.check=value");
  vf->add_option("--seed", verify.options.seed, "Random seed for sampled points");
  vf->add_option("-o,--out", verify.out_path, "Report file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*ev) return eval_grid.run();
    if (*tr) return transform.run();
    if (*wv) return wvd.run();
    if (*ex) return expand_cmd.run();
    if (*vf) return verify.run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
