// warpiso: certificates, spectra, curvature and isoperimetric profiles of
// warped-product spaces base x R with metric dr^2 + f(r)^2 g_base.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "warpiso/warpiso.hpp"

namespace {

using namespace warpiso;

enum class Format { Text, Json, Csv };

struct CommonOpts {
  Format format = Format::Text;
  std::string out_path;
  int jobs = 0;  // 0 = unset; falls back to WARPISO_JOBS, then 1
};

int effective_jobs(const CommonOpts& c) {
  if (c.jobs > 0) return c.jobs;
  if (const char* env = std::getenv("WARPISO_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_flag_callback("--json", [&c]() { c.format = Format::Json; },
                         "emit canonical JSON");
  cmd->add_flag_callback("--csv", [&c]() { c.format = Format::Csv; },
                         "emit CSV");
  cmd->add_flag_callback("--text", [&c]() { c.format = Format::Text; },
                         "emit readable text (default)");
  cmd->add_option("--out", c.out_path, "write output to this file instead of stdout");
}

void write_out(const CommonOpts& c, const std::string& payload) {
  if (c.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) throw domain_error("cannot open output file '" + c.out_path + "'");
  out << payload;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

// Scalar report: ordered key/value rows rendered as text, CSV, or canonical
// JSON (which sorts the keys itself).
class Report {
 public:
  void add(const std::string& key, double v) { rows_.push_back({key, fmt_double(v), CanonicalJson::number(v)}); }
  void add(const std::string& key, long long v) { rows_.push_back({key, std::to_string(v), CanonicalJson::integer(v)}); }
  void add(const std::string& key, int v) { add(key, static_cast<long long>(v)); }
  void add(const std::string& key, bool v) { rows_.push_back({key, v ? "true" : "false", CanonicalJson::boolean(v)}); }
  void add(const std::string& key, const std::string& v) { rows_.push_back({key, v, CanonicalJson::string(v)}); }
  void add(const std::string& key, CanonicalJson v) { rows_.push_back({key, v.dump(), std::move(v)}); }

  std::string render(Format f) const {
    if (f == Format::Json) {
      auto obj = CanonicalJson::object();
      for (const auto& r : rows_) obj.set(r.key, r.json);
      obj.set("schema", CanonicalJson::integer(1));
      return obj.dump() + "\n";
    }
    std::string out;
    for (const auto& r : rows_) {
      if (f == Format::Csv) {
        out += r.key + "," + r.text + "\n";
      } else {
        out += r.key + " = " + r.text + "\n";
      }
    }
    return out;
  }

 private:
  struct Row {
    std::string key;
    std::string text;
    CanonicalJson json;
  };
  std::vector<Row> rows_;
};

std::vector<int> parse_genera(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw domain_error("--genera needs a comma-separated list, e.g. 2,2");
  return out;
}

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

WarpFunction make_warp(const std::string& name, double rate) {
  if (name == "cosh") return WarpFunction::hyperbolic_cosh();
  if (name == "cosh-scaled") return WarpFunction::cosh_scaled(rate);
  throw domain_error("unknown warp '" + name + "' (expected cosh or cosh-scaled)");
}

// ---------------------------------------------------------------- cheeger --
int cmd_cheeger(const CommonOpts& c, int genus, const std::string& warp_name,
                double rate, double tol, double window) {
  const WarpedProduct m(BaseSurface::hyperbolic(genus), make_warp(warp_name, rate),
                        window);
  const auto cert = certify(m, tol);
  Report rep;
  rep.add("alpha", cert.alpha);
  rep.add("certified", cert.certified);
  rep.add("h_lower", cert.lower);
  rep.add("h_upper", cert.upper);
  rep.add("residual", cert.residual);
  rep.add("sup_phi_prime", cert.sup_phi_prime);
  write_out(c, rep.render(c.format));
  return 0;
}

// --------------------------------------------------------------- spectrum --
int cmd_spectrum(const CommonOpts& c, int genus, double L, int n,
                 const std::string& bc_name, double sullivan_d, bool have_sullivan) {
  Report rep;
  if (have_sullivan) {
    rep.add("dimension", sullivan_d);
    rep.add("lambda0", sullivan_lambda0(sullivan_d));
    write_out(c, rep.render(c.format));
    return 0;
  }
  const BoundaryCondition bc = [&]() {
    if (bc_name == "dirichlet") return BoundaryCondition::Dirichlet;
    if (bc_name == "neumann") return BoundaryCondition::Neumann;
    throw domain_error("unknown boundary condition '" + bc_name + "'");
  }();
  const auto m = WarpedProduct::fuchsian(genus, std::max(25.0, L + 1.0));
  const auto res = lambda0_truncated(m, L, n, bc);
  rep.add("L", res.half_width);
  rep.add("bc", bc_name);
  rep.add("bisection_iterations", res.bisection_iterations);
  rep.add("lambda0", res.lambda0);
  rep.add("n", res.grid_n);
  rep.add("rayleigh_sech", res.rayleigh_of_sech);
  rep.add("residual", res.residual);
  write_out(c, rep.render(c.format));
  return 0;
}

// ---------------------------------------------------------------- profile --
std::string render_curve(const ProfileCurve& curve, Format f) {
  if (f == Format::Json) return write_profile_json(curve);
  std::ostringstream out;
  write_profile_csv(curve, out);
  return out.str();
}

int cmd_profile(const CommonOpts& c, const std::string& genera_csv, double core,
                double outermost, const std::string& emit, double vmax, int samples,
                const std::string& compare_path, const std::string& renvol_path) {
  const ModelGeometry model(EndData::from_genera(parse_genera(genera_csv)), core,
                            outermost);
  if (!compare_path.empty()) {
    const ProfileCurve external = read_profile_file(compare_path);
    const auto cmp = compare_profiles(external, model);
    Report rep;
    rep.add("all_within", cmp.all_within);
    rep.add("equality_count", cmp.equality_count);
    rep.add("samples", static_cast<long long>(cmp.samples.size()));
    rep.add("violations", cmp.violations);
    write_out(c, rep.render(c.format));
    return 0;
  }
  if (!renvol_path.empty()) {
    const ProfileCurve external = read_profile_file(renvol_path);
    const auto est = renvol_estimate(external, model);
    Report rep;
    rep.add("tail_count", est.tail_count);
    rep.add("tail_gap_mean", est.tail_gap_mean);
    rep.add("tail_gap_slope", est.tail_gap_slope);
    rep.add("value", est.value);
    rep.add("window_lo", est.window_lo);
    write_out(c, rep.render(c.format));
    return 0;
  }
  ProfileCurve curve;
  if (emit == "tg") {
    curve = sample_tg_profile(model, vmax, samples);
  } else if (emit == "beta") {
    curve = sample_foliation_beta(
        WarpedProduct::fuchsian(model.ends.genera.front()), vmax, samples);
  } else {
    throw domain_error("profile needs --emit tg|beta, --compare FILE or --renvol FILE");
  }
  write_out(c, render_curve(curve, c.format));
  return 0;
}

// ------------------------------------------------------------------ ratio --
int cmd_ratio(const CommonOpts& c, const std::string& genera_csv, double core,
              const std::string& t_csv) {
  const ModelGeometry model(EndData::from_genera(parse_genera(genera_csv)), core, core);
  const std::vector<double> ts = parse_doubles(t_csv);
  if (ts.empty()) throw domain_error("--t needs at least one depth");
  if (ts.size() == 1) {
    Report rep;
    rep.add("deficit", equidistant_deficit(model, ts[0]));
    rep.add("ratio", equidistant_ratio(model, ts[0]));
    rep.add("t", ts[0]);
    write_out(c, rep.render(c.format));
    return 0;
  }
  if (c.format == Format::Json) {
    auto arr = CanonicalJson::array();
    for (double t : ts) {
      auto obj = CanonicalJson::object();
      obj.set("deficit", CanonicalJson::number(equidistant_deficit(model, t)));
      obj.set("ratio", CanonicalJson::number(equidistant_ratio(model, t)));
      obj.set("t", CanonicalJson::number(t));
      arr.push(std::move(obj));
    }
    auto root = CanonicalJson::object();
    root.set("results", std::move(arr));
    root.set("schema", CanonicalJson::integer(1));
    write_out(c, root.dump() + "\n");
    return 0;
  }
  std::string out = (c.format == Format::Csv) ? "t,ratio,deficit\n" : "";
  for (double t : ts) {
    const char* sep = (c.format == Format::Csv) ? "," : "  ";
    out += fmt_double(t) + std::string(sep) + fmt_double(equidistant_ratio(model, t)) +
           sep + fmt_double(equidistant_deficit(model, t)) + "\n";
  }
  write_out(c, out);
  return 0;
}

// ------------------------------------------------------------------ bound --
CanonicalJson bound_json(const ModelGeometry& model, const BoundsReport& rep) {
  auto obj = CanonicalJson::object();
  obj.set("bound", CanonicalJson::number(rep.bound));
  obj.set("case", CanonicalJson::string(rep.case_taken == BoundCase::CoreDominates
                                            ? "core_dominates"
                                            : "profile"));
  obj.set("core_bound", CanonicalJson::number(rep.core_bound));
  obj.set("crossing_volume", CanonicalJson::number(rep.crossing_volume));
  obj.set("equality_possible", CanonicalJson::boolean(rep.equality_possible));
  obj.set("h_fuchsian", CanonicalJson::number(rep.h_fuchsian));
  obj.set("outermost", CanonicalJson::number(model.outermost_volume));
  obj.set("profile_bound", CanonicalJson::number(rep.profile_bound));
  obj.set("t_optimal", CanonicalJson::number(rep.t_optimal));
  return obj;
}

int cmd_bound(const CommonOpts& c, const std::string& genera_csv, double core,
              double outermost, const std::string& sweep_csv) {
  const EndData ends = EndData::from_genera(parse_genera(genera_csv));
  if (sweep_csv.empty()) {
    const ModelGeometry model(ends, core, outermost);
    const auto rep = main_theorem_bound(model);
    Report out;
    out.add("bound", rep.bound);
    out.add("case", std::string(rep.case_taken == BoundCase::CoreDominates
                                    ? "core_dominates"
                                    : "profile"));
    out.add("core_bound", rep.core_bound);
    out.add("crossing_volume", rep.crossing_volume);
    out.add("equality_possible", rep.equality_possible);
    out.add("h_fuchsian", rep.h_fuchsian);
    out.add("profile_bound", rep.profile_bound);
    out.add("t_optimal", rep.t_optimal);
    write_out(c, out.render(c.format));
    return 0;
  }

  const std::vector<double> sweep = parse_doubles(sweep_csv);
  if (sweep.empty()) throw domain_error("--sweep needs a comma-separated list");
  std::vector<BoundsReport> reports(sweep.size());
  std::vector<std::string> failures(sweep.size());
  const int jobs = std::min<int>(effective_jobs(c), static_cast<int>(sweep.size()));
  std::vector<std::thread> pool;
  for (int k = 0; k < jobs; ++k) {
    pool.emplace_back([&, k]() {
      for (size_t i = k; i < sweep.size(); i += jobs) {
        try {
          reports[i] = main_theorem_bound(ModelGeometry(ends, core, sweep[i]));
        } catch (const std::exception& e) {
          failures[i] = e.what();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (size_t i = 0; i < sweep.size(); ++i) {
    if (!failures[i].empty()) {
      throw domain_error("sweep entry " + fmt_double(sweep[i]) + ": " + failures[i]);
    }
  }

  if (c.format == Format::Json) {
    auto arr = CanonicalJson::array();
    for (size_t i = 0; i < sweep.size(); ++i) {
      arr.push(bound_json(ModelGeometry(ends, core, sweep[i]), reports[i]));
    }
    auto root = CanonicalJson::object();
    root.set("results", std::move(arr));
    root.set("schema", CanonicalJson::integer(1));
    write_out(c, root.dump() + "\n");
    return 0;
  }
  std::string out = (c.format == Format::Csv) ? "outermost,bound,case\n" : "";
  for (size_t i = 0; i < sweep.size(); ++i) {
    const char* sep = (c.format == Format::Csv) ? "," : "  ";
    out += fmt_double(sweep[i]) + std::string(sep) + fmt_double(reports[i].bound) + sep +
           (reports[i].case_taken == BoundCase::CoreDominates ? "core_dominates"
                                                              : "profile") +
           "\n";
  }
  write_out(c, out);
  return 0;
}

// ----------------------------------------------------------------- oracle --
int cmd_oracle(const CommonOpts& c, int genus, double L, int n, int components) {
  const auto m = WarpedProduct::fuchsian(genus, std::max(25.0, L + 1.0));
  const auto line = DiscreteLine::build(m, L, n);
  const auto cut = discrete_cheeger_intervals(line, components, effective_jobs(c));
  Report rep;
  rep.add("L", L);
  rep.add("cells", n);
  rep.add("components", static_cast<long long>(cut.intervals.size()));
  auto intervals = CanonicalJson::array();
  std::string text;
  for (const auto& iv : cut.intervals) {
    auto pair = CanonicalJson::array();
    pair.push(CanonicalJson::number(iv.lo));
    pair.push(CanonicalJson::number(iv.hi));
    intervals.push(std::move(pair));
    if (!text.empty()) text += " ";
    text += "[" + fmt_double(iv.lo) + ", " + fmt_double(iv.hi) + "]";
  }
  if (c.format == Format::Json) {
    rep.add("intervals", std::move(intervals));
  } else {
    rep.add("intervals", text);
  }
  rep.add("quotient", cut.quotient);
  write_out(c, rep.render(c.format));
  return 0;
}

// -------------------------------------------------------------- curvature --
int cmd_curvature(const CommonOpts& c, const std::string& base_name, int genus,
                  double r) {
  const BaseSurface base = (base_name == "sphere") ? BaseSurface::round_sphere()
                                                   : BaseSurface::hyperbolic(genus);
  const WarpedProduct m(base, WarpFunction::hyperbolic_cosh());
  const auto curv = curvature_at(m, r);
  const auto shape = SliceShape::at(m, r);
  Report rep;
  rep.add("conformal_coordinate", conformal_coordinate(r));
  rep.add("intrinsic_curvature", shape.intrinsic_curvature);
  rep.add("mean_curvature", shape.mean_curvature);
  rep.add("r", r);
  rep.add("ric_radial", curv.ric_radial);
  rep.add("ric_tangential", curv.ric_tangential);
  rep.add("scalar", curv.scalar);
  rep.add("second_form_norm2", shape.second_form_norm2);
  rep.add("slice_area", m.slice_area(r));
  if (base.curvature() == -1.0) {
    rep.add("gauss_bonnet_energy", gauss_bonnet_energy(m, r));
    rep.add("stability_integrand", stability_integrand(m, r));
  } else {
    rep.add("blowup_ratio", blowup_ratio(m, r));
  }
  write_out(c, rep.render(c.format));
  return 0;
}

// ----------------------------------------------------------------- verify --
struct VerifyOutcome {
  bool pass = true;
  std::string text;
  CanonicalJson checks = CanonicalJson::array();

  void record(const std::string& name, double residual, double tol) {
    const bool ok = residual <= tol;
    pass = pass && ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-38s residual %.3e  tol %.1e  %s\n", name.c_str(),
                  residual, tol, ok ? "ok" : "FAIL");
    text += buf;
    auto obj = CanonicalJson::object();
    obj.set("check", CanonicalJson::string(name));
    obj.set("pass", CanonicalJson::boolean(ok));
    obj.set("residual", CanonicalJson::number(residual));
    obj.set("tol", CanonicalJson::number(tol));
    checks.push(std::move(obj));
  }
};

void verify_identities_suite(VerifyOutcome& out, double tol, int grid_n, double window,
                             bool fd) {
  const auto m = WarpedProduct::fuchsian(2);
  const auto grid = uniform_grid(-window, window, grid_n);
  const auto rep = verify_identities(m, grid, tol);
  for (const auto& chk : rep.checks) out.record(chk.identity, chk.max_residual, tol);
  if (fd) {
    const double fd_tol = std::max(tol, 1e-6);
    const auto rep_fd =
        verify_identities(m, grid, fd_tol, DerivativeMode::FiniteDifference, 1e-4);
    for (const auto& chk : rep_fd.checks) {
      out.record(chk.identity + " [fd]", chk.max_residual, fd_tol);
    }
  }
}

void verify_curvature_suite(VerifyOutcome& out, double tol, int grid_n, double window) {
  const auto m = WarpedProduct::fuchsian(2);
  const auto grid = uniform_grid(-window, window, grid_n);
  double worst_ric_r = 0.0, worst_ric_t = 0.0, worst_scalar = 0.0, worst_energy = 0.0;
  const double area = 4.0 * kPi;
  for (double r : grid) {
    const auto curv = curvature_at(m, r);
    worst_ric_r = std::max(worst_ric_r, std::abs(curv.ric_radial + 2.0) / 2.0);
    worst_ric_t = std::max(worst_ric_t, std::abs(curv.ric_tangential + 2.0) / 2.0);
    worst_scalar = std::max(worst_scalar, std::abs(curv.scalar + 6.0) / 6.0);
    worst_energy =
        std::max(worst_energy, std::abs(gauss_bonnet_energy(m, r) - area) / area);
  }
  out.record("ric_radial = -2", worst_ric_r, tol);
  out.record("ric_tangential = -2", worst_ric_t, tol);
  out.record("scalar = -6", worst_scalar, tol);
  out.record("boundary energy constant", worst_energy, std::max(tol, 1e-9));
}

void verify_cheeger_suite(VerifyOutcome& out, double tol) {
  const auto m = WarpedProduct::fuchsian(2);
  const auto cert = certify(m, std::max(tol, 1e-12));
  const double alpha = fuchsian_alpha();
  out.record("coth(alpha) = alpha", std::abs(1.0 / std::tanh(alpha) - alpha), 1e-12);
  out.record("upper - lower gap", cert.residual, std::max(tol, 1e-8));
  out.record("upper = 2/alpha", std::abs(cert.upper - 2.0 / alpha), 1e-12);
  const auto div = slab_divergence_check(m, alpha);
  out.record("divergence identity", std::abs(div.lhs - div.rhs) / div.rhs, 1e-9);
  out.record("calibrated ceiling at alpha",
             std::abs(div.calibration - div.rhs) / div.rhs, 1e-9);
}

int cmd_verify(const CommonOpts& c, const std::string& suite, double tol, int grid_n,
               double window, bool fd) {
  VerifyOutcome out;
  if (suite == "identities" || suite == "all") {
    verify_identities_suite(out, tol, grid_n, window, fd);
  }
  if (suite == "curvature" || suite == "all") {
    verify_curvature_suite(out, tol, grid_n, window);
  }
  if (suite == "cheeger" || suite == "all") {
    verify_cheeger_suite(out, tol);
  }
  if (out.text.empty()) {
    throw domain_error("unknown verify suite '" + suite +
                       "' (expected identities, curvature, cheeger or all)");
  }
  if (c.format == Format::Json) {
    auto root = CanonicalJson::object();
    root.set("all_pass", CanonicalJson::boolean(out.pass));
    root.set("checks", out.checks);
    root.set("schema", CanonicalJson::integer(1));
    root.set("suite", CanonicalJson::string(suite));
    write_out(c, root.dump() + "\n");
  } else {
    write_out(c, out.text + (out.pass ? "all checks passed\n" : "CHECKS FAILED\n"));
  }
  return out.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isoperimetric and spectral toolkit for warped-product spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "warpiso 0.1.0");

  CommonOpts copts;

  // cheeger
  int genus = 2;
  std::string warp_name = "cosh";
  double rate = 1.0, tol = 1e-8, window = 25.0;
  auto* cheeger_cmd =
      app.add_subcommand("cheeger", "two-sided isoperimetric-constant certificate");
  add_common(cheeger_cmd, copts);
  cheeger_cmd->add_option("--genus", genus, "genus of the base surface (>= 2)");
  cheeger_cmd->add_option("--warp", warp_name, "warp family: cosh or cosh-scaled");
  cheeger_cmd->add_option("--rate", rate, "rate for cosh-scaled");
  cheeger_cmd->add_option("--tol", tol, "certificate tolerance");
  cheeger_cmd->add_option("--window", window, "radial working window");

  // spectrum
  int sp_genus = 2, sp_n = 8000;
  double sp_L = 12.0, sullivan_d = 0.0;
  std::string bc_name = "dirichlet";
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "bottom of the radial weighted spectrum");
  add_common(spectrum_cmd, copts);
  spectrum_cmd->add_option("--genus", sp_genus, "genus of the base surface");
  spectrum_cmd->add_option("--L", sp_L, "truncation half-width");
  spectrum_cmd->add_option("--n", sp_n, "grid cells (>= 100)");
  spectrum_cmd->add_option("--bc", bc_name, "boundary condition: dirichlet or neumann");
  auto* sullivan_opt = spectrum_cmd->add_option(
      "--sullivan-d", sullivan_d, "evaluate D(2-D) for an end invariant D in [1,2]");

  // profile
  std::string genera_csv = "2", emit, compare_path, renvol_path;
  double core = 0.0, outermost = 0.0, vmax = 100.0;
  int samples = 200;
  auto* profile_cmd =
      app.add_subcommand("profile", "model isoperimetric profiles and comparisons");
  add_common(profile_cmd, copts);
  profile_cmd->add_option("--genera", genera_csv, "end genera, e.g. 2,2");
  profile_cmd->add_option("--core", core, "geodesic core volume");
  profile_cmd->add_option("--outermost", outermost, "outermost region volume");
  profile_cmd->add_option("--emit", emit, "curve to sample: tg or beta");
  profile_cmd->add_option("--vmax", vmax, "largest sampled volume");
  profile_cmd->add_option("--samples", samples, "sample count");
  profile_cmd->add_option("--compare", compare_path, "check an external profile file");
  profile_cmd->add_option("--renvol", renvol_path,
                          "estimate the renormalized-volume invariant from a file");

  // ratio
  std::string ratio_genera = "2", t_csv = "1";
  double ratio_core = 0.0;
  auto* ratio_cmd =
      app.add_subcommand("ratio", "boundary/volume ratio of equidistant regions");
  add_common(ratio_cmd, copts);
  ratio_cmd->add_option("--genera", ratio_genera, "end genera, e.g. 2,2");
  ratio_cmd->add_option("--core", ratio_core, "geodesic core volume");
  ratio_cmd->add_option("--t", t_csv, "depth(s), comma-separated");

  // bound
  std::string bound_genera = "2,2", sweep_csv;
  double bound_core = 0.0, bound_outermost = 0.0;
  auto* bound_cmd =
      app.add_subcommand("bound", "isoperimetric-constant upper bound for a model");
  add_common(bound_cmd, copts);
  bound_cmd->add_option("--genera", bound_genera, "end genera, e.g. 2,2");
  bound_cmd->add_option("--core", bound_core, "geodesic core volume");
  bound_cmd->add_option("--outermost", bound_outermost, "outermost region volume");
  bound_cmd->add_option("--sweep", sweep_csv,
                        "comma-separated outermost volumes to sweep");
  bound_cmd->add_option("--jobs", copts.jobs, "worker threads (or WARPISO_JOBS)");

  // oracle
  int or_genus = 2, or_n = 20000, components = 1;
  double or_L = 10.0;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "discrete exhaustive isoperimetric search");
  add_common(oracle_cmd, copts);
  oracle_cmd->add_option("--genus", or_genus, "genus of the base surface");
  oracle_cmd->add_option("--L", or_L, "half-width of the discretized line");
  oracle_cmd->add_option("--n", or_n, "cells (>= 16)");
  oracle_cmd->add_option("--components", components, "max interval components (1 or 2)");
  oracle_cmd->add_option("--jobs", copts.jobs, "worker threads (or WARPISO_JOBS)");

  // curvature
  std::string base_name = "hyperbolic";
  int curv_genus = 2;
  double curv_r = 0.0;
  auto* curvature_cmd =
      app.add_subcommand("curvature", "curvature report at a radius");
  add_common(curvature_cmd, copts);
  curvature_cmd->add_option("--base", base_name, "base surface: hyperbolic or sphere");
  curvature_cmd->add_option("--genus", curv_genus, "genus when the base is hyperbolic");
  curvature_cmd->add_option("--r", curv_r, "radius");

  // verify
  std::string suite = "all";
  double verify_tol = 1e-10, verify_window = 10.0;
  int verify_grid = 1000;
  bool verify_fd = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "internal consistency checks (exit 3 on failure)");
  add_common(verify_cmd, copts);
  verify_cmd->add_option("--suite", suite, "identities, curvature, cheeger or all");
  verify_cmd->add_option("--tol", verify_tol, "residual tolerance");
  verify_cmd->add_option("--grid-n", verify_grid, "grid points");
  verify_cmd->add_option("--window", verify_window, "radial window for the grids");
  verify_cmd->add_flag("--fd", verify_fd,
                       "also check with finite-difference derivatives");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 64;
  }

  try {
    if (cheeger_cmd->parsed()) {
      return cmd_cheeger(copts, genus, warp_name, rate, tol, window);
    }
    if (spectrum_cmd->parsed()) {
      return cmd_spectrum(copts, sp_genus, sp_L, sp_n, bc_name, sullivan_d,
                          sullivan_opt->count() > 0);
    }
    if (profile_cmd->parsed()) {
      return cmd_profile(copts, genera_csv, core, outermost, emit, vmax, samples,
                         compare_path, renvol_path);
    }
    if (ratio_cmd->parsed()) {
      return cmd_ratio(copts, ratio_genera, ratio_core, t_csv);
    }
    if (bound_cmd->parsed()) {
      return cmd_bound(copts, bound_genera, bound_core, bound_outermost, sweep_csv);
    }
    if (oracle_cmd->parsed()) {
      return cmd_oracle(copts, or_genus, or_L, or_n, components);
    }
    if (curvature_cmd->parsed()) {
      return cmd_curvature(copts, base_name, curv_genus, curv_r);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(copts, suite, verify_tol, verify_grid, verify_window, verify_fd);
    }
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
