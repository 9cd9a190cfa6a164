#include "indzero/cli.hpp"

#include "indzero/certify.hpp"
#include "indzero/errors.hpp"
#include "indzero/graphs.hpp"
#include "indzero/indpoly.hpp"
#include "indzero/regions.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace indzero::cli {

using nlohmann::json;

std::string num17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

json point_json(ComplexPoint z) { return json::array({z.real(), z.imag()}); }

ComplexPoint point_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

CertStatus parse_status(const std::string& s) {
  for (auto st : {CertStatus::Certified, CertStatus::Refuted, CertStatus::Inconclusive}) {
    if (to_string(st) == s) {
      return st;
    }
  }
  throw PreconditionError("unknown certificate status: " + s);
}

OrbitStop parse_stop(const std::string& s) {
  for (auto st : {OrbitStop::MaxIterations, OrbitStop::Diverged, OrbitStop::NearMinusOne}) {
    if (to_string(st) == s) {
      return st;
    }
  }
  throw PreconditionError("unknown orbit stop reason: " + s);
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

} // namespace

json certificate_to_json(const Certificate& cert) {
  json j;
  j["d"] = cert.d;
  j["lambda"] = point_json(cert.lambda);
  j["status"] = std::string(to_string(cert.status));
  j["tau_star"] = optional_json(cert.tau_star);
  j["ceil_tau_star"] = optional_json(cert.ceil_tau_star);
  j["min_im"] = cert.min_im;
  j["tolerances"] = {{"im", cert.tol_im}, {"arg", cert.tol_arg}};
  j["dt"] = cert.dt;
  j["t_max"] = cert.t_max;
  j["arg_at_tau"] = optional_json(cert.arg_at_tau);
  j["arg_threshold"] = cert.arg_threshold;
  j["conjugated"] = cert.conjugated;
  j["diagnostic"] = cert.diagnostic;
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.d = j.at("d").get<int>();
  c.lambda = point_from_json(j.at("lambda"));
  c.status = parse_status(j.at("status").get<std::string>());
  if (!j.at("tau_star").is_null()) {
    c.tau_star = j.at("tau_star").get<double>();
  }
  if (!j.at("ceil_tau_star").is_null()) {
    c.ceil_tau_star = j.at("ceil_tau_star").get<long long>();
  }
  c.min_im = j.at("min_im").get<double>();
  c.tol_im = j.at("tolerances").at("im").get<double>();
  c.tol_arg = j.at("tolerances").at("arg").get<double>();
  c.dt = j.at("dt").get<double>();
  c.t_max = j.at("t_max").get<double>();
  if (j.contains("arg_at_tau") && !j.at("arg_at_tau").is_null()) {
    c.arg_at_tau = j.at("arg_at_tau").get<double>();
  }
  c.arg_threshold = j.value("arg_threshold", 0.0);
  c.conjugated = j.value("conjugated", false);
  c.diagnostic = j.value("diagnostic", std::string{});
  return c;
}

json orbit_to_json(const OrbitResult& r) {
  json pts = json::array();
  for (const auto& p : r.points) {
    pts.push_back(point_json(p));
  }
  json j;
  j["coordinates"] = r.w_coordinates ? "w" : "z";
  j["points"] = std::move(pts);
  j["min_dist_to_minus1"] = r.min_dist_to_minus1;
  j["crossed"] = r.crossed;
  j["first_crossing"] = optional_json(r.first_crossing);
  j["stop"] = std::string(to_string(r.stop));
  return j;
}

OrbitResult orbit_from_json(const json& j) {
  OrbitResult r;
  r.w_coordinates = j.at("coordinates").get<std::string>() == "w";
  for (const auto& p : j.at("points")) {
    r.points.push_back(point_from_json(p));
  }
  r.min_dist_to_minus1 = j.at("min_dist_to_minus1").get<double>();
  r.crossed = j.at("crossed").get<bool>();
  if (!j.at("first_crossing").is_null()) {
    r.first_crossing = j.at("first_crossing").get<std::size_t>();
  }
  r.stop = parse_stop(j.at("stop").get<std::string>());
  return r;
}

namespace {

/// Failure that maps straight to an exit code.
struct ExitError : std::runtime_error {
  ExitError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

[[noreturn]] void bad_args(const std::string& what) { throw ExitError(kExitBadArgs, what); }

std::vector<double> parse_reals(const std::string& text, std::size_t count, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const char* begin = item.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (item.empty() || end != begin + item.size() || errno == ERANGE || !std::isfinite(v)) {
      bad_args(std::string(flag) + ": malformed number '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.size() != count || (!text.empty() && text.back() == ',')) {
    bad_args(std::string(flag) + ": expected " + std::to_string(count) + " comma-separated numbers");
  }
  return out;
}

ComplexPoint parse_lambda(const std::string& text) {
  const auto v = parse_reals(text, 2, "--lambda");
  return {v[0], v[1]};
}

/// Destination for results: the --out file (opened before any work) or stdout.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) {
        throw ExitError(kExitUnwritable, "cannot write to " + path);
      }
      to_file_ = true;
    }
  }

  std::ostream& stream() { return to_file_ ? static_cast<std::ostream&>(file_) : fallback_; }

  void finish() {
    stream().flush();
    if (!stream()) {
      throw ExitError(kExitUnwritable, "write failed");
    }
  }

private:
  std::ofstream file_;
  std::ostream& fallback_;
  bool to_file_ = false;
};

enum class Format { Csv, Json, Svg };

const std::map<std::string, Format> kFormats{{"csv", Format::Csv}, {"json", Format::Json}, {"svg", Format::Svg}};

std::string format_name(Format f) {
  switch (f) {
  case Format::Csv:
    return "csv";
  case Format::Json:
    return "json";
  case Format::Svg:
    return "svg";
  }
  return "csv";
}

/// Resolved flags shared by the subcommands.
struct CliConfig {
  std::string subcommand;
  int d = 0;
  std::string curve = "all";
  int samples = 1000;
  Format format = Format::Csv;
  std::string out;
  std::string lambda_text;
  std::string window_text;
  int res = 50;
  std::string graph;
  int m = 20;
  int n = 1000;
  int n_max = 11;
  unsigned threads = 1;
  double dt = 1e-3;
  double t_max = 200.0;
  double tol_im = 1e-9;
  double tol_arg = 1e-9;
  bool w_coords = false;
};

/// --threads fallback; CLI11 would silently drop an invalid value.
unsigned threads_from_env(unsigned fallback) {
  const char* text = std::getenv("INDZERO_THREADS");
  if (text == nullptr || *text == '\0') {
    return fallback;
  }
  const std::string_view v(text);
  unsigned n = 0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc{} || end != v.data() + v.size() || n < 1 || n > 1024) {
    bad_args("INDZERO_THREADS must be an integer in [1, 1024]");
  }
  return n;
}

void require_d(int d) {
  if (d < 2) {
    bad_args("--d must be at least 2");
  }
}

CurveOptions curve_options(const CliConfig& c) {
  CurveOptions o;
  o.dt = c.dt;
  o.t_max = c.t_max;
  o.tol_im = c.tol_im;
  o.tol_arg = c.tol_arg;
  if (!(o.dt > 0.0 && o.dt <= 0.1)) {
    bad_args("--dt must lie in (0, 0.1]");
  }
  if (!(o.t_max >= 1.0 && o.t_max <= kMaxCurveTime)) {
    bad_args("--t-max must lie in [1, 10000]");
  }
  if (!(o.tol_im >= 0.0 && o.tol_arg >= 0.0)) {
    bad_args("tolerances must be non-negative");
  }
  return o;
}

Graph load_graph(const std::string& path) {
  if (path.empty()) {
    bad_args("--graph is required");
  }
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    bad_args("cannot read graph file " + path);
  }
  try {
    return read_edge_list_file(path);
  } catch (const ParseError& e) {
    bad_args(path + ": " + e.what());
  }
}

json coeffs_json(const IndPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) {
      arr.push_back(static_cast<std::uint64_t>(c));
    } else {
      arr.push_back(c.str());
    }
  }
  return arr;
}

void write_json(Sink& sink, const json& j) { sink.stream() << j.dump(2) << '\n'; }

int cmd_regions(const CliConfig& c, const json& config, std::ostream& out, std::ostream& err) {
  require_d(c.d);
  std::vector<RegionKind> kinds;
  if (c.curve == "all") {
    kinds.assign(std::begin(kAllRegionKinds), std::end(kAllRegionKinds));
  } else if (auto k = parse_region_kind(c.curve)) {
    kinds.push_back(*k);
  } else {
    bad_args("--curve must be one of shearer, cardioid, critical, lhp, rhp, all");
  }
  if (c.samples < 16 || c.samples > 1000000) {
    bad_args("--samples must lie in [16, 1000000]");
  }
  Sink sink(c.out, out);
  auto& os = sink.stream();
  switch (c.format) {
  case Format::Csv: {
    err << config.dump() << '\n';
    const bool tagged = kinds.size() > 1;
    os << (tagged ? "kind,param,re,im\n" : "param,re,im\n");
    for (auto kind : kinds) {
      const auto boundary = boundary_polyline(c.d, kind, c.samples);
      for (const auto& s : boundary.samples) {
        if (tagged) {
          os << to_string(kind) << ',';
        }
        os << num17(s.param) << ',' << num17(s.point.real()) << ',' << num17(s.point.imag()) << '\n';
      }
    }
    break;
  }
  case Format::Json: {
    json curves = json::array();
    for (auto kind : kinds) {
      const auto boundary = boundary_polyline(c.d, kind, c.samples);
      json rows = json::array();
      for (const auto& s : boundary.samples) {
        rows.push_back(json::array({s.param, s.point.real(), s.point.imag()}));
      }
      curves.push_back({{"kind", std::string(to_string(kind))}, {"samples", std::move(rows)}});
    }
    write_json(sink, {{"config", config}, {"curves", std::move(curves)}});
    break;
  }
  case Format::Svg:
    os << render_regions_svg(c.d, kinds, c.samples, config);
    break;
  }
  sink.finish();
  return kExitOk;
}

int cmd_certify(const CliConfig& c, const json& config, std::ostream& out) {
  require_d(c.d);
  const ComplexPoint lambda = parse_lambda(c.lambda_text);
  if (lambda == ComplexPoint{}) {
    bad_args("--lambda must be nonzero");
  }
  const CurveOptions opts = curve_options(c);
  Sink sink(c.out, out);
  const Certificate cert = certify_simons(c.d, lambda, opts);
  json j = certificate_to_json(cert);
  j["config"] = config;
  write_json(sink, j);
  sink.finish();
  switch (cert.status) {
  case CertStatus::Certified:
    return kExitOk;
  case CertStatus::Refuted:
    return kExitRefuted;
  case CertStatus::Inconclusive:
    return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_scan(const CliConfig& c, const json& config, std::ostream& out, std::ostream& err) {
  require_d(c.d);
  const auto w = parse_reals(c.window_text, 4, "--window");
  const ScanWindow window{w[0], w[1], w[2], w[3]};
  if (!(window.re0 < window.re1 && window.im0 < window.im1)) {
    bad_args("--window needs re0 < re1 and im0 < im1");
  }
  if (c.res < 1 || c.res > kMaxScanResolution) {
    bad_args("--res must lie in [1, 4096]");
  }
  const CurveOptions opts = curve_options(c);
  Sink sink(c.out, out);
  const auto cells = scan_grid(c.d, window, c.res, opts, c.threads);
  auto& os = sink.stream();
  switch (c.format) {
  case Format::Csv:
    err << config.dump() << '\n';
    os << "re,im,status,ceil_tau_star\n";
    for (const auto& cell : cells) {
      os << num17(cell.lambda.real()) << ',' << num17(cell.lambda.imag()) << ',' << to_string(cell.status) << ',';
      if (cell.ceil_tau_star) {
        os << *cell.ceil_tau_star;
      }
      os << '\n';
    }
    break;
  case Format::Json: {
    json rows = json::array();
    for (const auto& cell : cells) {
      rows.push_back({{"re", cell.lambda.real()},
                      {"im", cell.lambda.imag()},
                      {"status", std::string(to_string(cell.status))},
                      {"ceil_tau_star", optional_json(cell.ceil_tau_star)}});
    }
    write_json(sink, {{"config", config}, {"cells", std::move(rows)}});
    break;
  }
  case Format::Svg: {
    std::vector<ScanPixel> pixels;
    pixels.reserve(cells.size());
    for (const auto& cell : cells) {
      pixels.push_back({cell.lambda.real(), cell.lambda.imag(), std::string(to_string(cell.status)),
                        cell.ceil_tau_star.value_or(0)});
    }
    os << render_scan_svg(c.d, c.res, pixels, (window.re1 - window.re0) / c.res, (window.im1 - window.im0) / c.res,
                          config);
    break;
  }
  }
  sink.finish();
  return kExitOk;
}

int cmd_zpoly(const CliConfig& c, const json& config, std::ostream& out) {
  const Graph g = load_graph(c.graph);
  std::optional<ComplexPoint> lambda;
  if (!c.lambda_text.empty()) {
    lambda = parse_lambda(c.lambda_text);
  }
  Sink sink(c.out, out);
  const IndPoly p = ind_poly(g);
  json j{{"config", config},
         {"vertices", g.vertex_count()},
         {"edges", g.edge_count()},
         {"coeffs", coeffs_json(p)}};
  if (lambda) {
    j["value"] = point_json(eval(p, *lambda));
  }
  write_json(sink, j);
  sink.finish();
  return kExitOk;
}

int cmd_zscan(const CliConfig& c, const json& config, std::ostream& out) {
  require_d(c.d);
  const ComplexPoint lambda = parse_lambda(c.lambda_text);
  if (c.n_max < 1) {
    bad_args("--n-max must be positive");
  }
  Sink sink(c.out, out);
  const CatalogMinimum best = min_abs_over_catalog(c.d, lambda, c.n_max, c.threads);
  write_json(sink, {{"config", config},
                    {"catalog_size", best.catalog_size},
                    {"min_modulus", best.min_modulus},
                    {"witness_index", best.witness_index},
                    {"witness_vertices", best.witness.vertex_count()},
                    {"witness_edge_list", to_edge_list(best.witness)}});
  sink.finish();
  return kExitOk;
}

int cmd_approx(const CliConfig& c, const json& config, std::ostream& out) {
  const Graph g = load_graph(c.graph);
  const ComplexPoint lambda = parse_lambda(c.lambda_text);
  if (c.m < 1) {
    bad_args("--m must be positive");
  }
  Sink sink(c.out, out);
  const IndPoly p = ind_poly(g);
  // Shearer's disk for maximum degree Delta has radius lambda*(Delta - 1); the
  // radius for a smaller degree parameter is a valid lower bound too.
  const double rho = shearer_radius(std::max(2, max_degree(g) - 1));
  const LogZApprox approx = taylor_log_z(p, lambda, c.m, rho);
  const ComplexPoint exact = eval(p, lambda);
  json j{{"config", config}, {"order", approx.order}, {"approx_logZ", point_json(approx.value)},
         {"root_modulus_lower_bound", rho}, {"tail_bound", optional_json(approx.tail_bound)}};
  if (exact != ComplexPoint{}) {
    j["exact_logZ"] = point_json(principal_log(exact));
    j["rel_error"] = std::abs(std::exp(approx.value) / exact - 1.0);
  } else {
    j["exact_logZ"] = nullptr;
    j["rel_error"] = nullptr;
  }
  write_json(sink, j);
  sink.finish();
  return kExitOk;
}

int cmd_orbit(const CliConfig& c, const json& config, std::ostream& out) {
  require_d(c.d);
  const ComplexPoint lambda = parse_lambda(c.lambda_text);
  if (c.n < 0 || static_cast<std::size_t>(c.n) > kMaxOrbitLength) {
    bad_args("--n must lie in [0, 1000000]");
  }
  Sink sink(c.out, out);
  const auto n = static_cast<std::size_t>(c.n);
  const OrbitResult r = c.w_coords ? orbit_w(c.d, lambda, n) : orbit(c.d, lambda, n);
  json j = orbit_to_json(r);
  j["config"] = config;
  write_json(sink, j);
  sink.finish();
  return kExitOk;
}

int cmd_atlas(const CliConfig& c, const json& config, std::ostream& out) {
  require_d(c.d);
  if (c.samples < 16 || c.samples > 1000000) {
    bad_args("--samples must lie in [16, 1000000]");
  }
  Sink sink(c.out, out);
  sink.stream() << render_atlas_svg(c.d, c.samples, config);
  sink.finish();
  return kExitOk;
}

json config_json(const CliConfig& c) {
  json j{{"subcommand", c.subcommand}, {"d", c.d}};
  const auto& s = c.subcommand;
  if (s == "regions" || s == "atlas") {
    j["samples"] = c.samples;
  }
  if (s == "regions") {
    j["curve"] = c.curve;
  }
  if (s == "regions" || s == "scan") {
    j["format"] = format_name(c.format);
  }
  if (!c.lambda_text.empty()) {
    j["lambda"] = point_json(parse_lambda(c.lambda_text));
  }
  if (s == "certify" || s == "scan") {
    j["dt"] = c.dt;
    j["t_max"] = c.t_max;
    j["tolerances"] = {{"im", c.tol_im}, {"arg", c.tol_arg}};
  }
  if (s == "scan") {
    const auto w = parse_reals(c.window_text, 4, "--window");
    j["window"] = w;
    j["res"] = c.res;
  }
  if (s == "scan" || s == "zscan") {
    j["threads"] = c.threads;
  }
  if (s == "zscan") {
    j["n_max"] = c.n_max;
  }
  if (s == "zpoly" || s == "approx") {
    j["graph"] = c.graph;
    j.erase("d");
  }
  if (s == "approx") {
    j["m"] = c.m;
  }
  if (s == "orbit") {
    j["n"] = c.n;
    j["coordinates"] = c.w_coords ? "w" : "z";
  }
  if (!c.out.empty()) {
    j["out"] = c.out;
  }
  return j;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-free regions and curve certificates for independence polynomials"};
  app.require_subcommand(1);
  CliConfig c;

  auto add_d = [&](CLI::App* sub) { sub->add_option("--d", c.d, "degree parameter (max degree d+1), d >= 2")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", c.out, "output path (default stdout)"); };
  auto add_lambda = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--lambda", c.lambda_text, "activity as re,im");
    if (required) {
      opt->required();
    }
  };
  std::vector<std::pair<CLI::App*, CLI::Option*>> threads_opts;
  auto add_threads = [&](CLI::App* sub) {
    threads_opts.emplace_back(
        sub, sub->add_option("--threads", c.threads, "worker threads (default: INDZERO_THREADS or 1)")->check(CLI::Range(1u, 1024u)));
  };
  auto add_curve_opts = [&](CLI::App* sub) {
    sub->add_option("--dt", c.dt, "base step of the curve parameter");
    sub->add_option("--t-max", c.t_max, "largest curve parameter");
    sub->add_option("--tol-im", c.tol_im, "tolerance on Im h");
    sub->add_option("--tol-arg", c.tol_arg, "tolerance on arg(1 + h)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "csv, json or svg")->transform(CLI::CheckedTransformer(kFormats));
  };

  auto* regions = app.add_subcommand("regions", "sampled boundaries of the zero-free regions");
  add_d(regions);
  regions->add_option("--curve", c.curve, "shearer, cardioid, critical, lhp, rhp or all");
  regions->add_option("--samples", c.samples, "samples per curve");
  add_format(regions);
  add_out(regions);

  auto* certify = app.add_subcommand("certify", "curve certificate for one activity");
  add_d(certify);
  add_lambda(certify, true);
  add_curve_opts(certify);
  add_out(certify);

  auto* scan = app.add_subcommand("scan", "certify every cell of a grid");
  add_d(scan);
  scan->add_option("--window", c.window_text, "re0,re1,im0,im1")->required();
  scan->add_option("--res", c.res, "cells per side");
  add_curve_opts(scan);
  add_threads(scan);
  add_format(scan);
  add_out(scan);

  auto* zpoly = app.add_subcommand("zpoly", "exact independence polynomial of a graph file");
  zpoly->add_option("--graph", c.graph, "edge-list file")->required();
  add_lambda(zpoly, false);
  add_out(zpoly);

  auto* zscan = app.add_subcommand("zscan", "minimum |Z_T(lambda)| over small trees");
  add_d(zscan);
  zscan->add_option("--n-max", c.n_max, "largest tree size");
  add_lambda(zscan, true);
  add_threads(zscan);
  add_out(zscan);

  auto* approx = app.add_subcommand("approx", "truncated Taylor series of log Z");
  approx->add_option("--graph", c.graph, "edge-list file")->required();
  add_lambda(approx, true);
  approx->add_option("--m", c.m, "series order");
  add_out(approx);

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of 0 under z -> lambda/(1+z)^d");
  add_d(orbit_cmd);
  add_lambda(orbit_cmd, true);
  orbit_cmd->add_option("--n", c.n, "number of iterations");
  orbit_cmd->add_flag("--w", c.w_coords, "iterate w -> log(1 + lambda e^{-dw}) instead");
  add_out(orbit_cmd);

  auto* atlas = app.add_subcommand("atlas", "composite SVG of all regions");
  add_d(atlas);
  atlas->add_option("--samples", c.samples, "samples per curve");
  atlas->add_option("--out", c.out, "output SVG path")->required();

  std::vector<const char*> argv{"indzero"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  try {
    c.subcommand = app.get_subcommands().front()->get_name();
    for (const auto& [sub, opt] : threads_opts) {
      if (sub->parsed() && opt->count() == 0) {
        c.threads = threads_from_env(c.threads);
      }
    }
    const json config = config_json(c);
    const auto& s = c.subcommand;
    if (s == "regions") {
      return cmd_regions(c, config, out, err);
    }
    if (s == "certify") {
      return cmd_certify(c, config, out);
    }
    if (s == "scan") {
      return cmd_scan(c, config, out, err);
    }
    if (s == "zpoly") {
      return cmd_zpoly(c, config, out);
    }
    if (s == "zscan") {
      return cmd_zscan(c, config, out);
    }
    if (s == "approx") {
      return cmd_approx(c, config, out);
    }
    if (s == "orbit") {
      return cmd_orbit(c, config, out);
    }
    return cmd_atlas(c, config, out);
  } catch (const ExitError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

} // namespace indzero::cli
