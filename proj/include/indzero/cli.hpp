#pragma once

// Command-line front end: argument parsing, dispatch, and CSV/JSON/SVG emitters.

#include "indzero/certify.hpp"
#include "indzero/regions.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace indzero::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitRefuted = 3;
inline constexpr int kExitInconclusive = 4;
inline constexpr int kExitCap = 5;
inline constexpr int kExitUnwritable = 6;

/// Runs one command line (args exclude the program name). Results go to the
/// --out file or `out`; diagnostics and the CSV config echo go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats a double with 17 significant digits.
std::string num17(double x);

/// Certificate fields (without samples) as JSON, and back.
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json orbit_to_json(const OrbitResult& result);
OrbitResult orbit_from_json(const nlohmann::json& j);

struct SvgMarker {
  ComplexPoint point;
  std::string label;
};

/// Minimal SVG 1.1 drawing of region outlines: one <path data-kind="..."> per
/// curve, the Shearer circle, the +-i tan(pi/(2d)) markers, axes, and a legend.
std::string render_regions_svg(int d, std::span<const RegionKind> kinds, int samples,
                               const nlohmann::json& config);

/// Composite figure: all regions plus a magnified panel around -lambda*.
std::string render_atlas_svg(int d, int samples, const nlohmann::json& config);

struct ScanPixel {
  double re = 0.0;
  double im = 0.0;
  /// "Certified", "Refuted" or "Inconclusive".
  std::string status;
  long long ceil_tau = 0;
};

/// Heat map of a scan: cells coloured by ceil(tau*) when certified.
std::string render_scan_svg(int d, int res, std::span<const ScanPixel> cells, double cell_w, double cell_h,
                            const nlohmann::json& config);

} // namespace indzero::cli
