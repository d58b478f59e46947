#include "atnquant/scales.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include <json.hpp>

#include "atnquant/errors.hpp"
#include "atnquant/stats.hpp"

namespace atnquant::scales {

bool is_amyloid_tracer(Tracer t) {
  switch (t) {
    case Tracer::pib:
    case Tracer::fbp:
    case Tracer::fbb:
    case Tracer::ftm:
    case Tracer::nav:
      return true;
    default:
      return false;
  }
}

bool is_tau_tracer(Tracer t) { return !is_amyloid_tracer(t); }

const char* to_string(Tracer t) {
  switch (t) {
    case Tracer::pib: return "PiB";
    case Tracer::fbp: return "FBP";
    case Tracer::fbb: return "FBB";
    case Tracer::ftm: return "FTM";
    case Tracer::nav: return "NAV";
    case Tracer::ftp: return "FTP";
    case Tracer::ro: return "RO";
    case Tracer::mk: return "MK";
    case Tracer::gtp: return "GTP";
    case Tracer::pbb3: return "PBB3";
    case Tracer::pi: return "PI";
  }
  return "?";
}

const char* to_string(Scale s) {
  switch (s) {
    case Scale::cl: return "CL";
    case Scale::ctr: return "CTR";
    case Scale::ctrz: return "CTRz";
  }
  return "?";
}

Tracer tracer_from_string(const std::string& s) {
  static const std::map<std::string, Tracer> table = {
      {"pib", Tracer::pib}, {"fbp", Tracer::fbp},   {"fbb", Tracer::fbb},
      {"ftm", Tracer::ftm}, {"nav", Tracer::nav},   {"ftp", Tracer::ftp},
      {"ro", Tracer::ro},   {"mk", Tracer::mk},     {"gtp", Tracer::gtp},
      {"pbb3", Tracer::pbb3}, {"pi", Tracer::pi},
  };
  std::string key;
  for (char c : s) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto it = table.find(key);
  if (it == table.end()) fail(ErrorCode::unknown_tracer, "unknown tracer: " + s);
  return it->second;
}

Scale scale_from_string(const std::string& s) {
  if (s == "CL" || s == "cl") return Scale::cl;
  if (s == "CTR" || s == "ctr") return Scale::ctr;
  if (s == "CTRz" || s == "ctrz") return Scale::ctrz;
  fail(ErrorCode::config_error, "unknown scale: " + s);
}

namespace {

std::vector<CalibrationLine> builtin_lines() {
  // Published tracer conversion equations, verbatim.
  return {
      {Tracer::pib, Scale::cl, 107.3768, -103.7152, std::nullopt},
      {Tracer::fbp, Scale::cl, 194.8721, -191.8315, 0.92},
      {Tracer::fbb, Scale::cl, 165.2828, -158.0409, 0.97},
      {Tracer::ftm, Scale::cl, 141.1563, -128.3451, 0.95},
      {Tracer::nav, Scale::cl, 104.8498, -102.6445, 0.99},
      {Tracer::ftp, Scale::ctrz, 16.9370, -19.1334, 0.98},
      {Tracer::ro, Scale::ctrz, 17.2116, -20.0144, std::nullopt},
      {Tracer::mk, Scale::ctrz, 12.2417, -12.7801, std::nullopt},
      {Tracer::gtp, Scale::ctrz, 12.5556, -13.8899, std::nullopt},
      {Tracer::pbb3, Scale::ctrz, 15.4067, -14.6334, std::nullopt},
      {Tracer::pi, Scale::ctrz, 10.1753, -11.5909, std::nullopt},
  };
}

} // namespace

const CalibrationRegistry& CalibrationRegistry::builtin() {
  static const CalibrationRegistry reg = from_lines(builtin_lines());
  return reg;
}

CalibrationRegistry CalibrationRegistry::from_lines(std::vector<CalibrationLine> lines) {
  CalibrationRegistry reg;
  reg.lines_ = std::move(lines);
  reg.validate();
  return reg;
}

CalibrationRegistry CalibrationRegistry::load(const std::filesystem::path& json_file) {
  std::ifstream in(json_file);
  if (!in) fail(ErrorCode::io_error, "cannot open calibration registry: " + json_file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::config_error, "bad registry JSON: " + std::string(e.what()));
  }
  std::vector<CalibrationLine> lines;
  for (const auto& rec : j.at("lines")) {
    CalibrationLine line;
    line.tracer = tracer_from_string(rec.at("tracer").get<std::string>());
    line.scale = scale_from_string(rec.at("scale").get<std::string>());
    line.slope = rec.at("slope").get<double>();
    line.intercept = rec.at("intercept").get<double>();
    if (rec.contains("r2") && !rec.at("r2").is_null()) line.r2 = rec.at("r2").get<double>();
    lines.push_back(line);
  }
  return from_lines(std::move(lines));
}

void CalibrationRegistry::validate() const {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const auto& a = lines_[i];
    if (a.slope <= 0.0)
      fail(ErrorCode::config_error,
           std::string("registry line for ") + to_string(a.tracer) + " has non-positive slope");
    const bool scale_ok = (a.scale == Scale::cl) ? is_amyloid_tracer(a.tracer)
                                                 : is_tau_tracer(a.tracer);
    if (!scale_ok)
      fail(ErrorCode::config_error, std::string("registry line pairs ") + to_string(a.tracer) +
                                        " with scale " + to_string(a.scale));
    for (std::size_t k = i + 1; k < lines_.size(); ++k)
      if (lines_[k].tracer == a.tracer && lines_[k].scale == a.scale)
        fail(ErrorCode::config_error,
             std::string("duplicate registry entry for ") + to_string(a.tracer));
  }
  // The stored PiB row must agree with the line generated from the anchors.
  if (has(Tracer::pib, Scale::cl)) {
    const CalibrationLine& pib = line(Tracer::pib, Scale::cl);
    const double slope = 100.0 / (kPibAdAnchor - kPibYcnAnchor);
    const double intercept = -slope * kPibYcnAnchor;
    if (std::abs(pib.slope - slope) > 1e-3 || std::abs(pib.intercept - intercept) > 1e-3)
      fail(ErrorCode::config_error, "PiB registry row is inconsistent with its anchors");
  }
}

const CalibrationLine& CalibrationRegistry::line(Tracer t, Scale s) const {
  for (const auto& l : lines_)
    if (l.tracer == t && l.scale == s) return l;
  fail(ErrorCode::unknown_tracer, std::string("no ") + to_string(s) + " calibration for tracer " +
                                      to_string(t));
}

bool CalibrationRegistry::has(Tracer t, Scale s) const {
  for (const auto& l : lines_)
    if (l.tracer == t && l.scale == s) return true;
  return false;
}

double suvr_to_centiloid(Tracer t, double suvr, const CalibrationRegistry& reg) {
  if (!is_amyloid_tracer(t))
    fail(ErrorCode::scale_mismatch,
         std::string(to_string(t)) + " is a tau tracer; Centiloid needs an amyloid tracer");
  return reg.line(t, Scale::cl).apply(suvr);
}

double suvr_to_centaurz(Tracer t, double suvr, const CalibrationRegistry& reg) {
  if (!is_tau_tracer(t))
    fail(ErrorCode::scale_mismatch,
         std::string(to_string(t)) + " is an amyloid tracer; CenTauRz needs a tau tracer");
  return reg.line(t, Scale::ctrz).apply(suvr);
}

double suvr_to_centaur(double suvr) { return (suvr - kCentaurOffset) / kCentaurScale; }

std::pair<Level1Anchors, CalibrationLine> fit_level1(std::span<const double> ycn_suvr,
                                                     std::span<const double> ad_suvr) {
  if (ycn_suvr.empty() || ad_suvr.empty())
    fail(ErrorCode::degenerate_anchors, "fit_level1: empty anchor group");
  Level1Anchors anchors{stats::mean(ycn_suvr), stats::mean(ad_suvr)};
  if (std::abs(anchors.mean_ad_suvr - anchors.mean_ycn_suvr) < 1e-9)
    fail(ErrorCode::degenerate_anchors, "fit_level1: anchor means coincide");
  CalibrationLine line;
  line.tracer = Tracer::pib;
  line.scale = Scale::cl;
  line.slope = 100.0 / (anchors.mean_ad_suvr - anchors.mean_ycn_suvr);
  line.intercept = -line.slope * anchors.mean_ycn_suvr;
  return {anchors, line};
}

std::pair<CalibrationLine, double> fit_level2(std::span<const double> pib_suvr,
                                              std::span<const double> tracer_suvr,
                                              const CalibrationLine& level1, Tracer tracer) {
  if (pib_suvr.size() != tracer_suvr.size() || pib_suvr.size() < 3)
    fail(ErrorCode::degenerate_fit, "fit_level2: needs >= 3 paired scans");
  // tracer = m*pib + c, inverted and composed with the Level-1 line so that
  // CL = level1(slope,intercept) applied to (suvr - c)/m.
  const stats::FitResult fit = stats::linear_fit(pib_suvr, tracer_suvr);
  if (fit.constant_y || std::abs(fit.slope) < 1e-12)
    fail(ErrorCode::degenerate_fit, "fit_level2: tracer does not vary with PiB");
  CalibrationLine line;
  line.tracer = tracer;
  line.scale = Scale::cl;
  line.slope = level1.slope / fit.slope;
  line.intercept = level1.intercept - level1.slope * fit.intercept / fit.slope;
  line.r2 = fit.r2;
  return {line, fit.r2};
}

CriteriaReport check_centiloid_criteria(std::span<const double> replicated_cl,
                                        std::span<const double> published_cl) {
  if (replicated_cl.size() != published_cl.size() || replicated_cl.size() < 3)
    fail(ErrorCode::degenerate_fit, "check_centiloid_criteria: needs >= 3 paired values");
  const stats::FitResult fit = stats::linear_fit(published_cl, replicated_cl);
  CriteriaReport report;
  report.slope = fit.slope;
  report.intercept = fit.intercept;
  report.r2 = fit.r2;
  if (!(fit.slope >= 0.98 && fit.slope <= 1.02)) report.failures.push_back("slope");
  if (!(fit.intercept >= -2.0 && fit.intercept <= 2.0)) report.failures.push_back("intercept");
  if (!(fit.r2 > 0.98)) report.failures.push_back("r2");
  report.pass = report.failures.empty();
  return report;
}

CentaurLevel1 fit_centaur_level1(std::span<const double> published_ctr,
                                 std::span<const double> local_suvr) {
  if (published_ctr.size() != local_suvr.size() || published_ctr.size() < 3)
    fail(ErrorCode::degenerate_fit, "fit_centaur_level1: needs >= 3 paired values");
  const stats::FitResult fit = stats::linear_fit(published_ctr, local_suvr);
  if (fit.constant_y || std::abs(fit.slope) < 1e-12)
    fail(ErrorCode::degenerate_fit, "fit_centaur_level1: local SUVr does not vary");
  return {fit.slope, fit.intercept};
}

} // namespace atnquant::scales
