#ifndef ATNQUANT_SCALES_HPP
#define ATNQUANT_SCALES_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace atnquant::scales {

enum class Tracer { pib, fbp, fbb, ftm, nav, ftp, ro, mk, gtp, pbb3, pi };
enum class Scale { cl, ctr, ctrz };

bool is_amyloid_tracer(Tracer t);
bool is_tau_tracer(Tracer t);
const char* to_string(Tracer t);
const char* to_string(Scale s);
Tracer tracer_from_string(const std::string& s);    // throws UnknownTracer
Scale scale_from_string(const std::string& s);      // throws ConfigError

/// A linear SUVr -> standardized-scale map for one tracer.
struct CalibrationLine {
  Tracer tracer = Tracer::pib;
  Scale scale = Scale::cl;
  double slope = 0.0;
  double intercept = 0.0;
  std::optional<double> r2;

  double apply(double suvr) const { return slope * suvr + intercept; }
  double invert(double value) const { return (value - intercept) / slope; }
};

struct Level1Anchors {
  double mean_ycn_suvr = 0.0;
  double mean_ad_suvr = 0.0;
};

struct CriteriaReport {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  bool pass = false;
  std::vector<std::string> failures; // subset of {"slope","intercept","r2"}
};

/// Direct-form tau Level-1 calibration: CTR = (suvr - offset) / scale.
struct CentaurLevel1 {
  double scale = 1.0;
  double offset = 0.0;
  double apply(double suvr) const { return (suvr - offset) / scale; }
  CalibrationLine as_line() const {
    return {Tracer::ftp, Scale::ctr, 1.0 / scale, -offset / scale, std::nullopt};
  }
};

/// Read-only store of tracer conversion lines. Construction validates that
/// the stored PiB row agrees with the line anchored at the young-control /
/// typical-AD composite SUVr means (within 1e-3), that all slopes are
/// positive and all (tracer, scale) pairs unique.
class CalibrationRegistry {
public:
  static const CalibrationRegistry& builtin();
  static CalibrationRegistry from_lines(std::vector<CalibrationLine> lines);
  static CalibrationRegistry load(const std::filesystem::path& json_file);

  const CalibrationLine& line(Tracer t, Scale s) const; // UnknownTracer
  bool has(Tracer t, Scale s) const;
  const std::vector<CalibrationLine>& lines() const { return lines_; }

private:
  void validate() const;
  std::vector<CalibrationLine> lines_;
};

/// Young-control and typical-AD anchor SUVr means of the shipped PiB
/// Level-1 calibration, plus the tau Level-1 constants.
inline constexpr double kPibYcnAnchor = 0.9659;
inline constexpr double kPibAdAnchor = 1.8972;
inline constexpr double kCentaurScale = 0.7646;
inline constexpr double kCentaurOffset = 0.2222;

double suvr_to_centiloid(Tracer t, double suvr,
                         const CalibrationRegistry& reg = CalibrationRegistry::builtin());
double suvr_to_centaurz(Tracer t, double suvr,
                        const CalibrationRegistry& reg = CalibrationRegistry::builtin());
/// CenTauR units from an FTP-scale composite SUVr.
double suvr_to_centaur(double suvr);

/// Anchor a CL line on group means: CL(mean_ycn)=0, CL(mean_ad)=100.
std::pair<Level1Anchors, CalibrationLine> fit_level1(std::span<const double> ycn_suvr,
                                                     std::span<const double> ad_suvr);

/// Regress tracer on PiB SUVr over paired scans, then compose with the
/// Level-1 line so the tracer maps straight to CL. Returns the composed
/// line and the R^2 of the tracer~PiB regression.
std::pair<CalibrationLine, double> fit_level2(std::span<const double> pib_suvr,
                                              std::span<const double> tracer_suvr,
                                              const CalibrationLine& level1,
                                              Tracer tracer);

/// Slope in [0.98, 1.02], intercept in [-2, 2] CL, R^2 > 0.98.
CriteriaReport check_centiloid_criteria(std::span<const double> replicated_cl,
                                        std::span<const double> published_cl);

/// Regress local SUVr on published CTR values and invert the fit.
CentaurLevel1 fit_centaur_level1(std::span<const double> published_ctr,
                                 std::span<const double> local_suvr);

} // namespace atnquant::scales

#endif
