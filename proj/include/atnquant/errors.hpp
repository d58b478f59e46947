#ifndef ATNQUANT_ERRORS_HPP
#define ATNQUANT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace atnquant {

enum class ErrorCode {
  // file / stream problems
  io_error,
  bad_magic,
  unsupported_datatype,
  truncated_data,
  nonfinite_voxels,
  invalid_labels,
  // geometry
  singular_transform,
  geometry_mismatch,
  // ROI extraction
  empty_region,
  zero_reference,
  // calibration and statistics
  unknown_tracer,
  scale_mismatch,
  degenerate_anchors,
  degenerate_fit,
  degenerate_anova,
  zero_pooled_sd,
  // staging
  age_out_of_range,
  missing_structure,
  out_of_range,
  // mask derivation
  missing_partner,
  empty_selection,
  // phantom
  overlapping_blocks,
  // reporting / configuration
  incomplete_result,
  config_error,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

/// Process exit code for an error class (documented in the README).
int exit_code_for(ErrorCode code);

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace atnquant

#endif
