#include "atnquant/errors.hpp"

namespace atnquant {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::bad_magic: return "BadMagic";
    case ErrorCode::unsupported_datatype: return "UnsupportedDatatype";
    case ErrorCode::truncated_data: return "TruncatedData";
    case ErrorCode::nonfinite_voxels: return "NonFiniteVoxels";
    case ErrorCode::invalid_labels: return "InvalidLabels";
    case ErrorCode::singular_transform: return "SingularTransform";
    case ErrorCode::geometry_mismatch: return "GeometryMismatch";
    case ErrorCode::empty_region: return "EmptyRegion";
    case ErrorCode::zero_reference: return "ZeroReference";
    case ErrorCode::unknown_tracer: return "UnknownTracer";
    case ErrorCode::scale_mismatch: return "ScaleMismatch";
    case ErrorCode::degenerate_anchors: return "DegenerateAnchors";
    case ErrorCode::degenerate_fit: return "DegenerateFit";
    case ErrorCode::degenerate_anova: return "DegenerateAnova";
    case ErrorCode::zero_pooled_sd: return "ZeroPooledSd";
    case ErrorCode::age_out_of_range: return "AgeOutOfRange";
    case ErrorCode::missing_structure: return "MissingStructure";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::missing_partner: return "MissingPartner";
    case ErrorCode::empty_selection: return "EmptySelection";
    case ErrorCode::overlapping_blocks: return "OverlappingBlocks";
    case ErrorCode::incomplete_result: return "IncompleteResult";
    case ErrorCode::config_error: return "ConfigError";
  }
  return "UnknownError";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::io_error:
      return 3;
    case ErrorCode::bad_magic:
    case ErrorCode::unsupported_datatype:
    case ErrorCode::truncated_data:
    case ErrorCode::nonfinite_voxels:
    case ErrorCode::invalid_labels:
      return 4;
    case ErrorCode::singular_transform:
    case ErrorCode::geometry_mismatch:
      return 5;
    case ErrorCode::empty_region:
    case ErrorCode::zero_reference:
    case ErrorCode::missing_partner:
    case ErrorCode::empty_selection:
    case ErrorCode::zero_pooled_sd:
      return 6;
    case ErrorCode::degenerate_anchors:
    case ErrorCode::degenerate_fit:
    case ErrorCode::degenerate_anova:
      return 7;
    case ErrorCode::unknown_tracer:
    case ErrorCode::scale_mismatch:
    case ErrorCode::age_out_of_range:
    case ErrorCode::missing_structure:
    case ErrorCode::out_of_range:
      return 8;
    case ErrorCode::overlapping_blocks:
    case ErrorCode::incomplete_result:
    case ErrorCode::config_error:
      return 9;
  }
  return 1;
}

} // namespace atnquant
