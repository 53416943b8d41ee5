#include "fishdet/error.hpp"

namespace fishdet {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::unsupported_format: return "UnsupportedFormat";
    case ErrorCode::corrupt_file: return "CorruptFile";
    case ErrorCode::io_failure: return "IoFailure";
    case ErrorCode::too_few_samples: return "TooFewSamples";
    case ErrorCode::out_of_domain: return "OutOfDomain";
    case ErrorCode::bad_target: return "BadTarget";
    case ErrorCode::bad_alpha: return "BadAlpha";
    case ErrorCode::tile_too_small: return "TileTooSmall";
    case ErrorCode::too_few_points: return "TooFewPoints";
    case ErrorCode::bad_k: return "BadK";
    case ErrorCode::region_too_small: return "RegionTooSmall";
    case ErrorCode::degenerate_region: return "DegenerateRegion";
    case ErrorCode::empty_region: return "EmptyRegion";
    case ErrorCode::empty_mask: return "EmptyMask";
    case ErrorCode::no_valid_pairs: return "NoValidPairs";
    case ErrorCode::degenerate_glcm: return "DegenerateGlcm";
    case ErrorCode::segmentation_empty: return "SegmentationEmpty";
    case ErrorCode::empty_dataset: return "EmptyDataset";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::single_class: return "SingleClass";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::empty_confusion: return "EmptyConfusion";
    case ErrorCode::bad_parameter: return "BadParameter";
    case ErrorCode::missing_label_dir: return "MissingLabelDir";
    case ErrorCode::empty_class: return "EmptyClass";
    case ErrorCode::all_images_rejected: return "AllImagesRejected";
    case ErrorCode::model_version_mismatch: return "ModelVersionMismatch";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace fishdet
