#pragma once

#include <stdexcept>
#include <string>

namespace fishdet {

enum class ErrorCode {
  unsupported_format,
  corrupt_file,
  io_failure,
  too_few_samples,
  out_of_domain,
  bad_target,
  bad_alpha,
  tile_too_small,
  too_few_points,
  bad_k,
  region_too_small,
  degenerate_region,
  empty_region,
  empty_mask,
  no_valid_pairs,
  degenerate_glcm,
  segmentation_empty,
  empty_dataset,
  dimension_mismatch,
  single_class,
  length_mismatch,
  empty_input,
  empty_confusion,
  bad_parameter,
  missing_label_dir,
  empty_class,
  all_images_rejected,
  model_version_mismatch,
  invalid_argument,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fishdet
