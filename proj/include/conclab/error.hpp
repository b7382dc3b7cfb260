#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conclab {

enum class ErrorCode {
  NotSquare,
  NotFinite,
  NotHermitian,
  NotPSD,
  InvalidTrace,
  DimNotPowerOfTwo,
  InvalidPermutation,
  NotNormalized,
  FamilyMismatch,
  IncompleteChannel,
  DimensionMismatch,
  InvalidAssignment,
  OutOfRange,
  UnsupportedN,
  WrongDimension,
  InvalidBipartition,
  ArityMismatch,
  InvalidConfig,
  SpectralLeak,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. Validation failures (bad input) are
// distinguished from assertion failures, which signal that a numerical
// assumption of the model was violated at run time.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_assertion() const noexcept { return code_ == ErrorCode::SpectralLeak; }

 private:
  ErrorCode code_;
};

}  // namespace conclab
