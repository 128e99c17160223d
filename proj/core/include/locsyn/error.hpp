#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locsyn {

enum class ErrorCode {
  DegenerateInput,
  AxisPole,
  NormUndefined,
  NotFactorable,
  ImproperTransfer,
  ShapeError,
  IndexError,
  WrongFamily,
  NotControllable,
  UnsupportedPlant,
  InvalidParameter,
  UnsupportedObjective,
  UnsupportedBand,
  NotAchievable,
  StepTooLarge,
  OracleUnavailable,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace locsyn
