#include "locsyn/error.hpp"

namespace locsyn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::AxisPole: return "AxisPole";
    case ErrorCode::NormUndefined: return "NormUndefined";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::ImproperTransfer: return "ImproperTransfer";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::NotControllable: return "NotControllable";
    case ErrorCode::UnsupportedPlant: return "UnsupportedPlant";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnsupportedObjective: return "UnsupportedObjective";
    case ErrorCode::UnsupportedBand: return "UnsupportedBand";
    case ErrorCode::NotAchievable: return "NotAchievable";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::OracleUnavailable: return "OracleUnavailable";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace locsyn
