#pragma once

#include <stdexcept>
#include <string>

namespace hk {

enum class Errc {
  NonConverged,
  PoleParameter,
  Domain,
  DimensionMismatch,
  LambdaZero,
  QuadratureFail,
  GridTooSmall,
  AlphaOutOfRange,
  Origin,
  ContourMismatch,
  SeriesMismatch,
  ProfileInvalid,
  TruncationDominant,
  UnknownSuite,
  ConfigInvalid,
  IllConditioned,
  Io,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hk
