#include "hk/error.hpp"

namespace hk {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::NonConverged: return "NON_CONVERGED";
    case Errc::PoleParameter: return "POLE_PARAMETER";
    case Errc::Domain: return "DOMAIN";
    case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Errc::LambdaZero: return "LAMBDA_ZERO";
    case Errc::QuadratureFail: return "QUADRATURE_FAIL";
    case Errc::GridTooSmall: return "GRID_TOO_SMALL";
    case Errc::AlphaOutOfRange: return "ALPHA_OUT_OF_RANGE";
    case Errc::Origin: return "ORIGIN";
    case Errc::ContourMismatch: return "CONTOUR_MISMATCH";
    case Errc::SeriesMismatch: return "SERIES_MISMATCH";
    case Errc::ProfileInvalid: return "PROFILE_INVALID";
    case Errc::TruncationDominant: return "TRUNCATION_DOMINANT";
    case Errc::UnknownSuite: return "UNKNOWN_SUITE";
    case Errc::ConfigInvalid: return "CONFIG_INVALID";
    case Errc::IllConditioned: return "ILL_CONDITIONED";
    case Errc::Io: return "IO";
  }
  return "UNKNOWN";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace hk
