#include "hua/errors.hpp"

namespace hua {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parameter: return "parameter-error";
    case Errc::domain: return "domain-error";
    case Errc::singular: return "singular-error";
    case Errc::geometry: return "geometry-error";
    case Errc::numerical: return "numerical-error";
  }
  return "unknown-error";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace hua
