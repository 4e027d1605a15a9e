#pragma once

#include <stdexcept>
#include <string>

namespace hua {

enum class Errc {
  invalid_argument,  // malformed input, size mismatch, group relation violated
  parameter,         // pole in a series denominator parameter
  domain,            // argument outside the convergence domain
  singular,          // h(z,u) = 0 or non-invertible Cz + D
  geometry,          // FD stencil too close to a singular set
  numerical,         // non-finite values, persistent numerical failure
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hua
