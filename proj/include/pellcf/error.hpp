#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pellcf {

enum class Errc {
  perfect_square,
  out_of_domain,
  not_solvable,
  bad_unit,
  invalid_params,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::perfect_square: return "perfect_square";
    case Errc::out_of_domain: return "out_of_domain";
    case Errc::not_solvable: return "not_solvable";
    case Errc::bad_unit: return "bad_unit";
    case Errc::invalid_params: return "invalid_params";
  }
  return "unknown";
}

/// Raised when an operation's input lies outside its domain. The code is
/// stable and is what the CLI maps to exit statuses.
class Error : public std::domain_error {
 public:
  Error(Errc code, const std::string& what) : std::domain_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pellcf
