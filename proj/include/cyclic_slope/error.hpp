#pragma once

#include <stdexcept>
#include <string>

namespace cyclic_slope {

enum class Errc {
  NonIntegralR,
  NotMultipleOfN,
  NonPositiveR,
  UnsupportedOrder,
  InvalidType,
  InvalidProfile,
  PreconditionViolated,
  ModNViolation,
  InvalidGerm,
  InconsistentModel,
  NonHalfIntegralM,
  DegenerateExample,
  LedgerIncomplete,
  IdentityViolation,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace cyclic_slope
