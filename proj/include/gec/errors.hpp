#pragma once

#include <stdexcept>
#include <string>

namespace gec {

enum class ErrorKind {
  kInvalidArgument,
  kDomain,
  kNonFinite,
  kFieldSingularity,
  kBootstrapFailure,
  kRebootLimit,
};

/// Base error for everything thrown by this library. The kind lets callers
/// (the solver's reboot logic, the CLI's exit codes) branch without string
/// matching.
class GecError : public std::runtime_error {
 public:
  GecError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gec
