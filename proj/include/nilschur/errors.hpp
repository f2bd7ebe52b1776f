#ifndef NILSCHUR_ERRORS_HPP
#define NILSCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilschur {

/// Severity drives the CLI exit code: input problems are the caller's fault,
/// internal problems mean a proved statement failed or a cross-check broke.
enum class Severity { input = 1, internal = 2 };

class Error : public std::runtime_error {
 public:
  Error(Severity severity, std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), severity_(severity), kind_(std::move(kind)) {}

  Severity severity() const noexcept { return severity_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  Severity severity_;
  std::string kind_;
};

/// Bad user input that is not tied to a richer witness type.
class InputError : public Error {
 public:
  InputError(std::string kind, const std::string& what)
      : Error(Severity::input, std::move(kind), what) {}
};

class DimensionMismatch : public InputError {
 public:
  explicit DimensionMismatch(const std::string& what) : InputError("DimensionMismatch", what) {}
};

class PreconditionFailed : public InputError {
 public:
  explicit PreconditionFailed(const std::string& what) : InputError("PreconditionFailed", what) {}
};

/// A cross-check between two independent computations disagreed.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : Error(Severity::internal, "InternalInconsistency", what) {}
};

/// A proved inequality or identity failed on validated input.
class TheoremViolation : public Error {
 public:
  explicit TheoremViolation(const std::string& what)
      : Error(Severity::internal, "TheoremViolation", what) {}
};

}  // namespace nilschur

#endif  // NILSCHUR_ERRORS_HPP
