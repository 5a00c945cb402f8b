#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

/// Base of every error raised by the library. Each subclass carries a short
/// machine-readable kind() used by the CLI and the Python bindings.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define LEIBNIZ_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                           \
   public:                                                              \
    using Error::Error;                                                 \
    const char* kind() const noexcept override { return #Name; }        \
  };

LEIBNIZ_DEFINE_ERROR(ParseError)
LEIBNIZ_DEFINE_ERROR(NoLimit)
LEIBNIZ_DEFINE_ERROR(BadInverse)
LEIBNIZ_DEFINE_ERROR(BadParams)
LEIBNIZ_DEFINE_ERROR(InclusionViolated)
LEIBNIZ_DEFINE_ERROR(NotCocycle)
LEIBNIZ_DEFINE_ERROR(Undefined)
LEIBNIZ_DEFINE_ERROR(DimensionMismatch)
LEIBNIZ_DEFINE_ERROR(PreconditionViolation)
LEIBNIZ_DEFINE_ERROR(LimitNotLeibniz)
LEIBNIZ_DEFINE_ERROR(TargetMismatch)

#undef LEIBNIZ_DEFINE_ERROR

}  // namespace leibniz
