#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stretchlab {

enum class ErrorKind {
  NotHyperbolic,
  OutsideTriangle,
  InvalidTriangulation,
  InvalidCurve,
  IncompatibleLoop,
  EllipticHolonomy,
  NotStandardTorus,
  BasisChangeFailed,
  ZeroLength,
  IncompleteStructure,
  InvalidTrack,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; the kind drives CLI exit codes.
class StretchError : public std::runtime_error {
 public:
  StretchError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stretchlab
