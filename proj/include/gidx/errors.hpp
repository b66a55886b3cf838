#pragma once

#include <stdexcept>
#include <string>

namespace gidx {

// Failure taxonomy shared by all modules. The CLI maps these onto exit codes.
enum class Errc {
  ConfigError,          // malformed or inconsistent input description
  UnsupportedAction,    // operation not defined for this action kind
  ActionMismatch,       // operands built over different actions
  ChartOverflow,        // point left the numerically representable chart range
  WindowTooSmall,       // truncation window cannot hold the symbol support
  BandwidthExceeded,    // requested bandwidth exceeds the sampling grid
  NotInvertible,        // inverse residual floor reached
  SupportExceeded,      // inverse support cap exhausted
  InverseResidualTooLarge, // supplied inverse fails its residual check
  VanishingSymbol,      // winding/ellipticity input vanishes on the grid
  VanishingDeterminant, // matrix symbol determinant vanishes on the grid
  NotCyclic,            // finite-group operation on a non-cyclic action
  SnapFailure,          // integral failed to snap to an integer
  NoStabilization,      // truncation sweep did not stabilize
  NotElliptic,          // computation requires an elliptic symbol
  QuadratureFailure,    // quadrature resolution cap exceeded
  InsufficientDecay,    // line function does not decay at the grid edge
  PreconditionFailed,   // documented operation precondition violated
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

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gidx
