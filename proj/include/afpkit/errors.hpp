#pragma once

#include <stdexcept>
#include <string>

namespace afpkit {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyInput : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Two distinct generators cannot be told apart by any supplied functional.
struct SeparationFailure : Error {
  using Error::Error;
};

/// The seminorm failed its axiom audit (subadditivity, homogeneity,
/// rescaling bound or separation).
struct AdmissibilityFailure : Error {
  using Error::Error;
};

/// Greedy net construction exceeded the configured point cap; the radius is
/// too small for the supplied grid density.
struct NetOverflow : Error {
  NetOverflow(const std::string& what, std::size_t cap) : Error(what), cap(cap) {}
  std::size_t cap;
};

/// All partition weights vanished at a query point: the net does not cover
/// it, which signals a coverage-certification gap.
struct UncoveredPoint : Error {
  using Error::Error;
};

/// A map output could not be re-fit into the hull of the net.
struct MapLeavesHull : Error {
  MapLeavesHull(const std::string& what, double refit_residual)
      : Error(what), refit_residual(refit_residual) {}
  double refit_residual;
};

struct DimensionTooHigh : Error {
  using Error::Error;
};

/// extract_fixed_point: the trace has not converged far enough.
struct NotFound : Error {
  NotFound(const std::string& what, double best_residual)
      : Error(what), best_residual(best_residual) {}
  double best_residual;
};

/// A priori bound exceeded its cap before the horizon.
struct BlowUp : Error {
  BlowUp(const std::string& what, double time) : Error(what), time(time) {}
  double time;
};

/// An integral-operator output left the slack-widened tube.
struct TubeViolation : Error {
  TubeViolation(const std::string& what, double worst_excess)
      : Error(what), worst_excess(worst_excess) {}
  double worst_excess;
};

/// Picard iteration residual grew for several consecutive iterates.
struct Diverged : Error {
  using Error::Error;
};

struct EstimateViolated : Error {
  EstimateViolated(const std::string& what, std::string detail)
      : Error(what), detail(std::move(detail)) {}
  std::string detail;
};

struct ConfigInvalid : Error {
  ConfigInvalid(const std::string& what, int line) : Error(what), line(line) {}
  int line;
};

}  // namespace afpkit
