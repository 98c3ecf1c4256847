#pragma once

#include <stdexcept>
#include <string>

namespace levyport {

/// Argument outside the mathematical domain of an operation (x <= 0, t outside
/// [0,T], field evaluated off its domain, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Derivative order outside the supported range.
struct UnsupportedOrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Adaptive refinement failed to converge. Carries the last two estimates so
/// the caller can judge how bad the disagreement is.
struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& what, double last, double previous)
      : std::runtime_error(what), last_estimate(last), prev_estimate(previous) {}
  double last_estimate;
  double prev_estimate;
};

/// A second-order term evaluated to a non-finite value on the envelope grid.
struct EnvelopeError : std::runtime_error {
  EnvelopeError(const std::string& what, int term, double at_x)
      : std::runtime_error(what), term_index(term), x(at_x) {}
  int term_index;
  double x;
};

/// V_xx >= 0 where the first-order-condition portfolio needs concavity.
struct NonConcavityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Backward stepping hit a point where the surface is no longer concave.
struct SchemeBreakdownError : std::runtime_error {
  SchemeBreakdownError(const std::string& what, double at_t, double at_x, double at_y)
      : std::runtime_error(what), t(at_t), x(at_x), y(at_y) {}
  double t;
  double x;
  double y;
};

/// Nested-quadrature evaluation budget exhausted.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Run-config validation failure (missing sections, unknown keys, bad values).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Expected-utility estimate requested on a bundle with positivity violations.
struct AdmissibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Benchmark quadratic has complex roots.
struct DiscriminantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Benchmark quadratic roots do not split into a nonpositive and a positive one.
struct RootSignError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace levyport
