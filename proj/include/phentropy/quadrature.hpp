#pragma once

#include <functional>
#include <span>

namespace phentropy::quadrature {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  double tail_sigma = 12.0;  // Gaussian widths to the initial truncation radius

  /// Throws DomainError if a field is outside its documented range.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;  // panel errors plus the bound on the discarded tail
  int evaluations = 0;
  double truncation_radius = 0.0;
};

using Integrand = std::function<double(double)>;

/// Integral of f over [0, inf) for integrands that decay at least like a
/// Gaussian of width `scale`. The initial radius is
///     R = tail_sigma * scale * (1 + sqrt(spread)),
/// with `spread` typically n + gamma. [0, R] is cut into panels and refined by
/// global adaptive bisection with a 21-point Gauss-Kronrod rule (error from
/// the embedded 10-point Gauss rule). Panels of width R are then appended
/// past R until one contributes less than the tolerance; that last panel
/// bounds the discarded tail. `breakpoints` (e.g. the zeros of a density)
/// inside [0, R] become additional panel edges so that kinks there do not
/// fall inside a panel.
///
/// Throws ConvergenceError when max_subdivisions is exhausted and
/// DomainError when f returns a non-finite value.
QuadResult integrate_halfline(const Integrand& f, double scale, const QuadratureConfig& cfg = {},
                              double spread = 0.0, std::span<const double> breakpoints = {});

/// Adaptive Gauss-Kronrod on a finite interval [a, b], same error control.
QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {});

}  // namespace phentropy::quadrature
