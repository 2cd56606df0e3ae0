#include "phentropy/measures.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "phentropy/errors.hpp"
#include "phentropy/specfun.hpp"

namespace phentropy {

namespace {

using boost::math::lgamma;
constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateBand = 1e-6;

bool is_integer(double q) { return std::isfinite(q) && q == std::floor(q); }

int idx(Space s) { return static_cast<int>(s); }

double norm_deficit(const StateParams& s, Space space) {
  const auto lv = log_entropic_moment_bell(shape(s, space), 1);
  return std::abs(std::expm1(lv.log_abs));
}

// Prefactor actually in use relative to the reference one; the closed forms
// are linear in it.
double prefactor_scale(const StateParams& s, Space space) {
  return std::exp(s.log_prefactor[idx(space)] - s.log_reference_prefactor[idx(space)]);
}

quadrature::QuadResult integrate(const StateParams& s, Space space, const quadrature::Integrand& f,
                                 const quadrature::QuadratureConfig& cfg, double width_factor = 1.0) {
  // Nodes are kinks for non-integer powers and for the logarithm.
  const auto nodes = density_nodes(s, space);
  return quadrature::integrate_halfline(f, width(s, space) * width_factor, cfg, s.n + s.gamma_ell, nodes);
}

void check_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("entropic index q must be a finite number > 0");
}

void check_not_degenerate(double q) {
  if (std::abs(q - 1.0) <= kDegenerateBand) {
    throw DegenerateParameter("q = " + std::to_string(q) + " is within 1e-6 of 1; use the Shannon entropy");
  }
}

// ln W_q with its relative error; the log is kept so that Renyi does not
// lose digits on extreme moments.
struct LogMoment {
  double log_value;
  double rel_err;
  double truncation_radius;
  Method method;
};

LogMoment log_wq(const StateParams& s, double q, Space space, Method method, const quadrature::QuadratureConfig& cfg) {
  check_q(q);
  if (method == Method::Analytic) {
    if (!is_integer(q)) throw UnsupportedMethod("analytic W_q needs an integer q; use quadrature");
    const int qi = static_cast<int>(q);
    if (space == Space::Position) {
      const auto th = specfun::theta0_log(qi, s.n, s.gamma_ell);
      const double a = qi * s.gamma_ell + 1.5;
      const double log_w = std::log(2.0 * kPi) + qi * s.log_prefactor[idx(space)] -
                           a * std::log(2.0 * s.lambda * qi) + th.log_abs;
      return {log_w, th.rel_error, 0.0, method};
    }
    const auto lv = log_entropic_moment_bell(shape(s, space), qi);
    return {lv.log_abs, lv.rel_error, 0.0, method};
  }
  const auto f = [&](double x) {
    if (x == 0.0) return 0.0;
    const double ld = log_density(s, space, x);
    if (ld == -std::numeric_limits<double>::infinity()) return 0.0;
    return std::exp(q * ld + 2.0 * std::log(x));
  };
  // density^q is narrower by sqrt(q).
  const auto r = integrate(s, space, f, cfg, q > 1.0 ? 1.0 : 1.0 / std::sqrt(q));
  if (!(r.value > 0.0)) throw ConvergenceError("entropic moment quadrature returned a non-positive value", r.value, r.err_estimate);
  return {std::log(4.0 * kPi * r.value), r.err_estimate / r.value, r.truncation_radius, method};
}

}  // namespace

const char* to_string(Kind k) noexcept {
  switch (k) {
    case Kind::Fisher: return "fisher";
    case Kind::Shannon: return "shannon";
    case Kind::Renyi: return "renyi";
    case Kind::Tsallis: return "tsallis";
    case Kind::Onicescu: return "onicescu";
    case Kind::Wq: return "wq";
  }
  return "?";
}

const char* to_string(Method m) noexcept { return m == Method::Analytic ? "analytic" : "quadrature"; }

bool analytic_supported(Kind kind, Space space, std::optional<double> q, int n) noexcept {
  switch (kind) {
    case Kind::Fisher: return space == Space::Position || n == 0;
    case Kind::Shannon: return n >= 1;
    case Kind::Onicescu: return true;
    case Kind::Wq: return q && *q >= 1.0 && is_integer(*q);
    case Kind::Renyi:
    case Kind::Tsallis: return q && *q >= 2.0 && is_integer(*q);
  }
  return false;
}

MeasureResult wq(const StateParams& s, double q, Space space, Method method, const quadrature::QuadratureConfig& cfg) {
  const auto lm = log_wq(s, q, space, method, cfg);
  MeasureResult r;
  r.kind = Kind::Wq;
  r.space = space;
  r.q = q;
  r.value = std::exp(lm.log_value);
  r.method = method;
  r.err_estimate = lm.rel_err * r.value;
  r.norm_deficit = norm_deficit(s, space);
  r.truncation_radius = lm.truncation_radius;
  return r;
}

MeasureResult fisher(const StateParams& s, Space space, Method method, const quadrature::QuadratureConfig& cfg) {
  MeasureResult r;
  r.kind = Kind::Fisher;
  r.space = space;
  r.method = method;
  r.norm_deficit = norm_deficit(s, space);
  const double g = s.gamma_ell;
  if (method == Method::Analytic) {
    if (space == Space::Position) {
      r.value = std::pow(2.0, (13.0 - 2.0 * g) / 4.0) * kPi * s.lambda / (1.0 + 2.0 * g) *
                ((4.0 * s.n + 3.0) + (8.0 * s.n + 4.0) * g);
    } else {
      if (s.n != 0) throw UnsupportedMethod("analytic momentum Fisher information exists for n = 0 only");
      r.value = std::pow(2.0, (7.0 - 6.0 * g) / 4.0) * kPi * (3.0 + 4.0 * g) / (s.lambda * (1.0 + 2.0 * g));
    }
    r.value *= prefactor_scale(s, space);
    r.err_estimate = 4.0 * std::numeric_limits<double>::epsilon() * r.value;
    return r;
  }
  const auto q = integrate(s, space, [&](double x) { return fisher_integrand(s, space, x); }, cfg);
  r.value = 4.0 * kPi * q.value;
  r.err_estimate = 4.0 * kPi * q.err_estimate;
  r.truncation_radius = q.truncation_radius;
  return r;
}

MeasureResult shannon(const StateParams& s, Space space, Method method, const quadrature::QuadratureConfig& cfg) {
  MeasureResult r;
  r.kind = Kind::Shannon;
  r.space = space;
  r.method = method;
  r.norm_deficit = norm_deficit(s, space);
  if (method == Method::Analytic) {
    if (s.n < 1) throw UnsupportedMethod("analytic Shannon entropy needs n >= 1 (the asymptotic contains ln n)");
    const double g = s.gamma_ell;
    const double a = s.n + g + 1.5;
    const double sign = space == Space::Position ? -1.0 : 1.0;
    r.value = 2.0 * s.n + g + 1.5 - (std::log(2.0) + lgamma(s.n + 1.0) - lgamma(a)) -
              g * boost::math::digamma(a) + sign * 1.5 * std::log(2.0 * s.lambda) +
              entropic_integral_asymptotic(s.n, g);
    r.approximate = true;
    return r;
  }
  const auto f = [&](double x) {
    if (x == 0.0) return 0.0;
    const double ld = log_density(s, space, x);
    if (ld == -std::numeric_limits<double>::infinity()) return 0.0;
    return x * x * std::exp(ld) * ld;
  };
  const auto q = integrate(s, space, f, cfg);
  r.value = -4.0 * kPi * q.value;
  r.err_estimate = 4.0 * kPi * q.err_estimate;
  r.truncation_radius = q.truncation_radius;
  return r;
}

MeasureResult renyi(const StateParams& s, double q, Space space, Method method, const quadrature::QuadratureConfig& cfg) {
  check_q(q);
  check_not_degenerate(q);
  const auto lm = log_wq(s, q, space, method, cfg);
  MeasureResult r;
  r.kind = Kind::Renyi;
  r.space = space;
  r.q = q;
  r.method = method;
  r.value = lm.log_value / (1.0 - q);
  r.err_estimate = lm.rel_err / std::abs(1.0 - q);
  r.norm_deficit = norm_deficit(s, space);
  r.truncation_radius = lm.truncation_radius;
  return r;
}

MeasureResult tsallis(const StateParams& s, double q, Space space, Method method,
                      const quadrature::QuadratureConfig& cfg) {
  check_q(q);
  check_not_degenerate(q);
  auto r = wq(s, q, space, method, cfg);
  const double w = r.value;
  r.kind = Kind::Tsallis;
  r.value = (1.0 - w) / (q - 1.0);
  r.err_estimate /= std::abs(q - 1.0);
  return r;
}

MeasureResult onicescu(const StateParams& s, Space space, Method method, const quadrature::QuadratureConfig& cfg) {
  auto r = wq(s, 2.0, space, method, cfg);
  r.kind = Kind::Onicescu;
  r.q.reset();
  return r;
}

double ratio(const StateParams& s, RatioKind kind, std::optional<double> q, const quadrature::QuadratureConfig& cfg) {
  constexpr auto M = Method::Quadrature;
  switch (kind) {
    case RatioKind::Fisher:
      return std::sqrt(fisher(s, Space::Position, M, cfg).value / fisher(s, Space::Momentum, M, cfg).value);
    case RatioKind::Shannon:
      return std::exp((shannon(s, Space::Momentum, M, cfg).value - shannon(s, Space::Position, M, cfg).value) / 3.0);
    case RatioKind::Renyi:
      if (!q) throw DomainError("Renyi ratio needs q");
      return std::exp(
          (renyi(s, *q, Space::Momentum, M, cfg).value - renyi(s, *q, Space::Position, M, cfg).value) / 3.0);
  }
  return 0.0;
}

double entropic_integral_asymptotic(int n, double gamma_l) {
  if (n < 1) throw DomainError("entropic_integral_asymptotic: n must be >= 1");
  return -2.0 * n + (gamma_l + 1.5) * std::log(n) - (gamma_l + 0.5) - 2.0 + std::log(2.0 * kPi);
}

quadrature::QuadResult entropic_integral(int n, double gamma_l, const quadrature::QuadratureConfig& cfg) {
  if (n < 0) throw DomainError("entropic_integral: n must be >= 0");
  const double alpha = gamma_l + 0.5;
  const double log_k = lgamma(n + alpha + 1.0) - lgamma(n + 1.0);
  // t = x^2 keeps the t^alpha factor smooth at the origin.
  const auto f = [&](double x) {
    if (x == 0.0) return 0.0;
    const double t = x * x;
    const double l = specfun::laguerre(n, alpha, t);
    if (l == 0.0) return 0.0;
    const double log_lt2 = 2.0 * std::log(std::abs(l)) - log_k;
    return 2.0 * x * std::exp(alpha * std::log(t) - t + log_lt2) * log_lt2;
  };
  auto nodes = specfun::laguerre_roots(n, alpha);
  for (double& t : nodes) t = std::sqrt(t);
  auto r = quadrature::integrate_halfline(f, 1.0, cfg, n + alpha, nodes);
  r.value = -r.value;
  return r;
}

}  // namespace phentropy
