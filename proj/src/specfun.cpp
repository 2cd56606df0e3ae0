#include "phentropy/specfun.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>

namespace phentropy::specfun {

using boost::math::lgamma;

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

LaguerreValue laguerre_with_derivative(int n, double alpha, double x) {
  const double value = laguerre(n, alpha, x);
  const double derivative = n == 0 ? 0.0 : -laguerre(n - 1, alpha + 1.0, x);
  return {value, derivative};
}

std::vector<double> laguerre_roots(int n, double alpha) {
  if (n < 0) throw DomainError("laguerre_roots: degree must be >= 0");
  if (alpha <= -1.0) throw DomainError("laguerre_roots: alpha must be > -1");
  if (n == 0) return {};
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k * (k + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
  std::vector<double> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (double& x : roots) {
    for (int it = 0; it < 3; ++it) {
      const auto lv = laguerre_with_derivative(n, alpha, x);
      if (lv.derivative == 0.0) break;
      x -= lv.value / lv.derivative;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double log_binomial(double a, double b) { return lgamma(a + 1.0) - lgamma(b + 1.0) - lgamma(a - b + 1.0); }

PolyCoeffs orthonormal_laguerre_coeffs(int n, double alpha) {
  if (n < 0) throw DomainError("orthonormal_laguerre_coeffs: degree must be >= 0");
  if (alpha <= -1.0) throw DomainError("orthonormal_laguerre_coeffs: alpha must be > -1");
  PolyCoeffs out;
  out.c.resize(n + 1);
  const double log_norm = 0.5 * (lgamma(n + alpha + 1.0) - lgamma(n + 1.0));
  for (int k = 0; k <= n; ++k) {
    const double log_mag = log_norm - lgamma(alpha + k + 1.0) + log_binomial(n, k);
    out.c[k] = (k % 2 ? -1.0 : 1.0) * std::exp(log_mag);
  }
  return out;
}

double lauricella_fa_symmetric(double a, int n, double c, int s, int k, double t) {
  if (n < 0 || k < 0 || s < 1) throw DomainError("lauricella_fa_symmetric: requires n >= 0, k >= 0, s >= 1");
  const auto lv = precision::evaluate_on_ladder([&]<class Real>(std::type_identity<Real>) {
    return kernel::lauricella_fa_symmetric<Real>(Real(a), n, Real(c), s, k, Real(t));
  });
  return lv.value();
}

precision::LogValue theta0_log(int q, int n, double gamma_ell) {
  if (q < 1) throw DomainError("theta0: q must be an integer >= 1");
  if (n < 0) throw DomainError("theta0: n must be >= 0");
  const double a = q * gamma_ell + 1.5;
  const double c = gamma_ell + 1.5;
  auto fa = precision::evaluate_on_ladder([&]<class Real>(std::type_identity<Real>) {
    // 1/q formed in the working precision, not rounded through double.
    return kernel::lauricella_fa_symmetric<Real>(Real(a), n, Real(c), 2 * q, 0, Real(1) / Real(q));
  });
  fa.log_abs += lgamma(a) + 2.0 * q * log_binomial(n + gamma_ell + 0.5, n);
  return fa;
}

double theta0(int q, int n, double gamma_ell) { return theta0_log(q, n, gamma_ell).value(); }

precision::LogValue orthonormal_laguerre_power_moment(int n, double alpha, int s, double mu, double rate) {
  if (n < 0 || s < 1) throw DomainError("orthonormal_laguerre_power_moment: requires n >= 0, s >= 1");
  if (rate <= 0.0 || mu <= -1.0) throw DomainError("orthonormal_laguerre_power_moment: divergent integral");
  auto lv = precision::evaluate_on_ladder([&]<class Real>(std::type_identity<Real>) {
    return kernel::laguerre_power_moment_scaled<Real>(n, Real(alpha), s, Real(mu), Real(rate));
  });
  const double log_c0 = 0.5 * (lgamma(n + alpha + 1.0) - lgamma(n + 1.0)) - lgamma(alpha + 1.0);
  lv.log_abs += s * log_c0 + lgamma(mu + 1.0) - (mu + 1.0) * std::log(rate);
  return lv;
}

}  // namespace phentropy::specfun
