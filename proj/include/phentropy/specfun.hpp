#pragma once

// Special-function kernel: generalized Laguerre polynomials, the
// orthonormal-Laguerre monomial coefficients, integer powers of polynomials
// (by convolution and by partial Bell polynomials), the terminating
// symmetric Lauricella F_A series and the linearization coefficient Theta_0.
//
// Sums that cancel are written as templates over the scalar type and run
// through precision::evaluate_on_ladder by the double-valued entry points.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "phentropy/errors.hpp"
#include "phentropy/precision.hpp"

namespace phentropy::specfun {

/// Dense polynomial, coefficients in ascending powers.
template <class Real>
struct Polynomial {
  std::vector<Real> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }

  Real operator()(const Real& x) const {
    Real acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
  }
};

using PolyCoeffs = Polynomial<double>;

/// L_n^alpha(x) by the forward three-term recurrence.
double laguerre(int n, double alpha, double x);

struct LaguerreValue {
  double value;
  double derivative;  // d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x)
};
LaguerreValue laguerre_with_derivative(int n, double alpha, double x);

/// Zeros of L_n^alpha in ascending order: eigenvalues of the symmetric
/// tridiagonal Jacobi matrix, polished by Newton steps. alpha > -1.
std::vector<double> laguerre_roots(int n, double alpha);

/// Monomial coefficients of the orthonormal polynomial
/// sqrt(n!/Gamma(n+alpha+1)) * L_n^alpha, orthonormal for the weight x^alpha e^{-x}.
PolyCoeffs orthonormal_laguerre_coeffs(int n, double alpha);

/// c(x)^s by repeated convolution.
template <class Real>
Polynomial<Real> poly_power(const Polynomial<Real>& base, int s) {
  if (s < 1) throw DomainError("poly_power: exponent must be >= 1");
  if (base.c.empty()) return base;
  Polynomial<Real> acc = base;
  for (int step = 1; step < s; ++step) {
    std::vector<Real> next(acc.c.size() + base.c.size() - 1, Real(0));
    for (std::size_t i = 0; i < acc.c.size(); ++i) {
      if (acc.c[i] == 0) continue;
      for (std::size_t j = 0; j < base.c.size(); ++j) next[i + j] += acc.c[i] * base.c[j];
    }
    acc.c = std::move(next);
  }
  return acc;
}

/// Table of partial Bell polynomials B_{m,t}(a_1, a_2, ...) for
/// 0 <= m <= m_max and 0 <= t <= t_max, built with
///   B_{m,t} = sum_{i=1}^{m-t+1} C(m-1, i-1) a_i B_{m-i,t-1}.
/// `a[i-1]` holds a_i; entries past the end of `a` are treated as zero.
template <class Real>
class BellTable {
 public:
  BellTable(int m_max, int t_max, std::span<const Real> a)
      : m_max_(m_max), t_max_(t_max), table_((m_max + 1) * (t_max + 1), Real(0)) {
    // Pascal rows in Real: binomials reach 1e60+ for the sizes used here.
    std::vector<std::vector<Real>> binom(m_max + 1);
    for (int m = 0; m <= m_max; ++m) {
      binom[m].assign(m + 1, Real(1));
      for (int j = 1; j < m; ++j) binom[m][j] = binom[m - 1][j - 1] + binom[m - 1][j];
    }
    at(0, 0) = 1;
    const int a_len = static_cast<int>(a.size());
    for (int t = 1; t <= t_max; ++t) {
      for (int m = t; m <= m_max; ++m) {
        Real sum = 0;
        const int i_max = std::min(m - t + 1, a_len);
        for (int i = 1; i <= i_max; ++i) {
          if (a[i - 1] == 0) continue;
          sum += binom[m - 1][i - 1] * a[i - 1] * at(m - i, t - 1);
        }
        at(m, t) = sum;
      }
    }
  }

  const Real& operator()(int m, int t) const { return table_[m * (t_max_ + 1) + t]; }

 private:
  Real& at(int m, int t) { return table_[m * (t_max_ + 1) + t]; }

  int m_max_;
  int t_max_;
  std::vector<Real> table_;
};

/// Partial Bell polynomial B_{m,t}(a_1, ..., a_{m-t+1}).
template <class Real>
Real bell_polynomial(int m, int t, std::span<const Real> a) {
  if (t < 0 || m < 0) throw DomainError("bell_polynomial: negative index");
  if (t == 0) return m == 0 ? Real(1) : Real(0);
  if (t > m) return Real(0);
  return BellTable<Real>(m, t, a)(m, t);
}

inline double bell_polynomial(int m, int t, std::span<const double> a) {
  return bell_polynomial<double>(m, t, a);
}

/// Coefficients of (sum_k c_k x^k)^s through the Bell-polynomial identity
///   [x^k] = s!/(k+s)! * B_{k+s,s}(1! c_0, 2! c_1, ..., (k+1)! c_k).
template <class Real>
Polynomial<Real> bell_power_coefficients(const Polynomial<Real>& base, int s) {
  if (s < 1) throw DomainError("bell_power_coefficients: exponent must be >= 1");
  const int d = base.degree();
  const int k_max = s * d;
  const int m_max = k_max + s;
  std::vector<Real> a(d + 1);
  Real fact = 1;
  for (int i = 1; i <= d + 1; ++i) {
    fact *= i;
    a[i - 1] = fact * base.c[i - 1];
  }
  BellTable<Real> bell(m_max, s, a);
  Polynomial<Real> out;
  out.c.resize(k_max + 1);
  // ratio = s!/(k+s)!
  Real ratio = 1;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) ratio /= (k + s);
    out.c[k] = ratio * bell(k + s, s);
  }
  return out;
}

namespace kernel {

/// Terminating symmetric Lauricella F_A^{(s+1)} with s identical slots
/// (upper -n, lower c, argument t) plus one slot (upper -k, lower 1, argument 1):
///   sum_{J,i} (a)_{J+i} [T^s]_J t^J (-k)_i / (i! i!),
///   T(y) = sum_{j=0}^n (-n)_j / ((c)_j j!) y^j.
template <class Real>
precision::Bounded<Real> lauricella_fa_symmetric(const Real& a, int n, const Real& c, int s, int k,
                                                 const Real& t) {
  using std::abs;
  Polynomial<Real> tpoly, tabs;
  tpoly.c.resize(n + 1);
  tabs.c.resize(n + 1);
  tpoly.c[0] = 1;
  for (int j = 0; j < n; ++j) tpoly.c[j + 1] = tpoly.c[j] * Real(j - n) / ((c + j) * Real(j + 1));
  for (int j = 0; j <= n; ++j) tabs.c[j] = abs(tpoly.c[j]);
  const Polynomial<Real> p = poly_power(tpoly, s);
  const Polynomial<Real> pabs = poly_power(tabs, s);

  Real value = 0, magnitude = 0;
  Real poch = 1;  // (a)_{J+i}, advanced along J for i = 0
  Real tpow = 1;
  for (int big_j = 0; big_j <= p.degree(); ++big_j) {
    Real inner = 0, inner_abs = 0;
    Real poch_i = poch;  // (a)_{J+i}
    Real last = 1;       // (-k)_i / (i! i!)
    for (int i = 0; i <= k; ++i) {
      if (i > 0) {
        poch_i *= a + Real(big_j + i - 1);
        last *= Real(i - 1 - k) / (Real(i) * Real(i));
      }
      inner += poch_i * last;
      inner_abs += abs(poch_i * last);
    }
    value += inner * p.c[big_j] * tpow;
    magnitude += inner_abs * pabs.c[big_j] * abs(tpow);
    poch *= a + Real(big_j);
    tpow *= t;
  }
  return {value, magnitude, 4.0 * (s * (n + 1) + p.degree() + k + 2)};
}

/// sum_k [L~^s]_k * prod_{j<k} (mu+j+1)/rate using Bell polynomials, where
/// L~ is the orthonormal Laguerre polynomial with its constant term scaled
/// to 1. The caller restores c_0^s * Gamma(mu+1)/rate^{mu+1}.
template <class Real>
precision::Bounded<Real> laguerre_power_moment_scaled(int n, const Real& alpha, int s, const Real& mu,
                                                      const Real& rate) {
  using std::abs;
  Polynomial<Real> r, rabs;
  r.c.resize(n + 1);
  rabs.c.resize(n + 1);
  r.c[0] = 1;
  for (int i = 0; i < n; ++i) r.c[i + 1] = -r.c[i] * Real(n - i) / (Real(i + 1) * (alpha + Real(i + 1)));
  for (int i = 0; i <= n; ++i) rabs.c[i] = abs(r.c[i]);
  const Polynomial<Real> coef = bell_power_coefficients(r, s);
  const Polynomial<Real> coef_abs = bell_power_coefficients(rabs, s);
  Real value = 0, magnitude = 0;
  Real h = 1;
  for (int k = 0; k <= coef.degree(); ++k) {
    value += coef.c[k] * h;
    magnitude += coef_abs.c[k] * h;
    h *= (mu + Real(k + 1)) / rate;
  }
  return {value, magnitude, 4.0 * (s * (n + 1) * (n + 1) + coef.degree() + 2)};
}

}  // namespace kernel

/// Double-valued F_A (see kernel::lauricella_fa_symmetric), evaluated on the
/// precision ladder. Preconditions: n >= 0, k >= 0, s >= 1.
double lauricella_fa_symmetric(double a, int n, double c, int s, int k, double t);

/// Theta_0 = Gamma(q g + 3/2) C(n + g + 1/2, n)^{2q}
///           F_A[q g + 3/2; -n x 2q, 0; g + 3/2 x 2q, 1; 1/q x 2q, 1]
/// in log form. q must be an integer >= 1.
precision::LogValue theta0_log(int q, int n, double gamma_ell);
double theta0(int q, int n, double gamma_ell);

/// Integral over [0, inf) of x^mu e^{-rate x} [L~_n^alpha(x)]^s, with L~
/// orthonormal, via Bell-polynomial expansion of the power.
precision::LogValue orthonormal_laguerre_power_moment(int n, double alpha, int s, double mu, double rate);

/// Natural log of the generalized binomial Gamma(a+1) / [Gamma(b+1) Gamma(a-b+1)].
double log_binomial(double a, double b);

}  // namespace phentropy::specfun
