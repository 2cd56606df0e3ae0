#include "phentropy/states.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "phentropy/errors.hpp"
#include "phentropy/specfun.hpp"

namespace phentropy {

namespace {

using boost::math::lgamma;

constexpr double kLn2 = std::numbers::ln2;
const double kLn4Pi = std::log(4.0 * std::numbers::pi);

int idx(Space s) { return static_cast<int>(s); }

}  // namespace

const char* to_string(Space s) noexcept { return s == Space::Position ? "position" : "momentum"; }
const char* to_string(Mode m) noexcept { return m == Mode::PaperFaithful ? "paper" : "normalized"; }

double StateParams::norm_sq() const { return std::exp(log_prefactor[idx(Space::Position)]); }

double gamma_ell(double de_re2, int ell) {
  if (ell < 0) throw DomainError("gamma_ell: ell must be >= 0");
  if (de_re2 < 0.0) throw DomainError("gamma_ell: D_e r_e^2 must be >= 0");
  const double l2 = 2.0 * ell + 1.0;
  return 0.5 * (-1.0 + std::sqrt(l2 * l2 + 8.0 * de_re2));
}

double potential(const MoleculeParams& mol, double r) {
  if (!(r > 0.0)) throw DomainError("potential: r must be > 0");
  const double d = r / mol.r_e - mol.r_e / r;
  return mol.d_e * d * d;
}

DensityShape shape(const StateParams& s, Space space) {
  DensityShape sh{s.n, s.alpha(), s.gamma_ell, s.log_prefactor_of(space), 0.0, 0.0};
  if (space == Space::Position) {
    sh.e = sh.b = 2.0 * s.lambda;
  } else {
    sh.e = 2.0 / s.lambda;
    sh.b = 1.0 / (2.0 * s.lambda);
  }
  return sh;
}

precision::LogValue log_entropic_moment_bell(const DensityShape& sh, int q) {
  if (q < 1) throw DomainError("log_entropic_moment_bell: q must be an integer >= 1");
  // u = b x^2 turns the integral into
  //   2 pi P^q b^{-(q g + 3/2)} K^q Int u^{q g + 1/2} e^{-(q e / b) u} Lt^{2q} du
  // with L^2 = K Lt^2, K = Gamma(n + alpha + 1) / n!.
  const double mu = q * sh.gamma + 0.5;
  auto lv = specfun::orthonormal_laguerre_power_moment(sh.n, sh.alpha, 2 * q, mu, q * sh.e / sh.b);
  const double log_k = lgamma(sh.n + sh.alpha + 1.0) - lgamma(sh.n + 1.0);
  lv.log_abs += std::log(2.0 * std::numbers::pi) + q * sh.log_p - (mu + 1.0) * std::log(sh.b) + q * log_k;
  return lv;
}

StateParams make_state_raw(double gamma_l, double lambda, int n, int ell, Mode mode) {
  if (n < 0) throw DomainError("make_state: n must be >= 0");
  if (ell < 0) throw DomainError("make_state: ell must be >= 0");
  if (!(gamma_l >= 0.0)) throw DomainError("make_state: gamma_l must be >= 0");
  if (!(lambda > 0.0)) throw DomainError("make_state: lambda must be > 0");
  StateParams s;
  s.n = n;
  s.ell = ell;
  s.gamma_ell = gamma_l;
  s.lambda = lambda;
  s.mode = mode;

  const double g = gamma_l;
  const double log_ratio = lgamma(n + 1.0) - lgamma(n + g + 1.5);
  const double log_2l2 = std::log(2.0 * lambda * lambda);
  s.log_reference_prefactor[idx(Space::Position)] = kLn2 + (2.0 * g + 3.0) / 4.0 * log_2l2 + log_ratio;
  s.log_reference_prefactor[idx(Space::Momentum)] = kLn2 - (2.0 * g + 3.0) / 4.0 * log_2l2 + log_ratio;
  s.log_prefactor = s.log_reference_prefactor;

  if (mode == Mode::Renormalized) {
    // Position norm is 4 pi 2^{-(2g+3)/4} for every n.
    s.log_prefactor[idx(Space::Position)] -= kLn4Pi - (2.0 * g + 3.0) / 4.0 * kLn2;
    const auto norm = log_entropic_moment_bell(shape(s, Space::Momentum), 1);
    s.log_prefactor[idx(Space::Momentum)] -= norm.log_abs;
  }
  return s;
}

StateParams make_state(const MoleculeParams& mol, int n, int ell, Mode mode) {
  const double lambda = std::sqrt(mol.d_e / (2.0 * mol.r_e * mol.r_e));
  return make_state_raw(gamma_ell(mol.d_e * mol.r_e * mol.r_e, ell), lambda, n, ell, mode);
}

double laguerre_factor(const StateParams& s, Space space, double x) {
  const auto sh = shape(s, space);
  return specfun::laguerre(sh.n, sh.alpha, sh.b * x * x);
}

std::vector<double> density_nodes(const StateParams& s, Space space) {
  const auto sh = shape(s, space);
  auto nodes = specfun::laguerre_roots(sh.n, sh.alpha);
  for (double& u : nodes) u = std::sqrt(u / sh.b);
  return nodes;
}

double log_density(const StateParams& s, Space space, double x) {
  if (x < 0.0) throw DomainError("density: x must be >= 0");
  const auto sh = shape(s, space);
  const double l = specfun::laguerre(sh.n, sh.alpha, sh.b * x * x);
  if (l == 0.0) return -std::numeric_limits<double>::infinity();
  const double log_pow = sh.gamma == 0.0 ? 0.0 : 2.0 * sh.gamma * std::log(x);
  return sh.log_p + log_pow - sh.e * x * x + 2.0 * std::log(std::abs(l));
}

double density(const StateParams& s, Space space, double x) { return std::exp(log_density(s, space, x)); }

double position_density(const StateParams& s, double r) { return density(s, Space::Position, r); }
double momentum_density(const StateParams& s, double p) { return density(s, Space::Momentum, p); }

double density_derivative(const StateParams& s, Space space, double x) {
  if (!(x > 0.0)) throw DomainError("density_derivative: x must be > 0");
  const auto sh = shape(s, space);
  const double u = sh.b * x * x;
  const auto lv = specfun::laguerre_with_derivative(sh.n, sh.alpha, u);
  // P x^{2g-1} e^{-e x^2} [(2g - 2 e x^2) L^2 + 4 b x^2 L L'].
  const double bracket = (2.0 * sh.gamma - 2.0 * sh.e * x * x) * lv.value * lv.value +
                         4.0 * u * lv.value * lv.derivative;
  if (bracket == 0.0) return 0.0;
  const double log_base = sh.log_p + (2.0 * sh.gamma - 1.0) * std::log(x) - sh.e * x * x;
  return std::exp(log_base) * bracket;
}

double fisher_integrand(const StateParams& s, Space space, double x) {
  if (x < 0.0) throw DomainError("fisher_integrand: x must be >= 0");
  if (x == 0.0) return 0.0;
  const auto sh = shape(s, space);
  const double u = sh.b * x * x;
  const auto lv = specfun::laguerre_with_derivative(sh.n, sh.alpha, u);
  const double g = (2.0 * sh.gamma - 2.0 * sh.e * x * x) * lv.value + 4.0 * u * lv.derivative;
  if (g == 0.0) return 0.0;
  const double log_pow = sh.gamma == 0.0 ? 0.0 : 2.0 * sh.gamma * std::log(x);
  return std::exp(sh.log_p + log_pow - sh.e * x * x) * g * g;
}

double width(const StateParams& s, Space space) { return 1.0 / std::sqrt(shape(s, space).e); }

double radial_norm(const StateParams& s, Space space, const quadrature::QuadratureConfig& cfg) {
  const auto f = [&](double x) { return x * x * density(s, space, x); };
  const auto nodes = density_nodes(s, space);
  const auto r = quadrature::integrate_halfline(f, width(s, space), cfg, s.n + s.gamma_ell, nodes);
  return 4.0 * std::numbers::pi * r.value;
}

}  // namespace phentropy
