#pragma once

// Pseudoharmonic bound states and their radial densities.
//
// Both densities share one shape,
//     density(x) = P x^{2g} exp(-e x^2) [L_n^{g+1/2}(b x^2)]^2,
// with e = b = 2*lambda in position space and e = 2/lambda, b = 1/(2*lambda)
// in momentum space. P is the log-stored prefactor.

#include <array>
#include <vector>

#include "phentropy/moldata.hpp"
#include "phentropy/precision.hpp"
#include "phentropy/quadrature.hpp"

namespace phentropy {

enum class Space { Position, Momentum };
enum class Mode { PaperFaithful, Renormalized };

const char* to_string(Space s) noexcept;
const char* to_string(Mode m) noexcept;

struct StateParams {
  int n = 0;
  int ell = 0;
  double gamma_ell = 0.0;
  double lambda = 0.0;
  Mode mode = Mode::PaperFaithful;
  // Log of the density prefactor actually used, indexed by Space.
  std::array<double, 2> log_prefactor{};
  // Log of the prefactor of the closed-form wavefunctions (unnormalized).
  std::array<double, 2> log_reference_prefactor{};

  double alpha() const { return gamma_ell + 0.5; }
  /// N^2_{n,l}: the position-space prefactor.
  double norm_sq() const;
  double log_prefactor_of(Space s) const { return log_prefactor[static_cast<int>(s)]; }
};

/// Parameters of the shape written at the top of this header.
struct DensityShape {
  int n;
  double alpha;  // g + 1/2
  double gamma;
  double log_p;
  double e;  // Gaussian rate
  double b;  // Laguerre argument scale
};

DensityShape shape(const StateParams& s, Space space);

/// gamma_l = (-1 + sqrt((2l+1)^2 + 8 D_e r_e^2)) / 2, taking D_e r_e^2 directly.
double gamma_ell(double de_re2, int ell);

/// D_e (r/r_e - r_e/r)^2. Throws DomainError for r <= 0.
double potential(const MoleculeParams& mol, double r);

/// Throws DomainError for n < 0 or ell < 0.
StateParams make_state(const MoleculeParams& mol, int n, int ell, Mode mode = Mode::PaperFaithful);
/// Same, from gamma_l and lambda directly (gamma_l >= 0, lambda > 0).
StateParams make_state_raw(double gamma_l, double lambda, int n, int ell, Mode mode = Mode::PaperFaithful);

double position_density(const StateParams& s, double r);
double momentum_density(const StateParams& s, double p);
double density(const StateParams& s, Space space, double x);
/// ln density(x); -inf at x = 0 (when gamma > 0) and at Laguerre nodes.
double log_density(const StateParams& s, Space space, double x);

/// L_n^{g+1/2}(b x^2); its sign changes locate the density nodes.
double laguerre_factor(const StateParams& s, Space space, double x);

/// Interior zeros of the density (the Laguerre nodes), ascending.
std::vector<double> density_nodes(const StateParams& s, Space space);

/// d density / dx for x > 0 (DomainError otherwise).
double density_derivative(const StateParams& s, Space space, double x);

/// x^2 (density')^2 / density, written without the division so that it
/// stays finite at Laguerre nodes and at x = 0.
double fisher_integrand(const StateParams& s, Space space, double x);

/// Characteristic Gaussian width 1/sqrt(e) of the density.
double width(const StateParams& s, Space space);

/// 4 pi Int_0^inf x^2 density(x) dx by quadrature.
double radial_norm(const StateParams& s, Space space, const quadrature::QuadratureConfig& cfg = {});

/// ln of 4 pi Int_0^inf x^2 density(x)^q dx in closed form, from the
/// Bell-polynomial expansion of the orthonormal Laguerre power. q >= 1.
precision::LogValue log_entropic_moment_bell(const DensityShape& sh, int q);

/// Value-semantics wrapper binding a state to a space.
class RadialDensity {
 public:
  RadialDensity(StateParams state, Space space) : state_(state), space_(space) {}

  double operator()(double x) const { return density(state_, space_, x); }
  double log_value(double x) const { return log_density(state_, space_, x); }
  double derivative(double x) const { return density_derivative(state_, space_, x); }

  const StateParams& state() const { return state_; }
  Space space() const { return space_; }

 private:
  StateParams state_;
  Space space_;
};

}  // namespace phentropy
