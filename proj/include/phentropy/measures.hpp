#pragma once

// Information measures of a state in one space, by closed form or by quadrature.
//
// All logarithms are natural. The entropic moment
//     W_q = 4 pi Int x^2 density(x)^q dx
// underlies Renyi, Tsallis and Onicescu.

#include <optional>

#include "phentropy/quadrature.hpp"
#include "phentropy/states.hpp"

namespace phentropy {

enum class Kind { Fisher, Shannon, Renyi, Tsallis, Onicescu, Wq };
enum class Method { Analytic, Quadrature };

const char* to_string(Kind k) noexcept;
const char* to_string(Method m) noexcept;

struct MeasureResult {
  Kind kind = Kind::Wq;
  Space space = Space::Position;
  std::optional<double> q;
  double value = 0.0;
  Method method = Method::Quadrature;
  double err_estimate = 0.0;
  double norm_deficit = 0.0;       // |4 pi Int x^2 density - 1|
  double truncation_radius = 0.0;  // 0 for closed forms
  bool approximate = false;        // asymptotic closed form, err_estimate not a bound
};

/// Entropic moment. Analytic requires integer q >= 1: the Lauricella
/// linearization in position space, the Bell expansion in momentum space.
MeasureResult wq(const StateParams& s, double q, Space space, Method method,
                 const quadrature::QuadratureConfig& cfg = {});

/// Analytic position: closed form for all n. Analytic momentum: n = 0 only.
MeasureResult fisher(const StateParams& s, Space space, Method method, const quadrature::QuadratureConfig& cfg = {});

/// Analytic path is the large-n closed form with the asymptotic entropic
/// integral, flagged approximate; needs n >= 1.
MeasureResult shannon(const StateParams& s, Space space, Method method,
                      const quadrature::QuadratureConfig& cfg = {});

/// ln(W_q) / (1 - q). Throws DegenerateParameter for |q - 1| <= 1e-6.
MeasureResult renyi(const StateParams& s, double q, Space space, Method method,
                    const quadrature::QuadratureConfig& cfg = {});

/// (1 - W_q) / (q - 1). Same restrictions as renyi.
MeasureResult tsallis(const StateParams& s, double q, Space space, Method method,
                      const quadrature::QuadratureConfig& cfg = {});

/// W_2, reported under its own kind.
MeasureResult onicescu(const StateParams& s, Space space, Method method,
                       const quadrature::QuadratureConfig& cfg = {});

/// True if `method == Analytic` has a closed form for these arguments.
bool analytic_supported(Kind kind, Space space, std::optional<double> q, int n) noexcept;

enum class RatioKind { Fisher, Shannon, Renyi };

/// Momentum-to-position impetus/length ratio, from quadrature values:
/// Fisher sqrt(I[rho] / I[gamma]), Shannon exp((S[gamma] - S[rho]) / 3),
/// Renyi exp((R_q[gamma] - R_q[rho]) / 3). Renyi needs q.
double ratio(const StateParams& s, RatioKind kind, std::optional<double> q = std::nullopt,
             const quadrature::QuadratureConfig& cfg = {});

/// -2n + (g + 3/2) ln n - (g + 1/2) - 2 + ln(2 pi); n = 0 is a DomainError.
double entropic_integral_asymptotic(int n, double gamma_l);

/// E = -Int t^{g+1/2} e^{-t} Lt^2 ln Lt^2 dt for the orthonormal Laguerre
/// polynomial Lt = Lt_n^{g+1/2}, by quadrature.
quadrature::QuadResult entropic_integral(int n, double gamma_l, const quadrature::QuadratureConfig& cfg = {});

}  // namespace phentropy
