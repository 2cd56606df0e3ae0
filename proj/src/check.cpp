#include "phentropy/check.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <limits>
#include <numbers>
#include <sstream>

#include "phentropy/errors.hpp"
#include "phentropy/measures.hpp"
#include "phentropy/specfun.hpp"
#include "phentropy/table.hpp"

namespace phentropy {

namespace {

using boost::math::lgamma;
using quadrature::QuadratureConfig;

struct CheckDef {
  std::string name;
  std::string description;
  double threshold;
  bool strict;
  std::function<double(const MoleculeTable&)> run;
};

QuadratureConfig tight_config() {
  QuadratureConfig c;
  c.rel_tol = 1e-12;
  c.abs_tol = 1e-300;
  return c;
}

// Largest step against the expected direction; negative when the sequence
// is strictly monotone.
double increase_violation(const std::vector<double>& v) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < v.size(); ++k) worst = std::max(worst, v[k] - v[k + 1]);
  return worst;
}

double decrease_violation(const std::vector<double>& v) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < v.size(); ++k) worst = std::max(worst, v[k + 1] - v[k]);
  return worst;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

constexpr Space kSpaces[] = {Space::Position, Space::Momentum};

// --- oracles -------------------------------------------------------------

// sum_k (-1)^k C(n+alpha, n-k) x^k / k!, with the absolute-term sum.
std::pair<double, double> laguerre_series(int n, double alpha, double x) {
  double sum = 0.0, mag = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double log_c = lgamma(n + alpha + 1.0) - lgamma(n - k + 1.0) - lgamma(alpha + k + 1.0);
    const double term = std::exp(log_c - lgamma(k + 1.0)) * std::pow(x, k);
    sum += k % 2 ? -term : term;
    mag += term;
  }
  return {sum, mag};
}

// Partial Bell polynomial by enumerating multiplicities j_1..j_{m-t+1}.
std::pair<double, double> bell_by_partitions(int m, int t, const std::vector<double>& a) {
  double sum = 0.0, mag = 0.0;
  const int parts = m - t + 1;
  std::vector<int> j(parts + 1, 0);
  std::function<void(int, int, int)> rec = [&](int i, int left_m, int left_t) {
    if (i > parts) {
      if (left_m != 0 || left_t != 0) return;
      double log_term = lgamma(m + 1.0);
      double sign = 1.0;
      for (int p = 1; p <= parts; ++p) {
        if (j[p] == 0) continue;
        log_term -= lgamma(j[p] + 1.0) + j[p] * lgamma(p + 1.0);
        log_term += j[p] * std::log(std::abs(a[p - 1]));
        if (a[p - 1] < 0 && j[p] % 2) sign = -sign;
      }
      const double term = std::exp(log_term);
      sum += sign * term;
      mag += term;
      return;
    }
    for (int c = 0; c <= left_t && c * i <= left_m; ++c) {
      j[i] = c;
      rec(i + 1, left_m - c * i, left_t - c);
    }
    j[i] = 0;
  };
  rec(1, m, t);
  return {sum, mag};
}

// Naive (n+1)^s (k+1) nested Lauricella sum in 50 digits, with the sum of
// absolute terms.
std::pair<double, double> lauricella_naive(double a_d, int n, double c_d, int s, int k, double t_d) {
  using R = precision::Float50;
  const R a(a_d), c(c_d), t(t_d);
  std::vector<R> slot(n + 1);  // (-n)_j / ((c)_j j!) t^j
  slot[0] = 1;
  for (int j = 0; j < n; ++j) slot[j + 1] = slot[j] * R(j - n) / ((c + j) * R(j + 1)) * t;
  auto poch = [](const R& x, int m) {
    R p = 1;
    for (int i = 0; i < m; ++i) p *= x + R(i);
    return p;
  };
  R total = 0, mag = 0;
  std::vector<int> idx(s, 0);
  while (true) {
    int big_j = 0;
    R prod = 1;
    for (int v : idx) {
      big_j += v;
      prod *= slot[v];
    }
    for (int i = 0; i <= k; ++i) {
      R last = poch(R(-k), i);
      for (int f = 1; f <= i; ++f) last /= R(f) * R(f);
      const R term = poch(a, big_j + i) * prod * last;
      total += term;
      mag += abs(term);
    }
    int p = 0;
    while (p < s && ++idx[p] > n) idx[p++] = 0;
    if (p == s) break;
  }
  return {static_cast<double>(total), static_cast<double>(mag)};
}

// --- checks --------------------------------------------------------------

double check_normalization(const MoleculeTable& mols) {
  double worst = 0.0;
  const auto cfg = tight_config();
  for (const auto& m : mols) {
    for (int n = 0; n <= 10; ++n) {
      const auto s = make_state(m, n, 0, Mode::Renormalized);
      for (Space sp : kSpaces) worst = std::max(worst, std::abs(radial_norm(s, sp, cfg) - 1.0));
    }
  }
  return worst;
}

double check_laguerre_dual_path(const MoleculeTable&) {
  double worst = 0.0;
  for (int n = 0; n <= 6; ++n) {
    for (double alpha : {0.5, 1.7, 4.3}) {
      for (int i = 0; i <= 200; ++i) {
        const double x = 50.0 * i / 200.0;
        const auto [series, mag] = laguerre_series(n, alpha, x);
        worst = std::max(worst, std::abs(specfun::laguerre(n, alpha, x) - series) / mag);
      }
    }
  }
  return worst;
}

double check_bell_vs_poly_power(const MoleculeTable& mols) {
  double worst = 0.0;
  std::vector<double> alphas = {0.5, 1.7};
  for (const auto& m : mols) alphas.push_back(make_state(m, 0, 0).alpha());
  for (double alpha : alphas) {
    for (int n = 0; n <= 4; ++n) {
      const auto c = specfun::orthonormal_laguerre_coeffs(n, alpha);
      for (int q = 1; q <= 3; ++q) {
        const auto conv = specfun::poly_power(c, 2 * q);
        const auto bell = specfun::bell_power_coefficients(c, 2 * q);
        for (int k = 0; k <= conv.degree(); ++k) {
          const double scale = std::max(std::abs(conv.c[k]), std::abs(bell.c[k]));
          if (scale > 0) worst = std::max(worst, std::abs(conv.c[k] - bell.c[k]) / scale);
        }
      }
    }
  }
  return worst;
}

double check_lauricella_vs_naive(const MoleculeTable&) {
  double worst = 0.0;
  for (int n = 0; n <= 3; ++n) {
    for (int s = 1; s <= 4; ++s) {
      for (int k = 0; k <= 2; ++k) {
        for (double a : {0.75, 3.5, 7.25}) {
          for (double c : {1.5, 4.2}) {
            for (double t : {0.3, 1.0}) {
              // Relative to |F|, or to 1e-14 of the term sum where F vanishes
              // (e.g. Chu-Vandermonde zeros at t = 1).
              const double fast = specfun::lauricella_fa_symmetric(a, n, c, s, k, t);
              const auto [ref, mag] = lauricella_naive(a, n, c, s, k, t);
              worst = std::max(worst, std::abs(fast - ref) / std::max(std::abs(ref), 1e-14 * mag));
            }
          }
        }
      }
    }
  }
  return worst;
}

double check_bell_vs_partitions(const MoleculeTable&) {
  const std::vector<double> a = {0.7, -1.3, 2.2, 0.45, -0.9, 1.6, -2.4, 0.35, 1.1, -0.6};
  double worst = 0.0;
  for (int m = 1; m <= 10; ++m) {
    for (int t = 1; t <= m; ++t) {
      const auto [ref, mag] = bell_by_partitions(m, t, a);
      const double rec = specfun::bell_polynomial(m, t, std::span<const double>(a.data(), m - t + 1));
      worst = std::max(worst, std::abs(rec - ref) / mag);
    }
  }
  return worst;
}

template <class Entropy>
double q_continuity(const MoleculeTable& mols, Entropy&& entropy) {
  double worst = 0.0;
  const auto cfg = tight_config();
  for (const auto& m : mols) {
    for (int n = 0; n <= 3; ++n) {
      const auto s = make_state(m, n, 0, Mode::Renormalized);
      for (Space sp : kSpaces) {
        const double sh = shannon(s, sp, Method::Quadrature, cfg).value;
        for (double q : {1.0 - 1e-4, 1.0 + 1e-4}) {
          worst = std::max(worst, std::abs(entropy(s, q, sp, Method::Quadrature, cfg).value - sh));
        }
      }
    }
  }
  return worst;
}

double check_q_continuity_renyi(const MoleculeTable& mols) {
  return q_continuity(mols, [](auto&&... a) { return renyi(a...); });
}

double check_q_continuity_tsallis(const MoleculeTable& mols) {
  return q_continuity(mols, [](auto&&... a) { return tsallis(a...); });
}

double check_derivative(const MoleculeTable& mols) {
  constexpr double h = 1e-5;
  double worst = 0.0;
  for (const auto& m : mols) {
    for (int n = 0; n <= 5; ++n) {
      for (int l = 0; l <= 5; ++l) {
        const auto s = make_state(m, n, l);
        for (Space sp : kSpaces) {
          const double w = width(s, sp);
          const double top = 3.0 * w * (1.0 + std::sqrt(n + s.gamma_ell));
          for (int i = 1; i <= 100; ++i) {
            const double x = top * i / 100.0;
            const double fd = (density(s, sp, x + h) - density(s, sp, x - h)) / (2.0 * h);
            const double an = density_derivative(s, sp, x);
            worst = std::max(worst, std::abs(an - fd) / (1.0 + std::abs(fd)));
          }
        }
      }
    }
  }
  return worst / 1e-6;  // in units of the 1e-6 (1 + |f'|) allowance
}

double check_nodes(const MoleculeTable& mols) {
  double worst = 0.0;
  for (const auto& m : mols) {
    for (int n = 0; n <= 5; ++n) {
      for (int l = 0; l <= 5; ++l) {
        const auto s = make_state(m, n, l);
        for (Space sp : kSpaces) {
          const double top = 12.0 * width(s, sp) * (1.0 + std::sqrt(n + s.gamma_ell));
          int changes = 0;
          double prev = laguerre_factor(s, sp, top * 1e-4);
          for (int i = 2; i <= 20000; ++i) {
            const double x = top * i / 20000.0;
            const double cur = laguerre_factor(s, sp, x);
            if (density(s, sp, x) < 0.0) return std::numeric_limits<double>::infinity();
            if ((cur < 0) != (prev < 0)) ++changes;
            prev = cur;
          }
          worst = std::max(worst, std::abs(static_cast<double>(changes - n)));
        }
      }
    }
  }
  return worst;
}

double check_gamma_monotone(const MoleculeTable& mols) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& m : mols) {
    std::vector<double> g;
    for (int l = 0; l <= 50; ++l) g.push_back(gamma_ell(m.d_e * m.r_e * m.r_e, l));
    worst = std::max(worst, increase_violation(g));
  }
  std::vector<double> g;
  for (int i = 0; i <= 50; ++i) g.push_back(gamma_ell(0.5 * i, 2));
  return std::max(worst, increase_violation(g));
}

double check_fisher_monotone_n(const MoleculeTable& mols) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& m : mols) {
    for (Space sp : kSpaces) {
      std::vector<double> v;
      for (int n = 0; n <= 10; ++n) v.push_back(fisher(make_state(m, n, 0), sp, Method::Quadrature).value);
      worst = std::max(worst, increase_violation(v));
    }
  }
  return worst;
}

double check_fisher_decreasing_ell(const MoleculeTable& mols) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& m : mols) {
    std::vector<double> v;
    for (int l = 0; l <= 50; ++l) v.push_back(fisher(make_state(m, 0, l), Space::Position, Method::Quadrature).value);
    worst = std::max(worst, decrease_violation(v));
  }
  return worst;
}

double check_shannon_monotone(const MoleculeTable& mols) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& m : mols) {
    std::vector<double> by_n, by_l;
    for (int n = 0; n <= 10; ++n) by_n.push_back(shannon(make_state(m, n, 0), Space::Position, Method::Quadrature).value);
    for (int l = 0; l <= 50; ++l) {
      by_l.push_back(shannon(make_state(m, 0, l), Space::Position, Method::Quadrature).value);
    }
    worst = std::max({worst, increase_violation(by_n), decrease_violation(by_l)});
  }
  return worst;
}

double check_renyi_momentum_decreasing(const MoleculeTable& mols) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& m : mols) {
    std::vector<double> v;
    for (int n = 0; n <= 10; ++n) v.push_back(renyi(make_state(m, n, 0), 2.0, Space::Momentum, Method::Quadrature).value);
    worst = std::max(worst, decrease_violation(v));
  }
  return worst;
}

template <class F>
double over_cells(const MoleculeTable& mols, int n_max, F&& f) {
  double worst = 0.0;
  for (const auto& m : mols) {
    for (int n = 0; n <= n_max; ++n) {
      const auto s = make_state(m, n, 0);
      for (Space sp : kSpaces) worst = std::max(worst, f(s, sp));
    }
  }
  return worst;
}

double check_renyi_onicescu(const MoleculeTable& mols) {
  return over_cells(mols, 10, [](const StateParams& s, Space sp) {
    double worst = 0.0;
    for (Method me : {Method::Analytic, Method::Quadrature}) {
      const double e = onicescu(s, sp, me).value;
      worst = std::max(worst, std::abs(renyi(s, 2.0, sp, me).value + std::log(e)));
    }
    return worst;
  });
}

double check_tsallis_onicescu(const MoleculeTable& mols) {
  return over_cells(mols, 10, [](const StateParams& s, Space sp) {
    double worst = 0.0;
    for (Method me : {Method::Analytic, Method::Quadrature}) {
      const double e = onicescu(s, sp, me).value;
      worst = std::max(worst, std::abs(tsallis(s, 2.0, sp, me).value - (1.0 - e)));
    }
    return worst;
  });
}

double check_fisher_analytic(const MoleculeTable& mols) {
  double worst = 0.0;
  for (const auto& m : mols) {
    for (int n = 0; n <= 10; ++n) {
      const auto s = make_state(m, n, 0);
      worst = std::max(worst, rel_diff(fisher(s, Space::Position, Method::Analytic).value,
                                       fisher(s, Space::Position, Method::Quadrature).value));
    }
    for (int l = 0; l <= 5; ++l) {
      const auto s = make_state(m, 0, l);
      worst = std::max(worst, rel_diff(fisher(s, Space::Momentum, Method::Analytic).value,
                                       fisher(s, Space::Momentum, Method::Quadrature).value));
    }
  }
  return worst;
}

double check_wq_analytic(const MoleculeTable& mols) {
  return over_cells(mols, 5, [](const StateParams& s, Space sp) {
    double worst = 0.0;
    for (double q : {2.0, 3.0}) {
      const auto a = wq(s, q, sp, Method::Analytic);
      const auto b = wq(s, q, sp, Method::Quadrature);
      // Allowance max(1e-8 relative, combined error estimate), expressed in units of 1e-8.
      const double allow = std::max(1e-8 * std::abs(b.value), a.err_estimate + b.err_estimate);
      worst = std::max(worst, 1e-8 * std::abs(a.value - b.value) / allow);
    }
    return worst;
  });
}

double check_bell_vs_lauricella(const MoleculeTable& mols) {
  double worst = 0.0;
  for (const auto& m : mols) {
    for (int n = 0; n <= 5; ++n) {
      const auto s = make_state(m, n, 0);
      const double lauricella = wq(s, 2.0, Space::Position, Method::Analytic).value;
      const double bell = std::exp(log_entropic_moment_bell(shape(s, Space::Position), 2).log_abs);
      worst = std::max(worst, rel_diff(bell, lauricella));
    }
  }
  return worst;
}

double check_entropic_gap(const MoleculeTable&) {
  constexpr double g = 3.2955;
  std::vector<double> gaps;
  for (int n : {5, 10, 20, 30, 40, 50}) {
    gaps.push_back(std::abs(entropic_integral_asymptotic(n, g) - entropic_integral(n, g).value));
  }
  return decrease_violation(gaps);
}

double check_ratio_decreasing(const MoleculeTable& mols, RatioKind kind, std::optional<double> q) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& m : mols) {
    std::vector<double> v;
    for (int n = 0; n <= 10; ++n) v.push_back(ratio(make_state(m, n, 0), kind, q));
    worst = std::max(worst, decrease_violation(v));
  }
  return worst;
}

double check_fisher_ratio(const MoleculeTable& mols) { return check_ratio_decreasing(mols, RatioKind::Fisher, {}); }
double check_renyi_ratio(const MoleculeTable& mols) { return check_ratio_decreasing(mols, RatioKind::Renyi, 2.0); }

// Stated for NO+ only: down from n = 0 to 1, then up through n = 10.
double check_shannon_ratio(const MoleculeTable& mols) {
  const auto& no = mols.at("NO+");
  std::vector<double> sr;
  for (int n = 0; n <= 10; ++n) sr.push_back(ratio(make_state(no, n, 0), RatioKind::Shannon));
  return std::max(sr[1] - sr[0], increase_violation(std::vector<double>(sr.begin() + 1, sr.end())));
}

double check_quadrature_polygauss(const MoleculeTable&) {
  const auto cfg = tight_config();
  double worst = 0.0;
  for (int k = 0; k <= 40; ++k) {
    const auto r = quadrature::integrate_halfline([k](double x) { return std::pow(x, k) * std::exp(-x * x); }, 1.0, cfg,
                                                  k / 2.0);
    worst = std::max(worst, rel_diff(r.value, 0.5 * std::tgamma((k + 1) / 2.0)));
  }
  return worst;
}

double check_tail_doubling(const MoleculeTable& mols) {
  QuadratureConfig wide;
  wide.tail_sigma = 24.0;
  double worst = 0.0;
  for (const auto& m : mols) {
    for (int n : {0, 5, 10}) {
      const auto s = make_state(m, n, 0);
      for (Space sp : kSpaces) {
        const MeasureResult pairs[][2] = {
            {fisher(s, sp, Method::Quadrature), fisher(s, sp, Method::Quadrature, wide)},
            {shannon(s, sp, Method::Quadrature), shannon(s, sp, Method::Quadrature, wide)},
            {wq(s, 2.0, sp, Method::Quadrature), wq(s, 2.0, sp, Method::Quadrature, wide)},
            {wq(s, 2.0 / 3.0, sp, Method::Quadrature), wq(s, 2.0 / 3.0, sp, Method::Quadrature, wide)},
        };
        for (const auto& p : pairs) {
          worst = std::max(worst, std::abs(p[0].value - p[1].value) / p[0].err_estimate);
        }
      }
    }
  }
  return worst;  // in units of err_estimate
}

double check_determinism(const MoleculeTable& mols) {
  TableSpec spec;
  spec.measure = TableMeasure::Shannon;
  spec.space = Space::Momentum;
  for (const auto& m : mols) spec.molecules.push_back(m.name);
  spec.n_values = {0, 1, 2, 3, 4, 5};
  spec.method = MethodChoice::Both;
  const auto a = tabulate(spec, mols);
  const auto b = tabulate(spec, mols);
  const auto c = tabulate_serial(spec, mols);
  if (a.size() != c.size() || b.size() != c.size()) return std::numeric_limits<double>::infinity();
  double mismatches = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool same = a[i].value == c[i].value && b[i].value == c[i].value && a[i].err == c[i].err &&
                      a[i].molecule == c[i].molecule && a[i].method == c[i].method;
    mismatches += same ? 0 : 1;
  }
  std::ostringstream x, y;
  write_csv(x, a, true);
  write_csv(y, c, true);
  return mismatches + (x.str() == y.str() ? 0 : 1);
}

double check_moldata_roundtrip(const MoleculeTable& mols) {
  std::stringstream ss;
  write_molecules(ss, mols);
  return load_molecules(ss) == mols ? 0.0 : 1.0;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"moldata_roundtrip", "write then load reproduces the molecule table (0 = identical)", 0.0, false,
       check_moldata_roundtrip},
      {"gamma_monotone", "gamma_l strictly increasing in l and in D_e r_e^2", 0.0, true, check_gamma_monotone},
      {"normalization", "Renormalized radial norm, 5 molecules, n <= 10, both spaces: |norm - 1|", 1e-10, false,
       check_normalization},
      {"density_nodes", "sign changes of the Laguerre factor minus n, n,l <= 5, both spaces", 0.0, false, check_nodes},
      {"derivative_fd", "analytic derivative vs central difference h=1e-5, in units of 1e-6 (1+|f'|)", 1.0, false,
       check_derivative},
      {"laguerre_dual_path", "recurrence vs explicit series, n <= 6, x in [0,50], relative to term sum", 1e-12, false,
       check_laguerre_dual_path},
      {"bell_vs_poly_power", "Bell expansion vs convolution power of orthonormal coefficients, relative", 1e-10, false,
       check_bell_vs_poly_power},
      {"bell_vs_partitions", "Bell recurrence vs partition enumeration, m <= 10, relative to term sum", 1e-12, false,
       check_bell_vs_partitions},
      {"lauricella_vs_naive", "symmetric reduction vs naive nested sum, n <= 3, s <= 4, k <= 2, relative", 1e-10,
       false, check_lauricella_vs_naive},
      {"quadrature_polygauss", "x^k e^{-x^2}, k <= 40, vs Gamma((k+1)/2)/2, relative", 1e-11, false,
       check_quadrature_polygauss},
      {"quadrature_tail_doubling", "change from doubling tail_sigma, in units of err_estimate", 1.0, false,
       check_tail_doubling},
      {"tabulate_determinism", "parallel, repeated and serial tabulation differ in this many rows", 0.0, false,
       check_determinism},
      {"q_to_1_renyi", "Renormalized |R_q - S| at q = 1 +- 1e-4, n <= 3, both spaces", 1e-3, false,
       check_q_continuity_renyi},
      {"q_to_1_tsallis", "Renormalized |T_q - S| at q = 1 +- 1e-4, n <= 3, both spaces", 1e-3, false,
       check_q_continuity_tsallis},
      {"renyi_onicescu_identity", "|R_2 + ln E|, n <= 10, both methods and spaces", 1e-10, false,
       check_renyi_onicescu},
      {"tsallis_onicescu_identity", "|T_2 - (1 - E)|, n <= 10, both methods and spaces", 1e-10, false,
       check_tsallis_onicescu},
      {"fisher_analytic_vs_quadrature", "closed-form Fisher vs quadrature (position n <= 10, momentum n = 0)",
       1e-8, false, check_fisher_analytic},
      {"wq_analytic_vs_quadrature",
       "W_q closed form vs quadrature, q = 2,3, n <= 5, in units of max(1e-8 rel, combined err)", 1e-8, false,
       check_wq_analytic},
      {"bell_vs_lauricella", "position W_2 by Bell expansion vs Lauricella linearization, n <= 5, relative", 1e-8,
       false, check_bell_vs_lauricella},
      {"fisher_monotone_n", "I[rho], I[gamma] strictly increasing in n = 0..10", 0.0, true, check_fisher_monotone_n},
      {"fisher_decreasing_l", "I[rho] strictly decreasing in l = 0..50 at n = 0", 0.0, true,
       check_fisher_decreasing_ell},
      {"shannon_monotone", "S[rho] increasing in n = 0..10 and decreasing in l = 0..50", 0.0, true,
       check_shannon_monotone},
      {"renyi_momentum_decreasing", "R_2[gamma] strictly decreasing in n = 0..10", 0.0, true,
       check_renyi_momentum_decreasing},
      {"fisher_ratio_decreasing", "Fisher impetus/length ratio strictly decreasing in n = 0..10", 0.0, true,
       check_fisher_ratio},
      {"renyi_ratio_decreasing", "Renyi (q = 2) impetus/length ratio strictly decreasing in n = 0..10", 0.0, true,
       check_renyi_ratio},
      {"shannon_ratio_turn", "NO+ Shannon impetus/length ratio falls from n = 0 to 1, then rises to n = 10", 0.0,
       true, check_shannon_ratio},
      {"entropic_asymptotic_gap", "|asymptotic - quadrature| entropic integral shrinks for n = 5..50", 0.0, true,
       check_entropic_gap},
  };
  return defs;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.push_back(d.name);
  return out;
}

std::vector<CheckOutcome> run_checks(const CheckOptions& opts, const MoleculeTable& molecules) {
  const auto names = check_names();
  auto known = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  for (const auto& [name, v] : opts.per_check) {
    if (!known(name)) throw ValidationError("tol", "unknown check '" + name + "'");
  }
  for (const auto& name : opts.only) {
    if (!known(name)) throw ValidationError("only", "unknown check '" + name + "'");
  }

  std::vector<CheckOutcome> out;
  for (const auto& d : registry()) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), d.name) == opts.only.end()) continue;
    CheckOutcome o;
    o.name = d.name;
    o.description = d.description;
    o.strict = d.strict;
    o.threshold = d.threshold;
    if (opts.tolerance) o.threshold = *opts.tolerance;
    if (auto it = opts.per_check.find(d.name); it != opts.per_check.end()) o.threshold = it->second;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o.deviation = d.run(molecules);
      o.passed = d.strict ? o.deviation < o.threshold : o.deviation <= o.threshold;
    } catch (const std::exception& e) {
      o.deviation = std::numeric_limits<double>::infinity();
      o.error = e.what();
      o.passed = false;
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(o));
  }
  return out;
}

void write_check_report(std::ostream& os, const std::vector<CheckOutcome>& outcomes) {
  int failed = 0;
  double total = 0.0;
  for (const auto& o : outcomes) {
    os << fmt::format("{} {:<30} deviation={:<12.4g} threshold{}{:<10.3g} {:6.2f}s  {}", o.passed ? "PASS" : "FAIL",
                      o.name, o.deviation, o.strict ? "<" : "<=", o.threshold, o.seconds, o.description);
    if (!o.error.empty()) os << "  [error: " << o.error << ']';
    os << '\n';
    failed += o.passed ? 0 : 1;
    total += o.seconds;
  }
  os << fmt::format("{} of {} checks passed in {:.1f}s\n", outcomes.size() - failed, outcomes.size(), total);
}

void append_check_ledger(const std::string& path, const std::vector<CheckOutcome>& outcomes) {
  std::ofstream f(path, std::ios::app);
  if (!f) throw ValidationError("ledger", "cannot open " + path);
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  for (const auto& o : outcomes) {
    nlohmann::json j;
    j["timestamp"] = stamp;
    j["check"] = o.name;
    j["deviation"] = std::isfinite(o.deviation) ? nlohmann::json(o.deviation) : nlohmann::json(nullptr);
    j["threshold"] = o.threshold;
    j["strict"] = o.strict;
    j["passed"] = o.passed;
    if (!o.error.empty()) j["error"] = o.error;
    f << j.dump() << '\n';
  }
}

}  // namespace phentropy
