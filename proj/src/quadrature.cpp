#include "phentropy/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "phentropy/errors.hpp"

namespace phentropy::quadrature {

namespace {

// 21-point Kronrod abscissae/weights with the embedded 10-point Gauss rule
// (QUADPACK qk21). Odd-indexed abscissae are the Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980981478, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a, b;
  double value;
  double err;
};

class Evaluator {
 public:
  explicit Evaluator(const Integrand& f) : f_(f) {}

  double operator()(double x) {
    const double y = f_(x);
    ++count_;
    if (!std::isfinite(y)) {
      std::ostringstream os;
      os.precision(17);
      os << "non-finite integrand value at x = " << x;
      throw DomainError(os.str());
    }
    return y;
  }

  int count() const { return count_; }

 private:
  const Integrand& f_;
  int count_ = 0;
};

Panel gauss_kronrod21(Evaluator& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double value = resk * half;
  // Rounding floor so that converged panels still report a nonzero error.
  const double err = std::max(std::abs((resk - resg) * half), 50.0 * kEps * resabs * std::abs(half));
  return {a, b, value, err};
}

struct AdaptiveOutcome {
  double value;
  double err;
  int subdivisions;
};

double tolerance(const QuadratureConfig& cfg, double value) {
  return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
}

// Global adaptive bisection over the initial panels delimited by `edges`:
// always split the panel with the largest error.
AdaptiveOutcome adaptive(Evaluator& f, const std::vector<double>& edges, const QuadratureConfig& cfg, int budget) {
  auto by_err = [](const Panel& x, const Panel& y) { return x.err < y.err; };
  std::vector<Panel> heap;
  heap.reserve(edges.size() + 2 * budget + 2);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) heap.push_back(gauss_kronrod21(f, edges[i], edges[i + 1]));
  std::make_heap(heap.begin(), heap.end(), by_err);

  auto totals = [&heap] {
    // Summation in left-endpoint order keeps the result independent of heap layout.
    std::vector<const Panel*> order;
    order.reserve(heap.size());
    for (const auto& p : heap) order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const Panel* x, const Panel* y) { return x->a < y->a; });
    double v = 0.0, e = 0.0;
    for (const Panel* p : order) {
      v += p->value;
      e += p->err;
    }
    return std::pair{v, e};
  };

  int subdivisions = 0;
  auto [value, err] = totals();
  while (err > tolerance(cfg, value)) {
    if (subdivisions >= budget) {
      throw ConvergenceError("adaptive quadrature exceeded max_subdivisions", value, err);
    }
    std::pop_heap(heap.begin(), heap.end(), by_err);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("adaptive quadrature reached the resolution limit of double", value, err);
    }
    heap.push_back(gauss_kronrod21(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), by_err);
    heap.push_back(gauss_kronrod21(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), by_err);
    ++subdivisions;
    std::tie(value, err) = totals();
  }
  return {value, err, subdivisions};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureConfig: rel_tol must be > 0");
  if (!(abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be > 0");
  if (max_subdivisions < 10) throw DomainError("QuadratureConfig: max_subdivisions must be >= 10");
  if (!(tail_sigma >= 6.0)) throw DomainError("QuadratureConfig: tail_sigma must be >= 6");
}

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  Evaluator eval(f);
  const auto out = adaptive(eval, {a, b}, cfg, cfg.max_subdivisions);
  return {out.value, out.err, eval.count(), b};
}

QuadResult integrate_halfline(const Integrand& f, double scale, const QuadratureConfig& cfg, double spread,
                              std::span<const double> breakpoints) {
  cfg.validate();
  if (!(scale > 0.0)) throw DomainError("integrate_halfline: scale must be > 0");
  if (spread < 0.0) throw DomainError("integrate_halfline: spread must be >= 0");
  constexpr int kInitialPanels = 32;
  constexpr int kMaxTailPanels = 64;

  Evaluator eval(f);
  const double radius = cfg.tail_sigma * scale * (1.0 + std::sqrt(spread));
  std::vector<double> edges;
  for (int i = 0; i <= kInitialPanels; ++i) edges.push_back(radius * i / kInitialPanels);
  for (double x : breakpoints) {
    if (x > 0.0 && x < radius) edges.push_back(x);
  }
  std::sort(edges.begin(), edges.end());
  // Drop edges that would leave a degenerate panel.
  const double min_gap = 1e-12 * radius;
  std::vector<double> kept{edges.front()};
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] - kept.back() > min_gap) kept.push_back(edges[i]);
  }
  if (kept.back() != radius) kept.back() = radius;
  auto core = adaptive(eval, kept, cfg, cfg.max_subdivisions);
  double value = core.value;
  double err = core.err;
  int budget = cfg.max_subdivisions - core.subdivisions;

  for (int j = 1;; ++j) {
    if (j > kMaxTailPanels) {
      throw ConvergenceError("integrand does not decay past the truncation radius", value, err);
    }
    QuadratureConfig tail_cfg = cfg;
    tail_cfg.abs_tol = tolerance(cfg, value);
    const auto tail = adaptive(eval, {j * radius, (j + 1) * radius}, tail_cfg, budget);
    budget -= tail.subdivisions;
    value += tail.value;
    err += tail.err;
    if (std::abs(tail.value) <= tolerance(cfg, value)) {
      // The last panel bounds what lies beyond it for decaying integrands.
      err += std::abs(tail.value);
      return {value, err, eval.count(), (j + 1) * radius};
    }
  }
}

}  // namespace phentropy::quadrature
