#pragma once

// Precision ladder for finite sums that cancel badly in double.
//
// A kernel is a generic callable invoked as kernel(std::type_identity<Real>{})
// that returns Bounded<Real>: the signed result and the same computation
// carried out on absolute values. Their ratio is the condition number of
// the summation, so rounding error is bounded by
//     work * epsilon(Real) * magnitude / |value|.
// The ladder tries double first and moves to wider binary floats until the
// bound meets the requested relative accuracy.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "phentropy/errors.hpp"

namespace phentropy::precision {

template <unsigned Digits>
using BinFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                               boost::multiprecision::et_off>;

using Float50 = BinFloat<50>;
using Float100 = BinFloat<100>;
using Float200 = BinFloat<200>;
using Float400 = BinFloat<400>;

template <class Real>
struct Bounded {
  Real value;
  Real magnitude;  // same sum with every term replaced by its absolute value
  double work = 1;  // length of the longest rounding chain, roughly
};

/// Result of a ladder evaluation, kept in log form so that values outside
/// the double exponent range survive.
struct LogValue {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;
  double rel_error = 0.0;
  int digits = 0;  // decimal digits of the scalar type that succeeded

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

template <class Real>
constexpr int decimal_digits() {
  return std::numeric_limits<Real>::digits10;
}

namespace detail {

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

template <class Real>
bool try_rung(const Bounded<Real>& r, double target, LogValue& out) {
  using std::abs;
  using std::log;
  const double eps = to_double(Real(std::numeric_limits<Real>::epsilon()));
  const Real abs_value = abs(r.value);
  const double mag = to_double(r.magnitude);
  if (!std::isfinite(mag)) return false;
  if (abs_value == 0) {
    if (r.magnitude != 0) return false;
    out = LogValue{-std::numeric_limits<double>::infinity(), 0, 0.0, decimal_digits<Real>()};
    return true;
  }
  // Ratio in Real so that huge or tiny magnitudes do not overflow doubles.
  const double cond = to_double(Real(r.magnitude / abs_value));
  const double rel = r.work * eps * cond;
  if (!std::isfinite(rel) || rel > target) {
    out.rel_error = std::isfinite(rel) ? rel : std::numeric_limits<double>::infinity();
    return false;
  }
  out.log_abs = to_double(Real(log(abs_value)));
  out.sign = r.value < 0 ? -1 : 1;
  out.rel_error = rel;
  out.digits = decimal_digits<Real>();
  return std::isfinite(out.log_abs);
}

}  // namespace detail

/// Evaluates `kernel` on increasingly wide scalar types until the rounding
/// bound is at most `target_rel`. A sum that is zero within the 400-digit
/// rounding bound comes back as zero. Throws ConvergenceError if even 400
/// decimal digits are not enough otherwise.
template <class Kernel>
LogValue evaluate_on_ladder(Kernel&& kernel, double target_rel = 1e-14) {
  LogValue out;
  if (detail::try_rung(kernel(std::type_identity<double>{}), target_rel, out)) return out;
  if (detail::try_rung(kernel(std::type_identity<Float50>{}), target_rel, out)) return out;
  if (detail::try_rung(kernel(std::type_identity<Float100>{}), target_rel, out)) return out;
  if (detail::try_rung(kernel(std::type_identity<Float200>{}), target_rel, out)) return out;
  const auto last = kernel(std::type_identity<Float400>{});
  if (detail::try_rung(last, target_rel, out)) return out;
  // A sum that vanishes to 400 digits is reported as an exact zero.
  using std::abs;
  if (abs(last.value) <= last.work * std::numeric_limits<Float400>::epsilon() * last.magnitude) {
    return LogValue{-std::numeric_limits<double>::infinity(), 0, 0.0, decimal_digits<Float400>()};
  }
  throw ConvergenceError("finite sum is ill-conditioned beyond 400 decimal digits (relative error bound " +
                             std::to_string(out.rel_error) + ")",
                         out.value(), out.rel_error);
}

}  // namespace phentropy::precision
