#include "cli_args.hpp"

#include <charconv>
#include <cmath>
#include <string_view>

#include "phentropy/errors.hpp"

namespace phentropy::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double number(std::string_view s, const std::string& field) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v)) {
    throw ValidationError(field, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

double real_or_fraction(std::string_view s, const std::string& field) {
  const auto parts = split(s, '/');
  if (parts.size() == 1) return number(parts[0], field);
  if (parts.size() != 2) throw ValidationError(field, "malformed fraction '" + std::string(s) + "'");
  const double den = number(parts[1], field);
  if (den == 0.0) throw ValidationError(field, "zero denominator in '" + std::string(s) + "'");
  return number(parts[0], field) / den;
}

void append_item(std::string_view item, const std::string& field, std::vector<double>& out) {
  const auto parts = split(item, ':');
  if (parts.size() == 1) {
    out.push_back(real_or_fraction(parts[0], field));
    return;
  }
  if (parts.size() > 3) throw ValidationError(field, "range has more than three parts: '" + std::string(item) + "'");
  const double lo = real_or_fraction(parts[0], field);
  const double hi = real_or_fraction(parts[1], field);
  const double step = parts.size() == 3 ? real_or_fraction(parts[2], field) : 1.0;
  if (!(step > 0.0)) throw ValidationError(field, "range step must be > 0");
  if (hi < lo) throw ValidationError(field, "descending range '" + std::string(item) + "'");
  const auto count = static_cast<long>(std::floor((hi - lo) / step * (1.0 + 1e-12))) + 1;
  if (count > 100000) throw ValidationError(field, "range has too many points");
  // Multiplying rather than accumulating keeps the points exact for integer steps.
  for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
}

}  // namespace

std::vector<double> parse_real_range(const std::string& text, const std::string& field) {
  if (trim(text).empty()) throw ValidationError(field, "empty range");
  std::vector<double> out;
  for (auto item : split(text, ',')) {
    if (item.empty()) throw ValidationError(field, "empty item in '" + text + "'");
    append_item(item, field, out);
  }
  return out;
}

std::vector<int> parse_int_range(const std::string& text, const std::string& field) {
  std::vector<int> out;
  for (double v : parse_real_range(text, field)) {
    if (v != std::floor(v) || std::abs(v) > 1e6) {
      throw ValidationError(field, "expected an integer, got " + std::to_string(v));
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

double parse_real(const std::string& text, const std::string& field) { return real_or_fraction(trim(text), field); }

Space parse_space(const std::string& s) {
  if (s == "position") return Space::Position;
  if (s == "momentum") return Space::Momentum;
  throw ValidationError("space", "expected position or momentum, got '" + s + "'");
}

Mode parse_mode(const std::string& s) {
  if (s == "paper") return Mode::PaperFaithful;
  if (s == "normalized") return Mode::Renormalized;
  throw ValidationError("mode", "expected paper or normalized, got '" + s + "'");
}

MethodChoice parse_method(const std::string& s) {
  if (s == "analytic") return MethodChoice::Analytic;
  if (s == "quadrature") return MethodChoice::Quadrature;
  if (s == "both") return MethodChoice::Both;
  throw ValidationError("method", "expected analytic, quadrature or both, got '" + s + "'");
}

}  // namespace phentropy::cli
