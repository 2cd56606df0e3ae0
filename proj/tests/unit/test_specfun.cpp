#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "phentropy/specfun.hpp"

using namespace phentropy;
using Catch::Matchers::WithinRel;
using Catch::Matchers::WithinAbs;

// Reference values: tests/oracles/frozen_values.txt (mpmath, 40 digits).

TEST_CASE("Laguerre recurrence", "[specfun]") {
  CHECK_THAT(specfun::laguerre(5, 2.5, 3.7), WithinRel(2.0766806666666666667, 1e-14));
  CHECK(specfun::laguerre(0, 1.5, 10.0) == 1.0);
  CHECK_THAT(specfun::laguerre(1, 1.5, 0.5), WithinRel(2.0, 1e-15));
  CHECK_THROWS_AS(specfun::laguerre(-1, 0.5, 1.0), DomainError);
}

TEST_CASE("Laguerre derivative matches the shifted polynomial", "[specfun]") {
  for (double x : {0.1, 1.0, 4.2, 11.0}) {
    const auto v = specfun::laguerre_with_derivative(6, 3.8, x);
    CHECK(v.value == specfun::laguerre(6, 3.8, x));
    CHECK_THAT(v.derivative, WithinRel(-specfun::laguerre(5, 4.8, x), 1e-13));
  }
}

TEST_CASE("Laguerre roots are zeros in ascending order", "[specfun]") {
  CHECK(specfun::laguerre_roots(0, 3.8).empty());
  const auto r1 = specfun::laguerre_roots(1, 3.8);
  REQUIRE(r1.size() == 1);
  CHECK_THAT(r1[0], WithinRel(4.8, 1e-14));
  const auto r = specfun::laguerre_roots(10, 3.7955);
  REQUIRE(r.size() == 10);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) CHECK(r[i] > r[i - 1]);
    const double scale = std::abs(specfun::laguerre_with_derivative(10, 3.7955, r[i]).derivative) * r[i];
    CHECK(std::abs(specfun::laguerre(10, 3.7955, r[i])) < 1e-12 * scale);
  }
}

TEST_CASE("orthonormal Laguerre coefficients", "[specfun]") {
  const auto c = specfun::orthonormal_laguerre_coeffs(1, 0.5);
  REQUIRE(c.c.size() == 2);
  CHECK_THAT(c.c[0], WithinRel(1.3009876058761162775, 1e-14));
  CHECK_THAT(c.c[1], WithinRel(-0.86732507058407751832, 1e-14));
}

TEST_CASE("partial Bell polynomial against partition enumeration", "[specfun]") {
  const std::vector<double> a{1, 2, 3, 4};
  CHECK_THAT(specfun::bell_polynomial(6, 3, std::span<const double>(a)), WithinRel(540.0, 1e-15));
  CHECK(specfun::bell_polynomial(3, 0, std::span<const double>(a)) == 0.0);
  CHECK(specfun::bell_polynomial(0, 0, std::span<const double>(a)) == 1.0);
  CHECK(specfun::bell_polynomial(2, 3, std::span<const double>(a)) == 0.0);
  // B_{m,1} = a_m
  CHECK(specfun::bell_polynomial(4, 1, std::span<const double>(a)) == 4.0);
}

TEST_CASE("Bell power coefficients equal repeated convolution", "[specfun]") {
  const specfun::PolyCoeffs p{{1.0, -0.75, 0.125, -1.0 / 96}};
  for (int s : {1, 2, 5}) {
    const auto by_bell = specfun::bell_power_coefficients(p, s);
    const auto by_conv = specfun::poly_power(p, s);
    REQUIRE(by_bell.c.size() == by_conv.c.size());
    for (std::size_t k = 0; k < by_bell.c.size(); ++k) {
      CHECK_THAT(by_bell.c[k], WithinAbs(by_conv.c[k], 1e-13 * std::max(1.0, std::abs(by_conv.c[k]))));
    }
  }
  CHECK_THROWS_AS(specfun::poly_power(p, 0), DomainError);
}

TEST_CASE("symmetric Lauricella series against the naive multiple sum", "[specfun]") {
  CHECK_THAT(specfun::lauricella_fa_symmetric(3.5, 2, 2.0, 4, 0, 0.5), WithinRel(0.07334995269775390625, 1e-12));
  CHECK_THAT(specfun::lauricella_fa_symmetric(1.25, 3, 2.75, 3, 2, 0.3), WithinRel(0.056029421260345164059, 1e-12));
  // Chu-Vandermonde: 2F1(-3, 3.5; 1.5; 1) = (1.5 - 3.5)_3 / (1.5)_3 = 0 exactly.
  CHECK(specfun::lauricella_fa_symmetric(3.5, 3, 1.5, 1, 0, 1.0) == 0.0);
}

TEST_CASE("Theta_0 against its defining integral", "[specfun]") {
  CHECK_THAT(specfun::theta0(2, 1, 3.2955), WithinRel(99251.82052568420409, 1e-11));
  CHECK_THAT(specfun::theta0(2, 2, 3.2955), WithinRel(685532.2193271204698, 1e-11));
  CHECK_THAT(specfun::theta0(3, 2, 3.2955), WithinRel(13861554948.826895393, 1e-11));
  const auto lv = specfun::theta0_log(3, 2, 3.2955);
  CHECK_THAT(lv.log_abs, WithinRel(std::log(13861554948.826895393), 1e-13));
  CHECK_THROWS_AS(specfun::theta0(0, 2, 3.2955), DomainError);
}

TEST_CASE("theta0 survives orders where double cancels", "[specfun]") {
  // Large n and q force the ladder above double; the result must stay finite.
  const auto lv = specfun::theta0_log(10, 10, 20.0);
  CHECK(std::isfinite(lv.log_abs));
  CHECK(lv.digits > 16);
}

TEST_CASE("log binomial", "[specfun]") {
  CHECK_THAT(specfun::log_binomial(10, 3), WithinRel(std::log(120.0), 1e-14));
  CHECK_THAT(specfun::log_binomial(4.5, 2), WithinRel(std::log(4.5 * 3.5 / 2), 1e-14));
}
