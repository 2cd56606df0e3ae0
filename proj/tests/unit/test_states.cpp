#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "phentropy/errors.hpp"
#include "phentropy/states.hpp"

using namespace phentropy;
using Catch::Matchers::WithinRel;
using Catch::Matchers::WithinAbs;

namespace {
const MoleculeParams kNa2{"Na2", 0.746707167, 3.079};
}

TEST_CASE("state parameters", "[states]") {
  CHECK_THAT(gamma_ell(kNa2.d_e * kNa2.r_e * kNa2.r_e, 0), WithinRel(3.2957776277298560947, 1e-14));
  CHECK_THAT(gamma_ell(kNa2.d_e * kNa2.r_e * kNa2.r_e, 1), WithinRel(3.5506700432366117371, 1e-14));
  CHECK(gamma_ell(0.0, 0) == 0.0);
  const auto s = make_state(kNa2, 2, 1);
  CHECK_THAT(s.lambda, WithinRel(0.19844971207973397593, 1e-14));
  CHECK(s.alpha() == s.gamma_ell + 0.5);
  CHECK_THROWS_AS(make_state(kNa2, -1, 0), DomainError);
  CHECK_THROWS_AS(make_state(kNa2, 0, -1), DomainError);
  CHECK_THROWS_AS(gamma_ell(1.0, -2), DomainError);
}

TEST_CASE("potential", "[states]") {
  CHECK(potential(kNa2, kNa2.r_e) == 0.0);
  CHECK_THAT(potential(kNa2, kNa2.r_e / 2), WithinRel(1.68009112575, 1e-12));
  CHECK_THROWS_AS(potential(kNa2, 0.0), DomainError);
}

TEST_CASE("densities at sample points", "[states]") {
  CHECK_THAT(position_density(make_state(kNa2, 0, 0), kNa2.r_e), WithinRel(0.0097982405436586982118, 1e-12));
  CHECK_THAT(position_density(make_state(kNa2, 3, 2), kNa2.r_e), WithinRel(0.0011251448281077594265, 1e-12));
  const auto s0 = make_state(kNa2, 0, 0);
  CHECK_THAT(momentum_density(s0, s0.lambda), WithinRel(0.00078866737827656350611, 1e-12));
  CHECK_THAT(momentum_density(make_state(kNa2, 2, 1), 1.3), WithinRel(1.6086718910516578293e-6, 1e-12));
  CHECK(position_density(s0, 0.0) == 0.0);
  CHECK_THROWS_AS(position_density(s0, -1.0), DomainError);
}

TEST_CASE("unnormalized norms", "[states]") {
  // Position norm is n-independent; momentum is not.
  CHECK_THAT(radial_norm(make_state(kNa2, 0, 0), Space::Position), WithinRel(2.384368659602178255, 1e-10));
  CHECK_THAT(radial_norm(make_state(kNa2, 3, 0), Space::Position), WithinRel(2.384368659602178255, 1e-10));
  CHECK_THAT(radial_norm(make_state(kNa2, 0, 0), Space::Momentum), WithinRel(0.085842130210313904545, 1e-10));
  CHECK_THAT(radial_norm(make_state(kNa2, 3, 0), Space::Momentum), WithinRel(0.5851383753904448467, 1e-10));
}

TEST_CASE("closed-form norm agrees with quadrature", "[states]") {
  for (int n : {0, 4, 9}) {
    const auto s = make_state(kNa2, n, 3);
    for (auto sp : {Space::Position, Space::Momentum}) {
      const double closed = std::exp(log_entropic_moment_bell(shape(s, sp), 1).log_abs);
      CHECK_THAT(closed, WithinRel(radial_norm(s, sp), 1e-10));
    }
  }
}

TEST_CASE("renormalized densities integrate to one", "[states]") {
  for (int n : {0, 5, 10}) {
    const auto s = make_state(kNa2, n, 2, Mode::Renormalized);
    CHECK_THAT(radial_norm(s, Space::Position), WithinAbs(1.0, 1e-10));
    CHECK_THAT(radial_norm(s, Space::Momentum), WithinAbs(1.0, 1e-10));
  }
}

TEST_CASE("nodes are zeros of the density", "[states]") {
  const auto s = make_state(kNa2, 4, 0);
  for (auto sp : {Space::Position, Space::Momentum}) {
    const auto nodes = density_nodes(s, sp);
    REQUIRE(nodes.size() == 4);
    for (double x : nodes) {
      CHECK(laguerre_factor(s, sp, x * (1 - 1e-9)) * laguerre_factor(s, sp, x * (1 + 1e-9)) < 0.0);
      CHECK(fisher_integrand(s, sp, x) >= 0.0);
      CHECK(std::isfinite(fisher_integrand(s, sp, x)));
    }
  }
  CHECK(density_nodes(make_state(kNa2, 0, 0), Space::Position).empty());
}

TEST_CASE("derivative agrees with a central difference", "[states]") {
  const auto s = make_state(kNa2, 2, 1);
  const RadialDensity rho(s, Space::Position);
  for (double r : {1.0, 2.5, 3.079, 4.4}) {
    const double h = 1e-5;
    const double fd = (rho(r + h) - rho(r - h)) / (2 * h);
    CHECK_THAT(rho.derivative(r), WithinAbs(fd, 1e-7 * (1 + std::abs(fd))));
  }
  CHECK_THROWS_AS(density_derivative(s, Space::Position, 0.0), DomainError);
}

TEST_CASE("log density", "[states]") {
  const auto s = make_state(kNa2, 1, 0);
  CHECK_THAT(log_density(s, Space::Momentum, 0.7), WithinRel(std::log(momentum_density(s, 0.7)), 1e-13));
  CHECK(log_density(s, Space::Position, 0.0) == -std::numeric_limits<double>::infinity());
}
