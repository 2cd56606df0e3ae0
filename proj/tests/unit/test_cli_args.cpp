#include <catch2/catch_amalgamated.hpp>

#include "cli_args.hpp"
#include "phentropy/errors.hpp"

using namespace phentropy;
using namespace phentropy::cli;

TEST_CASE("integer ranges", "[cli]") {
  CHECK(parse_int_range("5", "n") == std::vector<int>{5});
  CHECK(parse_int_range("0:3", "n") == std::vector<int>{0, 1, 2, 3});
  CHECK(parse_int_range("0:10:5", "n") == std::vector<int>{0, 5, 10});
  CHECK(parse_int_range("1, 3,7:8", "n") == std::vector<int>{1, 3, 7, 8});
  CHECK_THROWS_AS(parse_int_range("", "n"), ValidationError);
  CHECK_THROWS_AS(parse_int_range("3:1", "n"), ValidationError);
  CHECK_THROWS_AS(parse_int_range("1.5", "n"), ValidationError);
  CHECK_THROWS_AS(parse_int_range("1,,2", "n"), ValidationError);
  CHECK_THROWS_AS(parse_int_range("0:4:0", "n"), ValidationError);
  CHECK_THROWS_AS(parse_int_range("a", "n"), ValidationError);
}

TEST_CASE("real ranges and fractions", "[cli]") {
  CHECK(parse_real_range("2,3,4,5,10", "q") == std::vector<double>{2, 3, 4, 5, 10});
  CHECK(parse_real_range("1:2:0.25", "q") == std::vector<double>{1, 1.25, 1.5, 1.75, 2});
  const auto third = parse_real_range("2/3", "q");
  REQUIRE(third.size() == 1);
  CHECK(third[0] == 2.0 / 3.0);
  CHECK(parse_real("0.5", "q") == 0.5);
  CHECK_THROWS_AS(parse_real("1/0", "q"), ValidationError);
  CHECK_THROWS_AS(parse_real("1/2/3", "q"), ValidationError);
}

TEST_CASE("enumerated flags", "[cli]") {
  CHECK(parse_space("momentum") == Space::Momentum);
  CHECK(parse_mode("normalized") == Mode::Renormalized);
  CHECK(parse_mode("paper") == Mode::PaperFaithful);
  CHECK(parse_method("both") == MethodChoice::Both);
  CHECK_THROWS_AS(parse_space("spin"), ValidationError);
  CHECK_THROWS_AS(parse_mode("Paper"), ValidationError);
  CHECK_THROWS_AS(parse_method("mc"), ValidationError);
}
