#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "phentropy/errors.hpp"
#include "phentropy/moldata.hpp"

using namespace phentropy;

TEST_CASE("builtin molecules carry the tabulated constants", "[moldata]") {
  const auto t = builtin_molecules();
  REQUIRE(t.size() == 5);
  CHECK(t[0].name == "Na2");
  CHECK(t.at("Cl2").d_e == 2.513903386);
  CHECK(t.at("NO+").r_e == 1.063);
  CHECK(t.find("H2") == nullptr);
  CHECK_THROWS_AS(t.at("H2"), ValidationError);
}

TEST_CASE("write then load is the identity", "[moldata]") {
  auto t = builtin_molecules();
  t.add({"odd", 0.1 + 0.2, 1.0 / 3.0});
  std::stringstream buf;
  write_molecules(buf, t);
  CHECK(load_molecules(buf) == t);
}

TEST_CASE("loader skips comments and blank lines", "[moldata]") {
  std::istringstream in("# name, d_e, r_e\n\n  H2 , 4.7446, 0.7416  # hydrogen\n");
  const auto t = load_molecules(in);
  REQUIRE(t.size() == 1);
  CHECK(t[0] == MoleculeParams{"H2", 4.7446, 0.7416});
}

TEST_CASE("loader reports the failing line and field", "[moldata]") {
  std::istringstream bad("A, 1, 1\nB, x, 1\n");
  try {
    load_molecules(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream short_line("A, 1\n");
  CHECK_THROWS_AS(load_molecules(short_line), ParseError);

  std::istringstream neg_de("A, -1, 1\n");
  try {
    load_molecules(neg_de);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "d_e");
  }
  std::istringstream zero_re("A, 1, 0\n");
  try {
    load_molecules(zero_re);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "r_e");
  }
}

TEST_CASE("duplicate names are rejected, merges replace in place", "[moldata]") {
  MoleculeTable t;
  t.add({"A", 1, 1});
  CHECK_THROWS_AS(t.add({"A", 2, 2}), ValidationError);

  MoleculeTable over;
  over.add({"Cl2", 3.0, 2.0});
  over.add({"H2", 4.7446, 0.7416});
  const auto merged = builtin_molecules().merged_with(over);
  REQUIRE(merged.size() == 6);
  CHECK(merged[1] == MoleculeParams{"Cl2", 3.0, 2.0});
  CHECK(merged[5].name == "H2");
}
