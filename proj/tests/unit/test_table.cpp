#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>
#include <string>

#include "phentropy/errors.hpp"
#include "phentropy/table.hpp"

using namespace phentropy;

namespace {
TableSpec fisher_spec() {
  TableSpec spec;
  spec.measure = TableMeasure::Fisher;
  spec.molecules = {"Na2", "Cl2"};
  spec.n_values = {0, 1, 2};
  spec.ell_values = {0, 1};
  return spec;
}

std::string csv(const std::vector<TableRow>& rows, bool full = false) {
  std::ostringstream os;
  write_csv(os, rows, full);
  return os.str();
}
}  // namespace

TEST_CASE("rows come in molecule, n, l order", "[table]") {
  const auto rows = tabulate(fisher_spec(), builtin_molecules());
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].molecule == "Na2");
  CHECK(rows[1].ell == 1);
  CHECK(rows[2].n == 1);
  CHECK(rows[6].molecule == "Cl2");
  CHECK(rows[0].space == "position");
  CHECK(rows[0].method == "quadrature");
}

TEST_CASE("parallel and serial tabulation are bit-identical", "[table]") {
  auto spec = fisher_spec();
  spec.method = MethodChoice::Both;
  const auto a = tabulate(spec, builtin_molecules());
  const auto b = tabulate_serial(spec, builtin_molecules());
  CHECK(csv(a, true) == csv(b, true));
  CHECK(csv(a, true) == csv(tabulate(spec, builtin_molecules()), true));
}

TEST_CASE("method both emits analytic rows only where they exist", "[table]") {
  TableSpec spec;
  spec.measure = TableMeasure::Fisher;
  spec.space = Space::Momentum;
  spec.molecules = {"NO+"};
  spec.n_values = {0, 1};
  spec.method = MethodChoice::Both;
  const auto rows = tabulate(spec, builtin_molecules());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].method == "analytic");
  CHECK(rows[1].method == "quadrature");
  CHECK(rows[2].n == 1);
  spec.method = MethodChoice::Analytic;
  CHECK_THROWS_AS(tabulate(spec, builtin_molecules()), UnsupportedMethod);
}

TEST_CASE("CSV layout", "[table]") {
  TableSpec spec;
  spec.measure = TableMeasure::Renyi;
  spec.q = 2.0;
  spec.molecules = {"O2+"};
  const auto rows = tabulate(spec, builtin_molecules());
  const auto text = csv(rows);
  CHECK(text.rfind("molecule,n,l,q,space,method,value,err,norm_deficit\n", 0) == 0);
  CHECK(text.find("O2+,0,0,2,position,quadrature,") != std::string::npos);
  // 6 significant digits by default, 17 with full precision.
  CHECK(text.find(",1.27924,") != std::string::npos);
  CHECK(csv(rows, true).find(",1.27924") != std::string::npos);
  CHECK(csv(rows, true).size() > text.size());
}

TEST_CASE("JSON records mirror the CSV columns", "[table]") {
  TableSpec spec;
  spec.measure = TableMeasure::ShannonRatio;
  spec.molecules = {"Na2"};
  const auto rows = tabulate(spec, builtin_molecules());
  std::ostringstream os;
  write_json(os, rows);
  const auto j = nlohmann::json::parse(os.str());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["space"] == "ratio");
  CHECK(j[0]["q"].is_null());
  for (const char* key : {"molecule", "n", "l", "q", "space", "method", "value", "err", "norm_deficit"}) {
    CHECK(j[0].contains(key));
  }
}

TEST_CASE("spec validation", "[table]") {
  const auto mols = builtin_molecules();
  auto spec = fisher_spec();
  spec.molecules.clear();
  CHECK_THROWS_AS(tabulate(spec, mols), ValidationError);
  spec = fisher_spec();
  spec.molecules = {"H2"};
  CHECK_THROWS_AS(tabulate(spec, mols), ValidationError);
  spec = fisher_spec();
  spec.q = 2.0;
  CHECK_THROWS_AS(tabulate(spec, mols), ValidationError);
  spec.measure = TableMeasure::Tsallis;
  spec.q.reset();
  CHECK_THROWS_AS(tabulate(spec, mols), ValidationError);
  spec = fisher_spec();
  spec.n_values = {-1};
  CHECK_THROWS_AS(tabulate(spec, mols), ValidationError);
  CHECK_THROWS_AS(parse_measure("entropy"), ValidationError);
}

TEST_CASE("sweeps give one column per molecule", "[table]") {
  SweepSpec sw;
  sw.base.measure = TableMeasure::Renyi;
  sw.base.molecules = {"Cl2"};
  sw.axis = SweepAxis::Q;
  sw.points = {2, 3, 4, 5, 6, 7};
  const auto r = sweep(sw, builtin_molecules());
  REQUIRE(r.values.size() == 6);
  REQUIRE(r.values[0].size() == 1);
  CHECK(r.axis_name == "q");
  for (std::size_t i = 1; i < r.values.size(); ++i) CHECK(r.values[i][0] > r.values[i - 1][0]);

  std::ostringstream os;
  write_sweep_csv(os, r);
  CHECK(os.str().rfind("q,Cl2\n2,", 0) == 0);

  sw.axis = SweepAxis::Ell;
  sw.points = {0.5};
  sw.base.q = 2.0;
  CHECK_THROWS_AS(sweep(sw, builtin_molecules()), ValidationError);
  sw.points.clear();
  CHECK_THROWS_AS(sweep(sw, builtin_molecules()), ValidationError);
}
