#pragma once

// Grids of measure values over (molecule, n, l) and plot-ready sweeps.
//
// tabulate() spreads cells over OpenMP threads; tabulate_serial() is the
// single-threaded reference. Both return rows in the same order with
// bit-identical values.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phentropy/measures.hpp"
#include "phentropy/moldata.hpp"

namespace phentropy {

enum class TableMeasure { Fisher, Shannon, Renyi, Tsallis, Onicescu, Wq, FisherRatio, ShannonRatio, RenyiRatio };
enum class MethodChoice { Analytic, Quadrature, Both };

/// Parses "fisher", "shannon", "renyi", "tsallis", "onicescu", "wq",
/// "fisher-ratio", "shannon-ratio", "renyi-ratio".
TableMeasure parse_measure(const std::string& s);
const char* to_string(TableMeasure m) noexcept;
bool needs_q(TableMeasure m) noexcept;
bool is_ratio(TableMeasure m) noexcept;

struct TableSpec {
  TableMeasure measure = TableMeasure::Fisher;
  Space space = Space::Position;  // ignored for ratios
  std::optional<double> q;
  std::vector<std::string> molecules;
  std::vector<int> n_values{0};
  std::vector<int> ell_values{0};
  Mode mode = Mode::PaperFaithful;
  MethodChoice method = MethodChoice::Quadrature;

  /// Throws ValidationError for empty ranges, unknown molecules, negative
  /// quantum numbers, or q given/missing against the measure.
  void validate(const MoleculeTable& table) const;
};

struct TableRow {
  std::string molecule;
  int n = 0;
  int ell = 0;
  std::optional<double> q;
  std::string space;  // "position", "momentum" or "ratio"
  std::string method;
  double value = 0.0;
  double err = 0.0;
  double norm_deficit = 0.0;
};

/// With MethodChoice::Both each cell yields its analytic row (when a closed
/// form exists) followed by its quadrature row. An explicitly requested
/// analytic method without a closed form throws UnsupportedMethod.
std::vector<TableRow> tabulate(const TableSpec& spec, const MoleculeTable& table,
                               const quadrature::QuadratureConfig& cfg = {});
std::vector<TableRow> tabulate_serial(const TableSpec& spec, const MoleculeTable& table,
                                      const quadrature::QuadratureConfig& cfg = {});

/// Header `molecule,n,l,q,space,method,value,err,norm_deficit`; 6 significant
/// digits, or 17 with full_precision.
void write_csv(std::ostream& os, const std::vector<TableRow>& rows, bool full_precision = false);
/// Array of objects with the CSV column names as keys.
void write_json(std::ostream& os, const std::vector<TableRow>& rows, bool full_precision = false);

enum class SweepAxis { Ell, Q, N };

struct SweepSpec {
  TableSpec base;  // n_values / ell_values / q give the fixed coordinates
  SweepAxis axis = SweepAxis::Ell;
  std::vector<double> points;
};

struct SweepResult {
  std::string axis_name;
  std::vector<std::string> molecules;
  std::vector<double> points;
  std::vector<std::vector<double>> values;  // [point][molecule]
};

/// One quadrature value (analytic when the base spec asks for it) per
/// (point, molecule). The fixed coordinates must be single values.
SweepResult sweep(const SweepSpec& spec, const MoleculeTable& table, const quadrature::QuadratureConfig& cfg = {});
void write_sweep_csv(std::ostream& os, const SweepResult& r, bool full_precision = false);
void write_sweep_json(std::ostream& os, const SweepResult& r, bool full_precision = false);

}  // namespace phentropy
