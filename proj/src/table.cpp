#include "phentropy/table.hpp"

#include <fmt/format.h>

#include <cmath>
#include <exception>
#include <json.hpp>
#include <ostream>

#include "phentropy/errors.hpp"

namespace phentropy {

namespace {

struct Cell {
  const MoleculeParams* mol;
  int n;
  int ell;
  std::optional<double> q;
};

Kind kind_of(TableMeasure m) {
  switch (m) {
    case TableMeasure::Fisher: return Kind::Fisher;
    case TableMeasure::Shannon: return Kind::Shannon;
    case TableMeasure::Renyi: return Kind::Renyi;
    case TableMeasure::Tsallis: return Kind::Tsallis;
    case TableMeasure::Onicescu: return Kind::Onicescu;
    case TableMeasure::Wq: return Kind::Wq;
    default: throw DomainError("ratio measures have no single kind");
  }
}

MeasureResult measure_one(TableMeasure m, const StateParams& s, std::optional<double> q, Space space, Method method,
                          const quadrature::QuadratureConfig& cfg) {
  switch (m) {
    case TableMeasure::Fisher: return fisher(s, space, method, cfg);
    case TableMeasure::Shannon: return shannon(s, space, method, cfg);
    case TableMeasure::Renyi: return renyi(s, *q, space, method, cfg);
    case TableMeasure::Tsallis: return tsallis(s, *q, space, method, cfg);
    case TableMeasure::Onicescu: return onicescu(s, space, method, cfg);
    case TableMeasure::Wq: return wq(s, *q, space, method, cfg);
    default: break;
  }
  throw DomainError("measure_one: ratio measure");
}

RatioKind ratio_kind(TableMeasure m) {
  switch (m) {
    case TableMeasure::FisherRatio: return RatioKind::Fisher;
    case TableMeasure::ShannonRatio: return RatioKind::Shannon;
    default: return RatioKind::Renyi;
  }
}

void require_finite(const TableRow& row) {
  if (!std::isfinite(row.value) || !std::isfinite(row.err) || !std::isfinite(row.norm_deficit)) {
    throw ConvergenceError("non-finite value for " + row.molecule + " n=" + std::to_string(row.n) +
                               " l=" + std::to_string(row.ell),
                           row.value, row.err);
  }
}

std::vector<TableRow> eval_cell(const TableSpec& spec, const Cell& c, const quadrature::QuadratureConfig& cfg) {
  const StateParams s = make_state(*c.mol, c.n, c.ell, spec.mode);
  std::vector<TableRow> out;
  auto base_row = [&] {
    TableRow r;
    r.molecule = c.mol->name;
    r.n = c.n;
    r.ell = c.ell;
    r.q = c.q;
    return r;
  };

  if (is_ratio(spec.measure)) {
    if (spec.method == MethodChoice::Analytic) throw UnsupportedMethod("ratios are computed by quadrature only");
    TableRow r = base_row();
    r.space = "ratio";
    r.method = to_string(Method::Quadrature);
    r.value = ratio(s, ratio_kind(spec.measure), c.q, cfg);
    require_finite(r);
    out.push_back(std::move(r));
    return out;
  }

  std::vector<Method> methods;
  if (spec.method == MethodChoice::Analytic) {
    methods = {Method::Analytic};
  } else if (spec.method == MethodChoice::Quadrature) {
    methods = {Method::Quadrature};
  } else {
    if (analytic_supported(kind_of(spec.measure), spec.space, c.q, c.n)) methods.push_back(Method::Analytic);
    methods.push_back(Method::Quadrature);
  }
  for (Method m : methods) {
    const auto res = measure_one(spec.measure, s, c.q, spec.space, m, cfg);
    TableRow r = base_row();
    r.space = to_string(spec.space);
    r.method = to_string(m);
    r.value = res.value;
    r.err = res.err_estimate;
    r.norm_deficit = res.norm_deficit;
    require_finite(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Cell> cells_of(const TableSpec& spec, const MoleculeTable& table) {
  std::vector<Cell> cells;
  for (const auto& name : spec.molecules) {
    const auto* mol = &table.at(name);
    for (int n : spec.n_values) {
      for (int l : spec.ell_values) cells.push_back({mol, n, l, spec.q});
    }
  }
  return cells;
}

std::vector<TableRow> flatten(std::vector<std::vector<TableRow>>& parts) {
  std::vector<TableRow> rows;
  for (auto& p : parts) {
    for (auto& r : p) rows.push_back(std::move(r));
  }
  return rows;
}

std::string fmt_value(double v, bool full) { return full ? fmt::format("{:.17g}", v) : fmt::format("{:.6g}", v); }

double rounded(double v, bool full) { return full ? v : std::stod(fmt_value(v, false)); }

}  // namespace

TableMeasure parse_measure(const std::string& s) {
  static const std::pair<const char*, TableMeasure> names[] = {
      {"fisher", TableMeasure::Fisher},          {"shannon", TableMeasure::Shannon},
      {"renyi", TableMeasure::Renyi},            {"tsallis", TableMeasure::Tsallis},
      {"onicescu", TableMeasure::Onicescu},      {"wq", TableMeasure::Wq},
      {"fisher-ratio", TableMeasure::FisherRatio}, {"shannon-ratio", TableMeasure::ShannonRatio},
      {"renyi-ratio", TableMeasure::RenyiRatio},
  };
  for (const auto& [name, m] : names) {
    if (s == name) return m;
  }
  throw ValidationError("measure", "unknown measure '" + s + "'");
}

const char* to_string(TableMeasure m) noexcept {
  switch (m) {
    case TableMeasure::Fisher: return "fisher";
    case TableMeasure::Shannon: return "shannon";
    case TableMeasure::Renyi: return "renyi";
    case TableMeasure::Tsallis: return "tsallis";
    case TableMeasure::Onicescu: return "onicescu";
    case TableMeasure::Wq: return "wq";
    case TableMeasure::FisherRatio: return "fisher-ratio";
    case TableMeasure::ShannonRatio: return "shannon-ratio";
    case TableMeasure::RenyiRatio: return "renyi-ratio";
  }
  return "?";
}

bool needs_q(TableMeasure m) noexcept {
  return m == TableMeasure::Renyi || m == TableMeasure::Tsallis || m == TableMeasure::Wq ||
         m == TableMeasure::RenyiRatio;
}

bool is_ratio(TableMeasure m) noexcept {
  return m == TableMeasure::FisherRatio || m == TableMeasure::ShannonRatio || m == TableMeasure::RenyiRatio;
}

void TableSpec::validate(const MoleculeTable& table) const {
  if (molecules.empty()) throw ValidationError("molecule", "molecule list is empty");
  if (n_values.empty()) throw ValidationError("n", "range is empty");
  if (ell_values.empty()) throw ValidationError("l", "range is empty");
  for (const auto& m : molecules) table.at(m);
  for (int n : n_values) {
    if (n < 0) throw ValidationError("n", "must be >= 0");
  }
  for (int l : ell_values) {
    if (l < 0) throw ValidationError("l", "must be >= 0");
  }
  if (needs_q(measure) && !q) throw ValidationError("q", std::string(to_string(measure)) + " needs --q");
  if (!needs_q(measure) && q) throw ValidationError("q", std::string(to_string(measure)) + " takes no q");
  if (q && !(*q > 0.0)) throw ValidationError("q", "must be > 0");
}

std::vector<TableRow> tabulate_serial(const TableSpec& spec, const MoleculeTable& table,
                                      const quadrature::QuadratureConfig& cfg) {
  spec.validate(table);
  const auto cells = cells_of(spec, table);
  std::vector<std::vector<TableRow>> parts(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) parts[i] = eval_cell(spec, cells[i], cfg);
  return flatten(parts);
}

std::vector<TableRow> tabulate(const TableSpec& spec, const MoleculeTable& table,
                               const quadrature::QuadratureConfig& cfg) {
  spec.validate(table);
  const auto cells = cells_of(spec, table);
  const auto count = static_cast<std::ptrdiff_t>(cells.size());
  std::vector<std::vector<TableRow>> parts(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      parts[i] = eval_cell(spec, cells[i], cfg);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  // First failure in cell order, so the reported error matches the serial run.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return flatten(parts);
}

void write_csv(std::ostream& os, const std::vector<TableRow>& rows, bool full_precision) {
  os << "molecule,n,l,q,space,method,value,err,norm_deficit\n";
  for (const auto& r : rows) {
    os << r.molecule << ',' << r.n << ',' << r.ell << ',' << (r.q ? fmt::format("{}", *r.q) : std::string()) << ','
       << r.space << ',' << r.method << ',' << fmt_value(r.value, full_precision) << ','
       << fmt_value(r.err, full_precision) << ',' << fmt_value(r.norm_deficit, full_precision) << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<TableRow>& rows, bool full_precision) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o;
    o["molecule"] = r.molecule;
    o["n"] = r.n;
    o["l"] = r.ell;
    o["q"] = r.q ? nlohmann::json(*r.q) : nlohmann::json(nullptr);
    o["space"] = r.space;
    o["method"] = r.method;
    o["value"] = rounded(r.value, full_precision);
    o["err"] = rounded(r.err, full_precision);
    o["norm_deficit"] = rounded(r.norm_deficit, full_precision);
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

SweepResult sweep(const SweepSpec& spec, const MoleculeTable& table, const quadrature::QuadratureConfig& cfg) {
  const TableSpec& base = spec.base;
  if (spec.points.empty()) throw ValidationError("sweep", "no sweep points");
  if (base.n_values.size() != 1 && spec.axis != SweepAxis::N) throw ValidationError("n", "sweep needs a single n");
  if (base.ell_values.size() != 1 && spec.axis != SweepAxis::Ell) {
    throw ValidationError("l", "sweep needs a single l");
  }
  if (spec.axis == SweepAxis::Q && !needs_q(base.measure)) {
    throw ValidationError("q", std::string(to_string(base.measure)) + " has no q to sweep");
  }
  TableSpec checked = base;
  if (spec.axis == SweepAxis::Q) checked.q = spec.points.front();
  checked.validate(table);

  SweepResult out;
  out.axis_name = spec.axis == SweepAxis::Ell ? "l" : spec.axis == SweepAxis::Q ? "q" : "n";
  out.molecules = base.molecules;
  out.points = spec.points;
  out.values.assign(spec.points.size(), std::vector<double>(base.molecules.size(), 0.0));

  TableSpec cell_spec = base;
  if (cell_spec.method == MethodChoice::Both) cell_spec.method = MethodChoice::Quadrature;

  std::vector<Cell> cells;
  for (double p : spec.points) {
    for (const auto& name : base.molecules) {
      Cell c{&table.at(name), base.n_values.front(), base.ell_values.front(), base.q};
      if (spec.axis != SweepAxis::Q && (p != std::floor(p) || p < 0)) {
        throw ValidationError(out.axis_name, "sweep points must be non-negative integers");
      }
      if (spec.axis == SweepAxis::Ell) c.ell = static_cast<int>(p);
      if (spec.axis == SweepAxis::N) c.n = static_cast<int>(p);
      if (spec.axis == SweepAxis::Q) c.q = p;
      cells.push_back(c);
    }
  }
  const auto count = static_cast<std::ptrdiff_t>(cells.size());
  std::vector<double> flat(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      flat[i] = eval_cell(cell_spec, cells[i], cfg).front().value;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  const std::size_t m = base.molecules.size();
  for (std::size_t i = 0; i < cells.size(); ++i) out.values[i / m][i % m] = flat[i];
  return out;
}

void write_sweep_csv(std::ostream& os, const SweepResult& r, bool full_precision) {
  os << r.axis_name;
  for (const auto& m : r.molecules) os << ',' << m;
  os << '\n';
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    os << fmt::format("{}", r.points[i]);
    for (double v : r.values[i]) os << ',' << fmt_value(v, full_precision);
    os << '\n';
  }
}

void write_sweep_json(std::ostream& os, const SweepResult& r, bool full_precision) {
  auto arr = nlohmann::json::array();
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    nlohmann::json o;
    o[r.axis_name] = r.points[i];
    for (std::size_t j = 0; j < r.molecules.size(); ++j) o[r.molecules[j]] = rounded(r.values[i][j], full_precision);
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace phentropy
