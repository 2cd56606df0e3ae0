// phentropy: information measures of pseudoharmonic diatomic states.
//
//   phentropy table --measure fisher --space position --molecule Na2 --n 0:10
//   phentropy sweep --measure renyi --molecule Cl2 --vary q --q 2:7
//   phentropy check --tol normalization=1e-12 --ledger checks.jsonl
//
// Exit status: 0 success, 1 failed checks, 2 bad input, 3 numerical failure.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cli_args.hpp"
#include "phentropy/check.hpp"
#include "phentropy/errors.hpp"
#include "phentropy/moldata.hpp"
#include "phentropy/table.hpp"

namespace {

using namespace phentropy;

struct CommonOptions {
  std::string measure = "fisher";
  std::string space = "position";
  std::string q;
  std::vector<std::string> molecules;
  std::string n = "0";
  std::string ell = "0";
  std::string mode = "paper";
  std::string method = "quadrature";
  std::string format = "csv";
  std::string molecule_file;
  bool full_precision = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--measure", o.measure,
                  "fisher, shannon, renyi, tsallis, onicescu, wq, fisher-ratio, shannon-ratio, renyi-ratio")
      ->capture_default_str();
  cmd->add_option("--space", o.space, "position or momentum (ignored for ratios)")->capture_default_str();
  cmd->add_option("--q", o.q, "entropic index, e.g. 2, 2/3 or 2:7");
  cmd->add_option("--molecule", o.molecules, "molecule name (repeatable; default: all)");
  cmd->add_option("--n", o.n, "vibrational quantum numbers, e.g. 0:10")->capture_default_str();
  cmd->add_option("--l", o.ell, "rotational quantum numbers, e.g. 0:50")->capture_default_str();
  cmd->add_option("--mode", o.mode, "paper or normalized")->capture_default_str();
  cmd->add_option("--method", o.method, "analytic, quadrature or both")->capture_default_str();
  cmd->add_option("--format", o.format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--molecules", o.molecule_file, "file of 'name, d_e, r_e' lines added to the built-in set");
  cmd->add_flag("--full-precision", o.full_precision, "print 17 significant digits instead of 6");
}

MoleculeTable molecule_table(const std::string& path) {
  auto table = builtin_molecules();
  if (path.empty()) return table;
  std::ifstream in(path);
  if (!in) throw ValidationError("molecules", "cannot open '" + path + "'");
  return table.merged_with(load_molecules(in));
}

TableSpec table_spec(const CommonOptions& o, const MoleculeTable& table) {
  TableSpec spec;
  spec.measure = parse_measure(o.measure);
  spec.space = cli::parse_space(o.space);
  spec.mode = cli::parse_mode(o.mode);
  spec.method = cli::parse_method(o.method);
  spec.n_values = cli::parse_int_range(o.n, "n");
  spec.ell_values = cli::parse_int_range(o.ell, "l");
  if (o.molecules.empty()) {
    for (const auto& m : table) spec.molecules.push_back(m.name);
  } else {
    spec.molecules = o.molecules;
  }
  return spec;
}

int run_table(const CommonOptions& o) {
  const auto molecules = molecule_table(o.molecule_file);
  auto spec = table_spec(o, molecules);
  std::vector<TableRow> rows;
  // Several q values produce one block per q, in the order given.
  std::vector<std::optional<double>> qs{std::nullopt};
  if (!o.q.empty()) {
    qs.clear();
    for (double q : cli::parse_real_range(o.q, "q")) qs.emplace_back(q);
  }
  for (const auto& q : qs) {
    spec.q = q;
    auto part = tabulate(spec, molecules);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  if (o.format == "json") {
    write_json(std::cout, rows, o.full_precision);
  } else {
    write_csv(std::cout, rows, o.full_precision);
  }
  return 0;
}

int run_sweep(const CommonOptions& o, const std::string& vary) {
  const auto molecules = molecule_table(o.molecule_file);
  SweepSpec sw;
  sw.base = table_spec(o, molecules);
  if (vary == "l") {
    sw.axis = SweepAxis::Ell;
    sw.points = cli::parse_real_range(o.ell, "l");
    sw.base.ell_values = {0};
  } else if (vary == "q") {
    sw.axis = SweepAxis::Q;
    sw.points = cli::parse_real_range(o.q, "q");
  } else {
    sw.axis = SweepAxis::N;
    sw.points = cli::parse_real_range(o.n, "n");
    sw.base.n_values = {0};
  }
  if (sw.axis != SweepAxis::Q && !o.q.empty()) sw.base.q = cli::parse_real(o.q, "q");
  const auto result = sweep(sw, molecules);
  if (o.format == "json") {
    write_sweep_json(std::cout, result, o.full_precision);
  } else {
    write_sweep_csv(std::cout, result, o.full_precision);
  }
  return 0;
}

struct CheckCli {
  std::optional<double> tolerance;
  std::vector<std::string> per_check;
  std::vector<std::string> only;
  std::string ledger = "phentropy-checks.jsonl";
  bool no_ledger = false;
  std::string molecule_file;
};

int run_check(const CheckCli& c) {
  CheckOptions opts;
  opts.tolerance = c.tolerance;
  opts.only = c.only;
  for (const auto& item : c.per_check) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("tol", "expected name=value, got '" + item + "'");
    opts.per_check[item.substr(0, eq)] = cli::parse_real(item.substr(eq + 1), "tol");
  }
  const auto outcomes = run_checks(opts, molecule_table(c.molecule_file));
  write_check_report(std::cout, outcomes);
  if (!c.no_ledger) append_check_ledger(c.ledger, outcomes);
  for (const auto& r : outcomes) {
    if (!r.passed) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-theoretic measures of pseudoharmonic diatomic states"};
  app.require_subcommand(1);

  CommonOptions table_opts;
  auto* table_cmd = app.add_subcommand("table", "one row per (molecule, n, l)");
  add_common(table_cmd, table_opts);

  CommonOptions sweep_opts;
  std::string vary;
  auto* sweep_cmd = app.add_subcommand("sweep", "one column per molecule, one row per point of the varied axis");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--vary", vary, "axis to vary: l, q or n")->required()->check(CLI::IsMember({"l", "q", "n"}));

  CheckCli check_opts;
  auto* check_cmd = app.add_subcommand("check", "run the cross-validation suite; exit 0 iff every check passes");
  check_cmd->add_option("--tolerance", check_opts.tolerance, "replace every threshold");
  check_cmd->add_option("--tol", check_opts.per_check, "replace one threshold: name=value (repeatable)");
  check_cmd->add_option("--only", check_opts.only, "run only the named checks (repeatable)");
  check_cmd->add_option("--ledger", check_opts.ledger, "JSON-lines file the outcomes are appended to")
      ->capture_default_str();
  check_cmd->add_flag("--no-ledger", check_opts.no_ledger, "do not append to the ledger");
  check_cmd->add_option("--molecules", check_opts.molecule_file, "extra molecule file");
  check_cmd->add_flag_callback("--list", [] {
    for (const auto& n : check_names()) std::cout << n << '\n';
    throw CLI::Success();
  }, "list check names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*table_cmd) return run_table(table_opts);
    if (*sweep_cmd) return run_sweep(sweep_opts, vary);
    return run_check(check_opts);
  } catch (const ParseError& e) {
    std::cerr << "phentropy: molecule file " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    // ValidationError, UnsupportedMethod, DegenerateParameter
    std::cerr << "phentropy: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "phentropy: " << e.what() << '\n';
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "phentropy: " << e.what() << fmt::format(" (best value {:.6g}, error {:.2g})", e.best_value(), e.best_error())
              << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "phentropy: " << e.what() << '\n';
    return 3;
  }
}
