#include "phentropy/moldata.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "phentropy/errors.hpp"

namespace phentropy {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line, const char* what) {
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    throw ParseError(line, std::string("cannot parse ") + what + " from '" + std::string(field) + "'");
  }
  return v;
}

void check_positive(const MoleculeParams& m) {
  if (!(m.d_e > 0.0)) throw ValidationError("d_e", "must be > 0 for molecule " + m.name);
  if (!(m.r_e > 0.0)) throw ValidationError("r_e", "must be > 0 for molecule " + m.name);
}

}  // namespace

void MoleculeTable::add(MoleculeParams m) {
  if (m.name.empty()) throw ValidationError("name", "must not be empty");
  check_positive(m);
  if (find(m.name) != nullptr) throw ValidationError("name", "duplicate molecule " + m.name);
  entries_.push_back(std::move(m));
}

MoleculeTable MoleculeTable::merged_with(const MoleculeTable& overrides) const {
  MoleculeTable out = *this;
  for (const auto& m : overrides) {
    auto it = std::find_if(out.entries_.begin(), out.entries_.end(),
                           [&](const MoleculeParams& e) { return e.name == m.name; });
    if (it != out.entries_.end()) {
      *it = m;
    } else {
      out.entries_.push_back(m);
    }
  }
  return out;
}

const MoleculeParams* MoleculeTable::find(std::string_view name) const noexcept {
  for (const auto& m : entries_) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const MoleculeParams& MoleculeTable::at(std::string_view name) const {
  if (const auto* m = find(name)) return *m;
  throw ValidationError("molecule", "unknown molecule '" + std::string(name) + "'");
}

MoleculeTable builtin_molecules() {
  MoleculeTable t;
  t.add({"Na2", 0.746707167, 3.079});
  t.add({"Cl2", 2.513903386, 1.987});
  t.add({"O2+", 6.780447246, 1.116});
  t.add({"N2+", 8.848131541, 1.116});
  t.add({"NO+", 10.99665353, 1.063});
  return t;
}

MoleculeTable load_molecules(std::istream& source) {
  MoleculeTable table;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected 'name, d_e, r_e'");
    }
    MoleculeParams m;
    m.name = std::string(trim(line.substr(0, c1)));
    if (m.name.empty()) throw ParseError(line_no, "empty molecule name");
    m.d_e = parse_number(trim(line.substr(c1 + 1, c2 - c1 - 1)), line_no, "d_e");
    m.r_e = parse_number(trim(line.substr(c2 + 1)), line_no, "r_e");
    check_positive(m);
    if (table.find(m.name) != nullptr) throw ParseError(line_no, "duplicate molecule " + m.name);
    table.add(std::move(m));
  }
  return table;
}

void write_molecules(std::ostream& sink, const MoleculeTable& table) {
  char buf[64];
  auto shortest = [&buf](double v) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  };
  sink << "# name, d_e (eV), r_e (Angstrom)\n";
  for (const auto& m : table) sink << m.name << ", " << shortest(m.d_e) << ", " << shortest(m.r_e) << '\n';
}

}  // namespace phentropy
