#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace phentropy {

/// Spectroscopic constants of one diatomic molecule.
/// Energies in eV and lengths in Angstrom, used as-is with hbar = mu = 1.
struct MoleculeParams {
  std::string name;
  double d_e = 0.0;  // dissociation energy
  double r_e = 0.0;  // equilibrium separation

  friend bool operator==(const MoleculeParams&, const MoleculeParams&) = default;
};

/// Ordered, name-unique collection of molecules. Immutable once built
/// except through the explicit mutators below.
class MoleculeTable {
 public:
  MoleculeTable() = default;

  /// Appends a molecule; throws ValidationError on a duplicate name or
  /// non-positive constants.
  void add(MoleculeParams m);

  /// Returns a copy of this table in which every entry of `overrides` either
  /// replaces the same-named molecule in place or is appended.
  MoleculeTable merged_with(const MoleculeTable& overrides) const;

  const MoleculeParams* find(std::string_view name) const noexcept;
  /// Like find() but throws ValidationError naming the unknown molecule.
  const MoleculeParams& at(std::string_view name) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const MoleculeParams& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const MoleculeTable&, const MoleculeTable&) = default;

 private:
  std::vector<MoleculeParams> entries_;
};

/// The five molecules with their tabulated constants (Na2, Cl2, O2+, N2+, NO+).
MoleculeTable builtin_molecules();

/// Parses `name, d_e, r_e` lines. Blank lines and `#` comments are skipped.
/// Throws ParseError (with line number) on malformed lines and
/// ValidationError naming `d_e` or `r_e` on non-positive values.
MoleculeTable load_molecules(std::istream& source);

/// Writes the table in the format accepted by load_molecules, using
/// shortest round-trip decimal representations.
void write_molecules(std::ostream& sink, const MoleculeTable& table);

}  // namespace phentropy
