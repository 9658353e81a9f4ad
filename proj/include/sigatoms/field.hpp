#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sigatoms/atoms.hpp"
#include "sigatoms/measure.hpp"
#include "sigatoms/rational.hpp"

namespace sigatoms {

inline constexpr std::size_t kDefaultAtomGuard = 20;

/// Every member of a finite sigma-field, listed explicitly.
struct EnumeratedField {
  SpacePtr space;
  std::vector<SubsetMask> sets;
  std::optional<AtomPartition> atom_basis;  // set by enumerate_field only
};

/// All 2^k unions of the k atoms. Sets are ordered lexicographically by
/// their ascending list of atom indices: {}, {0}, {0,1}, ..., {1}, ...
/// Throws GuardExceeded when k > guard_atoms.
EnumeratedField enumerate_field(const AtomPartition& atoms,
                                std::size_t guard_atoms = kDefaultAtomGuard);

/// Smallest family holding the generators, the empty set and the space that
/// is closed under complement and pairwise union, by fixpoint iteration.
/// Throws GuardExceeded once the family exceeds `guard` sets.
EnumeratedField closure_oracle(const GeneratorFamily& g, std::size_t guard = kOracleFieldGuard);

bool is_measurable(const SubsetMask& set, const AtomPartition& atoms);

/// Indices of the atoms making up `set`, or nullopt when it is not a union
/// of atoms.
std::optional<std::vector<std::size_t>> atom_decomposition(const SubsetMask& set,
                                                           const AtomPartition& atoms);

/// Masses P(B_i) of the atoms; nonnegative and summing to one.
class AtomMasses {
 public:
  /// Throws NegativeAtomMass or InvalidPmf when the masses do not form a
  /// distribution over the atoms.
  static AtomMasses make(AtomPartition partition, std::vector<Rational> masses);

  const AtomPartition& partition() const { return partition_; }
  const std::vector<Rational>& masses() const { return masses_; }
  const Rational& mass(std::size_t atom) const { return masses_.at(atom); }
  std::size_t size() const { return masses_.size(); }

  /// P(A) for a measurable A; throws NotMeasurable otherwise.
  Rational measure_of(const SubsetMask& set) const;

  bool operator==(const AtomMasses& other) const {
    return partition_ == other.partition_ && masses_ == other.masses_;
  }

 private:
  AtomMasses(AtomPartition partition, std::vector<Rational> masses)
      : partition_(std::move(partition)), masses_(std::move(masses)) {}

  AtomPartition partition_;
  std::vector<Rational> masses_;
};

/// Solves sum_{B_i in A} x_i = m(A) for every assigned A together with
/// sum_i x_i = 1, exactly.
///
/// Errors: NotMeasurable (names the set), Inconsistent ("measure assignment
/// inconsistent" plus the equation that reduced to 0 = c), Underdetermined
/// ("measure underdetermined" plus the unconstrained atoms), NegativeAtomMass.
AtomMasses solve_atom_masses(const MeasureAssignment& m, const AtomPartition& atoms);

/// Reports every way `m` fails to define a probability measure on the field
/// generated by `atoms`. Never throws for data problems.
ValidationReport verify_measure(const MeasureAssignment& m, const AtomPartition& atoms);

}  // namespace sigatoms
