#pragma once

#include <cstddef>
#include <vector>

#include "sigatoms/space.hpp"

namespace sigatoms {

/// The partition {B_i} of a finite space into the atoms of a sigma-field.
///
/// Blocks are kept in canonical order (by least element index) and
/// `atom_of` maps every element back to its block. Construction enforces
/// the partition axioms: non-empty, pairwise disjoint, covering.
class AtomPartition {
 public:
  static AtomPartition from_blocks(SpacePtr space, std::vector<SubsetMask> blocks);
  /// Groups elements by a class label; equal labels share a block.
  static AtomPartition from_labels(SpacePtr space, const std::vector<std::size_t>& class_of);
  static AtomPartition singletons(SpacePtr space);
  static AtomPartition trivial(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::vector<SubsetMask>& atoms() const { return atoms_; }
  const SubsetMask& atom(std::size_t i) const { return atoms_.at(i); }
  std::size_t size() const { return atoms_.size(); }
  std::size_t atom_of(std::size_t element) const { return atom_of_.at(element); }

  /// True when every block of *this lies inside some block of `coarser`.
  bool refines(const AtomPartition& coarser) const;

  bool operator==(const AtomPartition& other) const {
    return same_space(space_, other.space_) && atom_of_ == other.atom_of_;
  }

 private:
  AtomPartition(SpacePtr space, std::vector<SubsetMask> atoms, std::vector<std::size_t> atom_of)
      : space_(std::move(space)), atoms_(std::move(atoms)), atom_of_(std::move(atom_of)) {}

  SpacePtr space_;
  std::vector<SubsetMask> atoms_;
  std::vector<std::size_t> atom_of_;
};

inline constexpr std::size_t kOracleFieldGuard = std::size_t{1} << 20;

/// Splits the space by every generator in turn; the surviving blocks are the
/// classes of "no generator tells the two points apart".
AtomPartition atoms_by_refinement(const GeneratorFamily& g);

/// A generator or generator complement containing `omega` but not `eta`,
/// or the whole space when no measurable set separates them.
SubsetMask separator(std::size_t omega, std::size_t eta, const GeneratorFamily& g);

/// C_omega as the intersection of separator(omega, eta) over all eta,
/// deduplicated into blocks.
AtomPartition atoms_by_separators(const GeneratorFamily& g);

/// Test oracle: enumerates the whole generated field by closure and
/// intersects the members containing each point. Throws GuardExceeded
/// ("oracle guard exceeded") when the field outgrows `guard` sets.
AtomPartition atoms_bruteforce_oracle(const GeneratorFamily& g,
                                      std::size_t guard = kOracleFieldGuard);

}  // namespace sigatoms
