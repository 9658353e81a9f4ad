#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sigatoms/atoms.hpp"
#include "sigatoms/extension.hpp"
#include "sigatoms/field.hpp"
#include "sigatoms/measure.hpp"

namespace sigatoms {

/// A total map X from a finite space into a finite list of value labels.
/// Values never taken by X are allowed and reported by `attained`.
class FiniteRandomVariable {
 public:
  FiniteRandomVariable(SpacePtr domain, std::vector<std::string> codomain_labels,
                       std::vector<std::size_t> value_of);

  const SpacePtr& domain() const { return domain_; }
  /// The codomain as a FiniteSpace of value labels.
  const SpacePtr& codomain() const { return codomain_; }
  std::size_t value_of(std::size_t element) const { return value_of_.at(element); }
  const std::vector<std::size_t>& values() const { return value_of_; }

  bool attained(std::size_t value) const;
  /// X^{-1}({v}); empty for unattained values.
  SubsetMask preimage(std::size_t value) const;
  /// The generator family {X^{-1}({v}) : v in E}.
  GeneratorFamily level_set_generators() const;

 private:
  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<std::size_t> value_of_;
};

/// Atoms of sigma(X): the non-empty level sets, in canonical order.
AtomPartition sigma_of(const FiniteRandomVariable& x);

/// The law of X under p, as a Pmf on the codomain.
Pmf induced_distribution(const FiniteRandomVariable& x, const Pmf& p);

struct ScenarioExtension {
  AtomMasses masses;
  Pmf pmf;
  DofReport dof;
};

/// Sets P(A_x) = dist(x) on the level sets and splits each uniformly.
/// Throws UnsupportedDistribution ("distribution not supported on range of
/// X") when dist charges an unattained value, InvalidPmf for an invalid dist.
ScenarioExtension scenario_extension(const FiniteRandomVariable& x, const Pmf& dist);

}  // namespace sigatoms
