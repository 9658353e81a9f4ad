#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sigatoms/atoms.hpp"
#include "sigatoms/field.hpp"
#include "sigatoms/measure.hpp"

namespace sigatoms {

/// Atom masses plus one conditional p.m.f. q_i per atom, each a Pmf on the
/// whole space that vanishes off its atom.
struct ExtensionSpec {
  AtomMasses masses;
  std::vector<Pmf> conditionals;
};

/// Uniform split: p(w) = P(B_i) / |B_i| for w in B_i.
Pmf canonical_extension(const AtomMasses& masses);

/// p(w) = P(B_i) * q_i(w) for w in B_i. Throws InvalidPmf when a q_i puts
/// mass off its atom, is negative, or does not sum to one.
Pmf parametrized_extension(const ExtensionSpec& spec);

/// Atom masses of a p.m.f.: the restriction of the induced measure to the
/// field generated by `atoms`.
AtomMasses restrict_pmf(const Pmf& p, const AtomPartition& atoms);

/// Inverse of parametrized_extension. Atoms of zero mass have no
/// recoverable conditional and come back as nullopt.
struct Decomposition {
  AtomMasses masses;
  std::vector<std::optional<Pmf>> conditionals;
};
Decomposition decompose_extension(const Pmf& p, const AtomPartition& atoms);

struct DofCount {
  bool countably_infinite = false;
  std::size_t value = 0;

  std::string to_string() const;
  bool operator==(const DofCount&) const = default;
};

/// `parametrization` counts every atom's simplex dimension |B_i| - 1, since
/// the family (q_i) varies even where P(B_i) = 0. `distinct_extensions`
/// only counts atoms of positive mass, i.e. the dimension of the set of
/// distinct extension p.m.f.s.
struct DofReport {
  DofCount parametrization;
  DofCount distinct_extensions;
};

DofReport degrees_of_freedom(const AtomMasses& masses);

struct RoundtripReport {
  AtomPartition atoms;
  AtomMasses masses;
  Pmf extension;
  std::size_t sets_checked = 0;
  bool agreed = true;
  std::optional<SubsetMask> first_disagreement;
  std::optional<Rational> expected;  // P(A) at the disagreement
  std::optional<Rational> actual;    // sum of p over A at the disagreement
};

/// Atoms -> solved masses -> canonical extension, then re-evaluates every
/// set of the enumerated field and every assigned set under the extension.
/// Propagates solver and guard errors.
RoundtripReport extension_roundtrip_check(const MeasureAssignment& m, const GeneratorFamily& g,
                                          std::size_t guard_atoms = kDefaultAtomGuard);

}  // namespace sigatoms
