#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sigatoms/countable.hpp"
#include "sigatoms/measure.hpp"
#include "sigatoms/random_variable.hpp"
#include "sigatoms/space.hpp"

namespace sigatoms {

/// A parsed instance document. Exactly one of `space` (finite instances)
/// or `countable` is set.
struct Instance {
  SpacePtr space;
  std::optional<GeneratorFamily> generators;
  std::optional<MeasureAssignment> measure;
  std::optional<Pmf> pmf;
  std::optional<FiniteRandomVariable> random_variable;
  std::optional<Pmf> distribution;  // over the random variable's codomain
  std::optional<std::vector<std::vector<Rational>>> conditional_pmfs;
  std::optional<CountablePresentation> countable;
};

/// Parses a JSON instance. Every failure is an Error of kind Parse whose
/// message starts with the location (byte offset or JSON pointer).
Instance parse_instance(const std::string& text, std::size_t space_limit = kDefaultSpaceLimit);

}  // namespace sigatoms
