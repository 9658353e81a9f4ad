#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sigatoms/atoms.hpp"
#include "sigatoms/measure.hpp"
#include "sigatoms/rational.hpp"
#include "sigatoms/space.hpp"

namespace sigatoms::testing {

inline Rational R(const char* text) { return Rational::parse(text); }

inline SpacePtr space_of(std::vector<std::string> labels) { return FiniteSpace::make(std::move(labels)); }

/// {"1", ..., "n"}
inline SpacePtr die_space(std::size_t n = 6) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return space_of(std::move(labels));
}

inline SubsetMask set_of(const SpacePtr& space, std::vector<std::string> labels) {
  return SubsetMask::of_labels(space, labels);
}

inline GeneratorFamily family(const SpacePtr& space, std::vector<std::vector<std::string>> sets) {
  GeneratorFamily g(space);
  for (auto& s : sets) g.add(set_of(space, std::move(s)));
  return g;
}

/// Blocks as sorted label lists, sorted; comparable regardless of block order.
inline std::vector<std::vector<std::string>> blocks_of(const AtomPartition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& atom : p.atoms()) {
    auto labels = atom.member_labels();
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<std::string>> sorted_blocks(std::vector<std::vector<std::string>> b) {
  for (auto& x : b) std::sort(x.begin(), x.end());
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace sigatoms::testing
