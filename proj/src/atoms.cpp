#include "sigatoms/atoms.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "sigatoms/error.hpp"
#include "sigatoms/field.hpp"

namespace sigatoms {

AtomPartition AtomPartition::from_blocks(SpacePtr space, std::vector<SubsetMask> blocks) {
  const auto n = space->size();
  std::vector<std::size_t> atom_of(n, n);
  std::sort(blocks.begin(), blocks.end(), [](const SubsetMask& a, const SubsetMask& b) {
    return a.first().value_or(SIZE_MAX) < b.first().value_or(SIZE_MAX);
  });
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    require_same_space(space, blocks[b].space(), "atom partition");
    if (blocks[b].is_empty()) throw Error(ErrorKind::InvalidArgument, "atom partition has an empty block");
    for (auto e : blocks[b].members()) {
      if (atom_of[e] != n) {
        throw Error(ErrorKind::InvalidArgument,
                    "atom partition blocks overlap at element '" + space->label(e) + "'");
      }
      atom_of[e] = b;
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (atom_of[e] == n) {
      throw Error(ErrorKind::InvalidArgument,
                  "atom partition does not cover element '" + space->label(e) + "'");
    }
  }
  return AtomPartition(std::move(space), std::move(blocks), std::move(atom_of));
}

AtomPartition AtomPartition::from_labels(SpacePtr space, const std::vector<std::size_t>& class_of) {
  if (class_of.size() != space->size()) {
    throw Error(ErrorKind::InvalidArgument, "class labels do not match the space size");
  }
  std::map<std::size_t, std::size_t> block_index;
  std::vector<SubsetMask> blocks;
  for (std::size_t e = 0; e < class_of.size(); ++e) {
    auto [it, inserted] = block_index.emplace(class_of[e], blocks.size());
    if (inserted) blocks.emplace_back(space);
    blocks[it->second].insert(e);
  }
  return from_blocks(std::move(space), std::move(blocks));
}

AtomPartition AtomPartition::singletons(SpacePtr space) {
  std::vector<std::size_t> ids(space->size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return from_labels(std::move(space), ids);
}

AtomPartition AtomPartition::trivial(SpacePtr space) {
  return from_labels(space, std::vector<std::size_t>(space->size(), 0));
}

bool AtomPartition::refines(const AtomPartition& coarser) const {
  require_same_space(space_, coarser.space_, "partition refinement check");
  for (const auto& block : atoms_) {
    const auto& host = coarser.atom(coarser.atom_of(*block.first()));
    if (!block.is_subset_of(host)) return false;
  }
  return true;
}

AtomPartition atoms_by_refinement(const GeneratorFamily& g) {
  const auto& space = g.space();
  std::vector<SubsetMask> blocks;
  if (space->size() > 0) blocks.push_back(SubsetMask::full(space));
  for (const auto& gen : g.generators()) {
    std::vector<SubsetMask> next;
    next.reserve(blocks.size() * 2);
    for (auto& block : blocks) {
      auto inside = block & gen;
      auto outside = block - gen;
      if (!inside.is_empty()) next.push_back(std::move(inside));
      if (!outside.is_empty()) next.push_back(std::move(outside));
    }
    blocks = std::move(next);
  }
  return AtomPartition::from_blocks(space, std::move(blocks));
}

SubsetMask separator(std::size_t omega, std::size_t eta, const GeneratorFamily& g) {
  const auto& space = g.space();
  if (omega >= space->size() || eta >= space->size()) {
    throw Error(ErrorKind::InvalidArgument, "separator: element index out of range");
  }
  if (omega != eta) {
    for (const auto& gen : g.generators()) {
      bool has_omega = gen.contains(omega);
      bool has_eta = gen.contains(eta);
      if (has_omega && !has_eta) return gen;
      if (!has_omega && has_eta) return gen.complement();
    }
  }
  return SubsetMask::full(space);
}

AtomPartition atoms_by_separators(const GeneratorFamily& g) {
  const auto& space = g.space();
  const auto n = space->size();
  std::vector<SubsetMask> blocks;
  SubsetMask placed(space);
  for (std::size_t omega = 0; omega < n; ++omega) {
    auto c_omega = SubsetMask::full(space);
    for (std::size_t eta = 0; eta < n; ++eta) c_omega &= separator(omega, eta, g);
    // C_omega sets are identical or disjoint, so one already placed is a repeat.
    if (c_omega.intersects(placed)) {
      if (std::find(blocks.begin(), blocks.end(), c_omega) == blocks.end()) {
        throw Error(ErrorKind::InvalidArgument,
                    "separator sets produced overlapping but distinct C_omega");
      }
      continue;
    }
    placed |= c_omega;
    blocks.push_back(std::move(c_omega));
  }
  return AtomPartition::from_blocks(space, std::move(blocks));
}

AtomPartition atoms_bruteforce_oracle(const GeneratorFamily& g, std::size_t guard) {
  EnumeratedField field;
  try {
    field = closure_oracle(g, guard);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::GuardExceeded) {
      throw Error(ErrorKind::GuardExceeded, "oracle guard exceeded");
    }
    throw;
  }
  const auto& space = g.space();
  std::vector<SubsetMask> blocks;
  for (std::size_t omega = 0; omega < space->size(); ++omega) {
    auto c_omega = SubsetMask::full(space);
    for (const auto& set : field.sets) {
      if (set.contains(omega)) c_omega &= set;
    }
    if (std::find(blocks.begin(), blocks.end(), c_omega) == blocks.end()) {
      blocks.push_back(std::move(c_omega));
    }
  }
  return AtomPartition::from_blocks(space, std::move(blocks));
}

}  // namespace sigatoms
