#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigatoms/rational.hpp"
#include "sigatoms/space.hpp"

namespace sigatoms {

enum class Violation {
  NegativeMass,      // a point mass or assigned set mass below zero
  MassAboveOne,      // an assigned set mass above one
  TotalNotOne,       // total mass differs from one
  NotMeasurable,     // assigned set is not a union of atoms
  Inconsistent,      // assigned masses contradict additivity
  Underdetermined,   // assignment does not fix every atom mass
  NegativeAtomMass,  // unique atom solution has a negative component
};

const char* to_string(Violation v);

struct Issue {
  Violation kind;
  std::string message;
  std::vector<std::size_t> elements;  // offending element or atom indices
  std::optional<Rational> value;      // offending total or mass
};

/// Diagnostics from a validation pass; empty means valid.
struct ValidationReport {
  std::vector<Issue> issues;

  bool valid() const { return issues.empty(); }
  bool has(Violation kind) const;
};

/// Masses assigned to arbitrary subsets. Entries are taken as given;
/// verify_measure reports anything that keeps them from being a
/// probability measure.
class MeasureAssignment {
 public:
  explicit MeasureAssignment(SpacePtr space) : space_(std::move(space)) {}

  const SpacePtr& space() const { return space_; }
  const std::vector<std::pair<SubsetMask, Rational>>& entries() const { return entries_; }
  void assign(SubsetMask set, Rational mass);

 private:
  SpacePtr space_;
  std::vector<std::pair<SubsetMask, Rational>> entries_;
};

/// Point masses on a finite space. Not validated on construction.
class Pmf {
 public:
  Pmf(SpacePtr space, std::vector<Rational> masses);

  static Pmf point_mass(SpacePtr space, std::size_t index);
  static Pmf uniform(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& masses() const { return masses_; }
  const Rational& operator[](std::size_t index) const { return masses_.at(index); }
  std::size_t size() const { return masses_.size(); }

  Rational total() const;

  bool operator==(const Pmf& other) const {
    return same_space(space_, other.space_) && masses_ == other.masses_;
  }

 private:
  SpacePtr space_;
  std::vector<Rational> masses_;
};

/// Checks p >= 0 pointwise and that the masses sum to exactly one.
ValidationReport pmf_validate(const Pmf& p);

/// Throws InvalidPmf with the report's first message unless p is valid.
void require_valid_pmf(const Pmf& p, const char* what);

/// Sum of p over the elements of `set`.
Rational pmf_to_measure(const Pmf& p, const SubsetMask& set);

}  // namespace sigatoms
