#include "sigatoms/measure.hpp"

#include "sigatoms/error.hpp"

namespace sigatoms {

const char* to_string(Violation v) {
  switch (v) {
    case Violation::NegativeMass: return "negative_mass";
    case Violation::MassAboveOne: return "mass_above_one";
    case Violation::TotalNotOne: return "total_not_one";
    case Violation::NotMeasurable: return "not_measurable";
    case Violation::Inconsistent: return "inconsistent";
    case Violation::Underdetermined: return "underdetermined";
    case Violation::NegativeAtomMass: return "negative_atom_mass";
  }
  return "unknown";
}

bool ValidationReport::has(Violation kind) const {
  for (const auto& issue : issues) {
    if (issue.kind == kind) return true;
  }
  return false;
}

void MeasureAssignment::assign(SubsetMask set, Rational mass) {
  require_same_space(space_, set.space(), "measure assignment");
  entries_.emplace_back(std::move(set), std::move(mass));
}

Pmf::Pmf(SpacePtr space, std::vector<Rational> masses)
    : space_(std::move(space)), masses_(std::move(masses)) {
  if (masses_.size() != space_->size()) {
    throw Error(ErrorKind::InvalidArgument, "p.m.f. has " + std::to_string(masses_.size()) +
                                                " masses for a space of " +
                                                std::to_string(space_->size()) + " elements");
  }
}

Pmf Pmf::point_mass(SpacePtr space, std::size_t index) {
  std::vector<Rational> masses(space->size());
  masses.at(index) = 1;
  return Pmf(std::move(space), std::move(masses));
}

Pmf Pmf::uniform(SpacePtr space) {
  Rational each(mpz_class(1), mpz_class(static_cast<unsigned long>(space->size())));
  std::vector<Rational> masses(space->size(), each);
  return Pmf(std::move(space), std::move(masses));
}

Rational Pmf::total() const {
  Rational sum;
  for (const auto& m : masses_) sum += m;
  return sum;
}

ValidationReport pmf_validate(const Pmf& p) {
  ValidationReport report;
  std::vector<std::size_t> negative;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].sign() < 0) negative.push_back(i);
  }
  if (!negative.empty()) {
    std::string msg = "condition (i) fails: negative mass at";
    for (auto i : negative) msg += " " + p.space()->label(i) + "=" + p[i].to_string();
    report.issues.push_back({Violation::NegativeMass, msg, negative, std::nullopt});
  }
  auto total = p.total();
  if (total != Rational(1)) {
    report.issues.push_back(
        {Violation::TotalNotOne, "condition (ii) fails: total is " + total.to_string(), {}, total});
  }
  return report;
}

void require_valid_pmf(const Pmf& p, const char* what) {
  auto report = pmf_validate(p);
  if (!report.valid()) {
    throw Error(ErrorKind::InvalidPmf, std::string(what) + ": " + report.issues.front().message);
  }
}

Rational pmf_to_measure(const Pmf& p, const SubsetMask& set) {
  require_same_space(p.space(), set.space(), "pmf_to_measure");
  Rational sum;
  for (auto i : set.members()) sum += p[i];
  return sum;
}

}  // namespace sigatoms
