#include "sigatoms/field.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "sigatoms/error.hpp"
#include "sigatoms/linear_system.hpp"

namespace sigatoms {

namespace {

void lexicographic_unions(const AtomPartition& atoms, std::size_t next, SubsetMask& current,
                          std::vector<SubsetMask>& out) {
  out.push_back(current);
  for (std::size_t j = next; j < atoms.size(); ++j) {
    auto saved = current;
    current |= atoms.atom(j);
    lexicographic_unions(atoms, j + 1, current, out);
    current = std::move(saved);
  }
}

std::string atom_list(const AtomPartition& atoms, const std::vector<std::size_t>& which) {
  std::string out;
  for (std::size_t k = 0; k < which.size(); ++k) {
    if (k != 0) out += ", ";
    out += atoms.atom(which[k]).to_string();
  }
  return out;
}

struct MeasureSystem {
  std::vector<LinearEquation> equations;
  std::vector<std::size_t> not_measurable;  // entry indices
};

MeasureSystem build_system(const MeasureAssignment& m, const AtomPartition& atoms) {
  MeasureSystem sys;
  const auto& entries = m.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& [set, mass] = entries[k];
    auto parts = atom_decomposition(set, atoms);
    if (!parts) {
      sys.not_measurable.push_back(k);
      continue;
    }
    LinearEquation eq{std::vector<Rational>(atoms.size()), mass,
                      "P(" + set.to_string() + ") = " + mass.to_string()};
    for (auto i : *parts) eq.coefficients[i] = 1;
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

LinearEquation normalization(std::size_t atoms) {
  return {std::vector<Rational>(atoms, Rational(1)), Rational(1), "P(Omega) = 1"};
}

std::string witness_text(const RowReduction& rr, const std::vector<LinearEquation>& eqs) {
  return "equation '" + eqs[*rr.witness()].origin + "' reduces to 0 = " +
         rr.witness_residual().to_string() + " against the preceding equations";
}

}  // namespace

EnumeratedField enumerate_field(const AtomPartition& atoms, std::size_t guard_atoms) {
  if (atoms.size() > guard_atoms) {
    throw Error(ErrorKind::GuardExceeded,
                "field enumeration guard exceeded: " + std::to_string(atoms.size()) +
                    " atoms, bound is " + std::to_string(guard_atoms));
  }
  EnumeratedField field{atoms.space(), {}, atoms};
  field.sets.reserve(std::size_t{1} << atoms.size());
  SubsetMask current(atoms.space());
  lexicographic_unions(atoms, 0, current, field.sets);
  return field;
}

EnumeratedField closure_oracle(const GeneratorFamily& g, std::size_t guard) {
  const auto& space = g.space();
  std::unordered_set<SubsetMask, SubsetMaskHash> seen;
  std::vector<SubsetMask> members;
  std::deque<SubsetMask> pending;

  auto add = [&](SubsetMask s) {
    if (seen.insert(s).second) {
      if (seen.size() > guard) {
        throw Error(ErrorKind::GuardExceeded,
                    "closure guard exceeded: more than " + std::to_string(guard) + " sets");
      }
      pending.push_back(std::move(s));
    }
  };

  add(SubsetMask::empty(space));
  add(SubsetMask::full(space));
  for (const auto& gen : g.generators()) add(gen);

  while (!pending.empty()) {
    auto s = std::move(pending.front());
    pending.pop_front();
    add(s.complement());
    for (std::size_t k = 0; k < members.size(); ++k) add(s | members[k]);
    members.push_back(std::move(s));
  }
  std::sort(members.begin(), members.end());
  return {space, std::move(members), std::nullopt};
}

bool is_measurable(const SubsetMask& set, const AtomPartition& atoms) {
  return atom_decomposition(set, atoms).has_value();
}

std::optional<std::vector<std::size_t>> atom_decomposition(const SubsetMask& set,
                                                           const AtomPartition& atoms) {
  require_same_space(set.space(), atoms.space(), "measurability test");
  std::vector<std::size_t> parts;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& block = atoms.atom(i);
    if (block.is_subset_of(set)) {
      parts.push_back(i);
    } else if (block.intersects(set)) {
      return std::nullopt;
    }
  }
  return parts;
}

AtomMasses AtomMasses::make(AtomPartition partition, std::vector<Rational> masses) {
  if (masses.size() != partition.size()) {
    throw Error(ErrorKind::InvalidArgument, "got " + std::to_string(masses.size()) +
                                                " masses for " + std::to_string(partition.size()) +
                                                " atoms");
  }
  Rational total;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (masses[i].sign() < 0) {
      throw Error(ErrorKind::NegativeAtomMass, "negative atom mass " + masses[i].to_string() +
                                                   " on atom " + partition.atom(i).to_string());
    }
    total += masses[i];
  }
  if (total != Rational(1)) {
    throw Error(ErrorKind::InvalidPmf, "atom masses sum to " + total.to_string() + ", not 1");
  }
  return AtomMasses(std::move(partition), std::move(masses));
}

Rational AtomMasses::measure_of(const SubsetMask& set) const {
  auto parts = atom_decomposition(set, partition_);
  if (!parts) throw Error(ErrorKind::NotMeasurable, "set " + set.to_string() + " is not measurable");
  Rational sum;
  for (auto i : *parts) sum += masses_[i];
  return sum;
}

AtomMasses solve_atom_masses(const MeasureAssignment& m, const AtomPartition& atoms) {
  require_same_space(m.space(), atoms.space(), "solve_atom_masses");
  auto sys = build_system(m, atoms);
  if (!sys.not_measurable.empty()) {
    const auto& set = m.entries()[sys.not_measurable.front()].first;
    throw Error(ErrorKind::NotMeasurable, "assigned set " + set.to_string() + " is not measurable");
  }
  sys.equations.push_back(normalization(atoms.size()));
  RowReduction rr(sys.equations, atoms.size());
  if (!rr.consistent()) {
    throw Error(ErrorKind::Inconsistent,
                "measure assignment inconsistent: " + witness_text(rr, sys.equations));
  }
  auto loose = rr.undetermined();
  if (!loose.empty()) {
    throw Error(ErrorKind::Underdetermined,
                "measure underdetermined: unconstrained atoms " + atom_list(atoms, loose));
  }
  auto x = rr.solution();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].sign() < 0) {
      throw Error(ErrorKind::NegativeAtomMass,
                  "negative atom mass " + x[i].to_string() + " on atom " + atoms.atom(i).to_string());
    }
  }
  return AtomMasses::make(atoms, std::move(x));
}

ValidationReport verify_measure(const MeasureAssignment& m, const AtomPartition& atoms) {
  require_same_space(m.space(), atoms.space(), "verify_measure");
  ValidationReport report;
  const auto& entries = m.entries();
  bool total_reported = false;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& [set, mass] = entries[k];
    if (mass.sign() < 0) {
      report.issues.push_back({Violation::NegativeMass,
                               "P(" + set.to_string() + ") = " + mass.to_string() + " is negative",
                               {k}, mass});
    } else if (mass > Rational(1)) {
      report.issues.push_back({Violation::MassAboveOne,
                               "P(" + set.to_string() + ") = " + mass.to_string() + " exceeds 1",
                               {k}, mass});
    }
    if (set.is_full() && mass != Rational(1)) {
      report.issues.push_back(
          {Violation::TotalNotOne, "P(Omega) = " + mass.to_string() + ", expected 1", {k}, mass});
      total_reported = true;
    }
  }

  auto sys = build_system(m, atoms);
  for (auto k : sys.not_measurable) {
    report.issues.push_back({Violation::NotMeasurable,
                             "assigned set " + entries[k].first.to_string() + " is not measurable",
                             {k}, std::nullopt});
  }

  RowReduction bare(sys.equations, atoms.size());
  if (!bare.consistent()) {
    report.issues.push_back({Violation::Inconsistent,
                             "additivity fails: " + witness_text(bare, sys.equations),
                             {*bare.witness()}, bare.witness_residual()});
    return report;
  }
  auto total = bare.determined_value(std::vector<Rational>(atoms.size(), Rational(1)));
  if (total && *total != Rational(1)) {
    if (!total_reported) {
      report.issues.push_back(
          {Violation::TotalNotOne, "total mass is " + total->to_string() + ", expected 1", {}, *total});
    }
    return report;
  }

  sys.equations.push_back(normalization(atoms.size()));
  RowReduction full(sys.equations, atoms.size());
  auto loose = full.undetermined();
  if (!loose.empty()) {
    report.issues.push_back({Violation::Underdetermined,
                             "atom masses not determined for " + atom_list(atoms, loose), loose,
                             std::nullopt});
    return report;
  }
  auto x = full.solution();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].sign() < 0) {
      report.issues.push_back({Violation::NegativeAtomMass,
                               "atom " + atoms.atom(i).to_string() + " would get mass " +
                                   x[i].to_string(),
                               {i}, x[i]});
    }
  }
  return report;
}

}  // namespace sigatoms
