#include "sigatoms/extension.hpp"

#include "sigatoms/error.hpp"

namespace sigatoms {

Pmf canonical_extension(const AtomMasses& masses) {
  const auto& atoms = masses.partition();
  std::vector<Rational> p(atoms.space()->size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& block = atoms.atom(i);
    const auto share =
        masses.mass(i) / Rational(mpz_class(static_cast<unsigned long>(block.count())), mpz_class(1));
    for (auto e : block.members()) p[e] = share;
  }
  return Pmf(atoms.space(), std::move(p));
}

Pmf parametrized_extension(const ExtensionSpec& spec) {
  const auto& atoms = spec.masses.partition();
  if (spec.conditionals.size() != atoms.size()) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(atoms.size()) +
                                                " conditional p.m.f.s, got " +
                                                std::to_string(spec.conditionals.size()));
  }
  std::vector<Rational> p(atoms.space()->size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& q = spec.conditionals[i];
    require_same_space(q.space(), atoms.space(), "conditional p.m.f.");
    const auto& block = atoms.atom(i);
    for (std::size_t e = 0; e < q.size(); ++e) {
      if (!block.contains(e) && !q[e].is_zero()) {
        throw Error(ErrorKind::InvalidPmf, "conditional p.m.f. " + std::to_string(i) +
                                               " puts mass on '" + atoms.space()->label(e) +
                                               "' outside its atom " + block.to_string());
      }
    }
    require_valid_pmf(q, ("conditional p.m.f. " + std::to_string(i)).c_str());
    for (auto e : block.members()) p[e] = spec.masses.mass(i) * q[e];
  }
  return Pmf(atoms.space(), std::move(p));
}

AtomMasses restrict_pmf(const Pmf& p, const AtomPartition& atoms) {
  require_same_space(p.space(), atoms.space(), "restrict_pmf");
  require_valid_pmf(p, "restrict_pmf");
  std::vector<Rational> masses(atoms.size());
  for (std::size_t e = 0; e < p.size(); ++e) masses[atoms.atom_of(e)] += p[e];
  return AtomMasses::make(atoms, std::move(masses));
}

Decomposition decompose_extension(const Pmf& p, const AtomPartition& atoms) {
  auto masses = restrict_pmf(p, atoms);
  std::vector<std::optional<Pmf>> conditionals;
  conditionals.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (masses.mass(i).is_zero()) {
      conditionals.emplace_back(std::nullopt);
      continue;
    }
    std::vector<Rational> q(p.size());
    for (auto e : atoms.atom(i).members()) q[e] = p[e] / masses.mass(i);
    conditionals.emplace_back(Pmf(p.space(), std::move(q)));
  }
  return {std::move(masses), std::move(conditionals)};
}

std::string DofCount::to_string() const {
  return countably_infinite ? "countably infinite" : std::to_string(value);
}

DofReport degrees_of_freedom(const AtomMasses& masses) {
  DofReport report;
  const auto& atoms = masses.partition();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto free = atoms.atom(i).count() - 1;
    report.parametrization.value += free;
    if (masses.mass(i).sign() > 0) report.distinct_extensions.value += free;
  }
  return report;
}

RoundtripReport extension_roundtrip_check(const MeasureAssignment& m, const GeneratorFamily& g,
                                          std::size_t guard_atoms) {
  require_same_space(m.space(), g.space(), "extension_roundtrip_check");
  auto atoms = atoms_by_refinement(g);
  auto masses = solve_atom_masses(m, atoms);
  auto p = canonical_extension(masses);
  auto field = enumerate_field(atoms, guard_atoms);

  RoundtripReport report{atoms, masses, p, 0, true, std::nullopt, std::nullopt, std::nullopt};
  auto check = [&](const SubsetMask& set, const Rational& expected) {
    ++report.sets_checked;
    if (!report.agreed) return;
    auto actual = pmf_to_measure(p, set);
    if (actual != expected) {
      report.agreed = false;
      report.first_disagreement = set;
      report.expected = expected;
      report.actual = actual;
    }
  };
  for (const auto& set : field.sets) check(set, masses.measure_of(set));
  for (const auto& [set, mass] : m.entries()) check(set, mass);
  return report;
}

}  // namespace sigatoms
