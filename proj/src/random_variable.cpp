#include "sigatoms/random_variable.hpp"

#include "sigatoms/error.hpp"

namespace sigatoms {

FiniteRandomVariable::FiniteRandomVariable(SpacePtr domain, std::vector<std::string> codomain_labels,
                                           std::vector<std::size_t> value_of)
    : domain_(std::move(domain)),
      codomain_(FiniteSpace::make(std::move(codomain_labels))),
      value_of_(std::move(value_of)) {
  if (value_of_.size() != domain_->size()) {
    throw Error(ErrorKind::InvalidArgument, "random variable must assign a value to every element");
  }
  for (std::size_t e = 0; e < value_of_.size(); ++e) {
    if (value_of_[e] >= codomain_->size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "element '" + domain_->label(e) + "' maps outside the codomain");
    }
  }
}

bool FiniteRandomVariable::attained(std::size_t value) const {
  for (auto v : value_of_) {
    if (v == value) return true;
  }
  return false;
}

SubsetMask FiniteRandomVariable::preimage(std::size_t value) const {
  SubsetMask out(domain_);
  for (std::size_t e = 0; e < value_of_.size(); ++e) {
    if (value_of_[e] == value) out.insert(e);
  }
  return out;
}

GeneratorFamily FiniteRandomVariable::level_set_generators() const {
  GeneratorFamily g(domain_);
  for (std::size_t v = 0; v < codomain_->size(); ++v) g.add(preimage(v));
  return g;
}

AtomPartition sigma_of(const FiniteRandomVariable& x) {
  return AtomPartition::from_labels(x.domain(), x.values());
}

Pmf induced_distribution(const FiniteRandomVariable& x, const Pmf& p) {
  require_same_space(x.domain(), p.space(), "induced_distribution");
  require_valid_pmf(p, "induced_distribution");
  std::vector<Rational> law(x.codomain()->size());
  for (std::size_t e = 0; e < p.size(); ++e) law[x.value_of(e)] += p[e];
  return Pmf(x.codomain(), std::move(law));
}

ScenarioExtension scenario_extension(const FiniteRandomVariable& x, const Pmf& dist) {
  require_same_space(x.codomain(), dist.space(), "scenario_extension");
  require_valid_pmf(dist, "scenario_extension");
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v].sign() > 0 && !x.attained(v)) {
      throw Error(ErrorKind::UnsupportedDistribution,
                  "distribution not supported on range of X: value '" + x.codomain()->label(v) +
                      "' has mass " + dist[v].to_string() + " but is never attained");
    }
  }
  auto atoms = sigma_of(x);
  std::vector<Rational> masses;
  masses.reserve(atoms.size());
  for (const auto& block : atoms.atoms()) masses.push_back(dist[x.value_of(*block.first())]);
  auto atom_masses = AtomMasses::make(std::move(atoms), std::move(masses));
  auto pmf = canonical_extension(atom_masses);
  auto dof = degrees_of_freedom(atom_masses);
  return {std::move(atom_masses), std::move(pmf), dof};
}

}  // namespace sigatoms
