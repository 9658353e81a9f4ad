#include "sigatoms/countable.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sigatoms/error.hpp"

namespace sigatoms {

namespace {

// Members of a progression that are checked against the indexer on construction.
constexpr std::uint64_t kProbeMembers = 8;

std::uint64_t first_member(const Progression& p) {
  const auto offset = (p.residue + p.modulus - p.start % p.modulus) % p.modulus;
  std::uint64_t first = 0;
  if (__builtin_add_overflow(p.start, offset, &first)) {
    throw Error(ErrorKind::InvalidArgument, "progression start overflows the index range");
  }
  return first;
}

bool in_progression(const Progression& p, ElementIndex i) {
  return i >= p.start && i % p.modulus == p.residue;
}

std::string describe(const Progression& p) {
  std::string out = "{i >= " + std::to_string(p.start);
  if (p.modulus != 1) {
    out += " : i = " + std::to_string(p.residue) + " mod " + std::to_string(p.modulus);
  }
  return out + "}";
}

InfiniteAtom progression_atom(const Progression& p) {
  const auto first = first_member(p);
  InfiniteAtom atom;
  atom.rank = [p, first](ElementIndex i) -> std::optional<std::uint64_t> {
    if (i < first || !in_progression(p, i)) return std::nullopt;
    return (i - first) / p.modulus + 1;
  };
  atom.member_at = [p, first](std::uint64_t k) -> ElementIndex {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "member ranks start at 1");
    std::uint64_t step = 0;
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(k - 1, p.modulus, &step) || __builtin_add_overflow(first, step, &out)) {
      throw Error(ErrorKind::InvalidArgument, "member rank overflows the index range");
    }
    return out;
  };
  atom.description = describe(p);
  return atom;
}

}  // namespace

CountablePresentation::CountablePresentation(std::vector<PresentedAtom> atoms, Indexer indexer,
                                             Labeler labeler)
    : atoms_(std::move(atoms)), indexer_(std::move(indexer)), labeler_(std::move(labeler)) {
  if (atoms_.empty()) throw Error(ErrorKind::InvalidArgument, "presentation has no atoms");
  if (!indexer_) throw Error(ErrorKind::InvalidArgument, "presentation has no atom indexer");
  if (!labeler_) labeler_ = [](ElementIndex i) { return std::to_string(i); };

  Rational total;
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    const auto& atom = atoms_[a];
    if (atom.mass.sign() < 0) {
      throw Error(ErrorKind::InvalidPmf, "atom " + std::to_string(a) + " has negative mass");
    }
    total += atom.mass;
    if (const auto* fin = std::get_if<FiniteAtom>(&atom.shape)) {
      if (fin->members.empty()) {
        throw Error(ErrorKind::InvalidArgument, "atom " + std::to_string(a) + " is empty");
      }
      for (auto i : fin->members) {
        if (indexer_(i) != a) {
          throw Error(ErrorKind::IndexerInconsistent,
                      "indexer does not map member " + std::to_string(i) + " to atom " +
                          std::to_string(a));
        }
      }
    } else {
      const auto& inf = std::get<InfiniteAtom>(atom.shape);
      if (!inf.rank || !inf.member_at) {
        throw Error(ErrorKind::InvalidArgument,
                    "infinite atom " + std::to_string(a) + " lacks its enumeration");
      }
      for (std::uint64_t k = 1; k <= kProbeMembers; ++k) {
        auto i = inf.member_at(k);
        if (indexer_(i) != a || inf.rank(i) != k) {
          throw Error(ErrorKind::IndexerInconsistent,
                      "enumeration of atom " + std::to_string(a) + " disagrees at rank " +
                          std::to_string(k));
        }
      }
    }
  }
  if (total != Rational(1)) {
    throw Error(ErrorKind::InvalidPmf, "atom masses sum to " + total.to_string() + ", not 1");
  }
}

CountablePresentation CountablePresentation::from_specs(const std::vector<AtomSpec>& specs,
                                                        Labeler labeler) {
  std::unordered_map<ElementIndex, std::size_t> finite_owner;
  std::vector<std::pair<Progression, std::size_t>> progressions;
  std::vector<PresentedAtom> atoms;

  for (std::size_t a = 0; a < specs.size(); ++a) {
    if (const auto* members = std::get_if<std::vector<ElementIndex>>(&specs[a].shape)) {
      FiniteAtom fin{*members};
      std::sort(fin.members.begin(), fin.members.end());
      for (auto i : fin.members) {
        if (!finite_owner.emplace(i, a).second) {
          throw Error(ErrorKind::InvalidArgument,
                      "element " + std::to_string(i) + " listed in more than one atom");
        }
      }
      atoms.push_back({std::move(fin), specs[a].mass});
    } else {
      const auto& p = std::get<Progression>(specs[a].shape);
      if (p.modulus == 0 || p.residue >= p.modulus) {
        throw Error(ErrorKind::InvalidArgument,
                    "progression of atom " + std::to_string(a) + " needs residue < modulus");
      }
      for (const auto& [other, b] : progressions) {
        // Two residue classes meet (infinitely often) iff they agree mod gcd.
        const auto g = std::gcd(p.modulus, other.modulus);
        if (p.residue % g == other.residue % g) {
          throw Error(ErrorKind::InvalidArgument, "atoms " + std::to_string(b) + " and " +
                                                      std::to_string(a) + " overlap");
        }
      }
      progressions.emplace_back(p, a);
      atoms.push_back({progression_atom(p), specs[a].mass});
    }
  }
  for (const auto& [i, a] : finite_owner) {
    for (const auto& [p, b] : progressions) {
      if (in_progression(p, i)) {
        throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(i) + " lies in atoms " +
                                                    std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }

  auto indexer = [finite_owner, progressions](ElementIndex i) -> std::optional<std::size_t> {
    if (auto it = finite_owner.find(i); it != finite_owner.end()) return it->second;
    for (const auto& [p, b] : progressions) {
      if (in_progression(p, i)) return b;
    }
    return std::nullopt;
  };
  return CountablePresentation(std::move(atoms), std::move(indexer), std::move(labeler));
}

CountablePresentation CountablePresentation::geometric() {
  return from_specs({AtomSpec{Progression{0, 1, 1}, Rational(1)}});
}

bool CountablePresentation::is_infinite(std::size_t i) const {
  return std::holds_alternative<InfiniteAtom>(atoms_.at(i).shape);
}

std::optional<std::size_t> CountablePresentation::finite_size(std::size_t i) const {
  if (const auto* fin = std::get_if<FiniteAtom>(&atoms_.at(i).shape)) return fin->members.size();
  return std::nullopt;
}

std::string CountablePresentation::label(ElementIndex index) const { return labeler_(index); }

ElementIndex CountablePresentation::member(std::size_t i, std::uint64_t k) const {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "member ranks start at 1");
  const auto& shape = atoms_.at(i).shape;
  if (const auto* fin = std::get_if<FiniteAtom>(&shape)) {
    if (k > fin->members.size()) {
      throw Error(ErrorKind::InvalidArgument, "atom " + std::to_string(i) + " has only " +
                                                  std::to_string(fin->members.size()) + " members");
    }
    return fin->members[k - 1];
  }
  return std::get<InfiniteAtom>(shape).member_at(k);
}

std::uint64_t CountablePresentation::rank_in_atom(std::size_t i, ElementIndex index) const {
  const auto& shape = atoms_.at(i).shape;
  std::optional<std::uint64_t> rank;
  if (const auto* fin = std::get_if<FiniteAtom>(&shape)) {
    auto it = std::lower_bound(fin->members.begin(), fin->members.end(), index);
    if (it != fin->members.end() && *it == index) rank = (it - fin->members.begin()) + 1;
  } else {
    rank = std::get<InfiniteAtom>(shape).rank(index);
  }
  if (!rank || *rank == 0) {
    throw Error(ErrorKind::IndexerInconsistent, "indexer places " + std::to_string(index) +
                                                    " in atom " + std::to_string(i) +
                                                    " but the atom does not contain it");
  }
  return *rank;
}

std::string CountablePresentation::describe_atom(std::size_t i) const {
  const auto& shape = atoms_.at(i).shape;
  if (const auto* fin = std::get_if<FiniteAtom>(&shape)) {
    std::string out = "{";
    for (std::size_t k = 0; k < fin->members.size(); ++k) {
      if (k != 0) out += ",";
      out += label(fin->members[k]);
    }
    return out + "}";
  }
  return std::get<InfiniteAtom>(shape).description;
}

Rational lazy_pmf_eval(const CountablePresentation& pres, ElementIndex omega) {
  auto atom = pres.atom_of(omega);
  if (!atom) {
    throw Error(ErrorKind::InvalidArgument,
                "index " + std::to_string(omega) + " is not in the sample space");
  }
  if (*atom >= pres.atom_count()) {
    throw Error(ErrorKind::IndexerInconsistent, "indexer returned unknown atom " + std::to_string(*atom));
  }
  const auto rank = pres.rank_in_atom(*atom, omega);
  const auto& mass = pres.mass(*atom);
  if (auto size = pres.finite_size(*atom)) {
    return mass / Rational(mpz_class(static_cast<unsigned long>(*size)), mpz_class(1));
  }
  return mass * Rational::pow2_inverse(rank);
}

Rational partial_sum(const CountablePresentation& pres, std::size_t atom, std::uint64_t n) {
  const auto& mass = pres.mass(atom);
  if (auto size = pres.finite_size(atom)) {
    const auto taken = std::min<std::uint64_t>(n, *size);
    return mass * Rational(mpz_class(static_cast<unsigned long>(taken)),
                           mpz_class(static_cast<unsigned long>(*size)));
  }
  return mass * (Rational(1) - Rational::pow2_inverse(n));
}

Rational tail_bound(const CountablePresentation& pres, std::size_t atom, std::uint64_t n) {
  if (!pres.is_infinite(atom)) {
    throw Error(ErrorKind::FiniteAtomTail, "tail undefined for finite atom");
  }
  return pres.mass(atom) * Rational::pow2_inverse(n);
}

Rational measure_of_presented_set(const CountablePresentation& pres,
                                  const std::set<std::size_t>& atoms) {
  Rational sum;
  for (auto a : atoms) {
    if (a >= pres.atom_count()) {
      throw Error(ErrorKind::InvalidArgument, "no atom with index " + std::to_string(a));
    }
    sum += pres.mass(a);
  }
  return sum;
}

DofReport degrees_of_freedom(const CountablePresentation& pres) {
  DofReport report;
  for (std::size_t a = 0; a < pres.atom_count(); ++a) {
    const bool positive = pres.mass(a).sign() > 0;
    if (auto size = pres.finite_size(a)) {
      report.parametrization.value += *size - 1;
      if (positive) report.distinct_extensions.value += *size - 1;
    } else {
      report.parametrization.countably_infinite = true;
      if (positive) report.distinct_extensions.countably_infinite = true;
    }
  }
  if (report.parametrization.countably_infinite) report.parametrization.value = 0;
  if (report.distinct_extensions.countably_infinite) report.distinct_extensions.value = 0;
  return report;
}

MaterializedPresentation materialize(const CountablePresentation& pres) {
  std::vector<std::pair<ElementIndex, std::size_t>> elements;
  for (std::size_t a = 0; a < pres.atom_count(); ++a) {
    const auto* fin = std::get_if<FiniteAtom>(&pres.atom(a).shape);
    if (!fin) {
      throw Error(ErrorKind::InvalidArgument,
                  "atom " + std::to_string(a) + " is infinite and cannot be materialized");
    }
    for (auto i : fin->members) elements.emplace_back(i, a);
  }
  std::sort(elements.begin(), elements.end());

  std::vector<std::string> labels;
  std::vector<ElementIndex> index_of;
  std::vector<std::size_t> class_of;
  for (const auto& [i, a] : elements) {
    labels.push_back(pres.label(i));
    index_of.push_back(i);
    class_of.push_back(a);
  }
  auto space = FiniteSpace::make(std::move(labels));
  auto partition = AtomPartition::from_labels(space, class_of);
  std::vector<Rational> masses;
  for (const auto& block : partition.atoms()) masses.push_back(pres.mass(class_of[*block.first()]));
  return {space, std::move(index_of), AtomMasses::make(std::move(partition), std::move(masses))};
}

}  // namespace sigatoms
