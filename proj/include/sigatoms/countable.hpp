#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sigatoms/extension.hpp"
#include "sigatoms/field.hpp"
#include "sigatoms/rational.hpp"

namespace sigatoms {

/// Elements are natural-number indices; the sample space is the union of
/// the presented atoms.
using ElementIndex = std::uint64_t;

struct FiniteAtom {
  std::vector<ElementIndex> members;  // ascending
};

/// A countably infinite atom given by its enumeration: `rank` is the
/// bijection onto {1, 2, ...} (nullopt for non-members) and `member_at`
/// its inverse.
struct InfiniteAtom {
  std::function<std::optional<std::uint64_t>(ElementIndex)> rank;
  std::function<ElementIndex(std::uint64_t)> member_at;
  std::string description;
};

struct PresentedAtom {
  std::variant<FiniteAtom, InfiniteAtom> shape;
  Rational mass;
};

/// {i >= start : i == residue (mod modulus)}, enumerated in increasing order.
struct Progression {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;
  std::uint64_t start = 0;
};

/// Restricted textual form: a finite member list or an arithmetic progression.
struct AtomSpec {
  std::variant<std::vector<ElementIndex>, Progression> shape;
  Rational mass;
};

/// A countable sample space partitioned into finitely many atoms, each
/// finite or countably infinite, with exact masses summing to one. Nothing
/// is ever enumerated eagerly; every query is index-bounded.
class CountablePresentation {
 public:
  using Indexer = std::function<std::optional<std::size_t>(ElementIndex)>;
  using Labeler = std::function<std::string(ElementIndex)>;

  /// Throws InvalidArgument on empty atoms, InvalidPmf on masses that are
  /// not a distribution, IndexerInconsistent when the indexer disagrees
  /// with a finite atom's member list or an infinite atom's first members.
  CountablePresentation(std::vector<PresentedAtom> atoms, Indexer indexer, Labeler labeler = {});

  /// Builds rank functions and the indexer, checking that atoms are pairwise
  /// disjoint (exact for progressions, by residue arithmetic).
  static CountablePresentation from_specs(const std::vector<AtomSpec>& specs, Labeler labeler = {});

  /// One infinite atom {1, 2, ...} of mass 1: the dyadic split is the
  /// geometric(1/2) distribution of the first-heads time.
  static CountablePresentation geometric();

  std::size_t atom_count() const { return atoms_.size(); }
  const PresentedAtom& atom(std::size_t i) const { return atoms_.at(i); }
  bool is_infinite(std::size_t i) const;
  std::optional<std::size_t> finite_size(std::size_t i) const;
  const Rational& mass(std::size_t i) const { return atoms_.at(i).mass; }

  std::string label(ElementIndex index) const;
  /// Atom of `index` per the indexer, nullopt when the index is not in the space.
  std::optional<std::size_t> atom_of(ElementIndex index) const { return indexer_(index); }
  /// The k-th member (k >= 1) of atom i in its enumeration order.
  ElementIndex member(std::size_t i, std::uint64_t k) const;
  /// phi_i(index); throws IndexerInconsistent if the atom does not hold it.
  std::uint64_t rank_in_atom(std::size_t i, ElementIndex index) const;

  std::string describe_atom(std::size_t i) const;

 private:
  std::vector<PresentedAtom> atoms_;
  Indexer indexer_;
  Labeler labeler_;
};

/// p(w) = P(B_i)/|B_i| on finite atoms, P(B_i) * 2^-phi_i(w) on infinite ones.
/// Throws InvalidArgument for an index outside the space and
/// IndexerInconsistent when indexer and atom descriptor disagree.
Rational lazy_pmf_eval(const CountablePresentation& pres, ElementIndex omega);

/// Sum of p over the first n members of the atom's enumeration.
Rational partial_sum(const CountablePresentation& pres, std::size_t atom, std::uint64_t n);

/// P(B_i) * 2^-n, the mass beyond the first n members of an infinite atom.
/// Throws FiniteAtomTail ("tail undefined for finite atom") on finite atoms.
Rational tail_bound(const CountablePresentation& pres, std::size_t atom, std::uint64_t n);

Rational measure_of_presented_set(const CountablePresentation& pres,
                                  const std::set<std::size_t>& atoms);

/// Same two-count convention as the finite engine; a countably infinite
/// atom makes the corresponding count infinite.
DofReport degrees_of_freedom(const CountablePresentation& pres);

struct MaterializedPresentation {
  SpacePtr space;                       // members ascending by index
  std::vector<ElementIndex> index_of;   // element -> presentation index
  AtomMasses masses;
};

/// Finite sample space and atom masses of an all-finite presentation.
/// Throws InvalidArgument if any atom is infinite.
MaterializedPresentation materialize(const CountablePresentation& pres);

}  // namespace sigatoms
