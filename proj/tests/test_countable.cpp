#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sigatoms/countable.hpp"
#include "sigatoms/error.hpp"
#include "support.hpp"

using namespace sigatoms;
using namespace sigatoms::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

// Direct summation of lazily evaluated point masses; independent of the
// closed form used by partial_sum.
Rational summed(const CountablePresentation& pres, std::size_t atom, std::uint64_t n) {
  Rational s;
  for (std::uint64_t k = 1; k <= n; ++k) s += lazy_pmf_eval(pres, pres.member(atom, k));
  return s;
}

// Evens (infinite, 1/3), {5, 7} (finite, 1/2), odds >= 9 (infinite, 1/6),
// on the space {0, 2, 4, ...} + {5, 7} + {9, 11, ...}.
CountablePresentation mixed() {
  return CountablePresentation::from_specs({
      {Progression{0, 2, 0}, R("1/3")},
      {std::vector<ElementIndex>{7, 5}, R("1/2")},
      {Progression{1, 2, 9}, R("1/6")},
  });
}

}  // namespace

TEST_CASE("geometric presentation reproduces 2^-n") {
  auto g = CountablePresentation::geometric();
  for (std::uint64_t n = 1; n <= 64; ++n) CHECK(lazy_pmf_eval(g, n) == Rational::pow2_inverse(n));
  CHECK(summed(g, 0, 3) == R("7/8"));
  CHECK(partial_sum(g, 0, 3) == R("7/8"));
  CHECK(tail_bound(g, 0, 3) == R("1/8"));
  CHECK(partial_sum(g, 0, 0) == R("0"));
  CHECK(kind_of([&] { lazy_pmf_eval(g, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("finite and infinite atoms in one presentation") {
  auto p = mixed();
  CHECK(p.atom_count() == 3);
  CHECK(lazy_pmf_eval(p, 5) == R("1/4"));
  CHECK(lazy_pmf_eval(p, 7) == R("1/4"));
  // Evens enumerate as 0, 2, 4, ... so phi(2) = 2.
  CHECK(p.rank_in_atom(0, 2) == 2);
  CHECK(lazy_pmf_eval(p, 2) == R("1/12"));
  CHECK(lazy_pmf_eval(p, 9) == R("1/12"));
  CHECK(lazy_pmf_eval(p, 11) == R("1/24"));
  CHECK(kind_of([&] { lazy_pmf_eval(p, 3); }) == ErrorKind::InvalidArgument);

  CHECK(summed(p, 0, 2) == R("1/4"));
  CHECK(partial_sum(p, 0, 2) == R("1/4"));
  CHECK(tail_bound(p, 0, 0) == R("1/3"));
  CHECK(partial_sum(p, 1, 1) == R("1/4"));
  CHECK(partial_sum(p, 1, 5) == R("1/2"));
  try {
    tail_bound(p, 1, 1);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FiniteAtomTail);
    CHECK(std::string(e.what()) == "tail undefined for finite atom");
  }

  CHECK(measure_of_presented_set(p, {0, 1, 2}) == R("1"));
  CHECK(measure_of_presented_set(p, {}) == R("0"));
  CHECK(measure_of_presented_set(p, {0}) == R("1/3"));
  CHECK_THROWS_AS(measure_of_presented_set(p, {3}), Error);

  auto dof = degrees_of_freedom(p);
  CHECK(dof.parametrization.countably_infinite);
  CHECK(dof.distinct_extensions.countably_infinite);
}

TEST_CASE("tail identity on every infinite atom up to 64 terms") {
  auto p = mixed();
  for (std::size_t a : {0u, 2u}) {
    for (std::uint64_t n = 0; n <= 64; ++n) {
      CHECK(partial_sum(p, a, n) + tail_bound(p, a, n) == p.mass(a));
      if (n <= 20) CHECK(summed(p, a, n) == partial_sum(p, a, n));
    }
  }
  CHECK(tail_bound(CountablePresentation::from_specs({{Progression{0, 2, 0}, R("1/2")},
                                                      {Progression{1, 2, 0}, R("1/2")}}),
                   0, 10) == R("1/2048"));
}

TEST_CASE("presentation validation") {
  // Overlapping progressions: 0 mod 2 and 0 mod 3 meet at 6, 12, ...
  CHECK_THROWS_AS(CountablePresentation::from_specs({{Progression{0, 2, 0}, R("1/2")},
                                                     {Progression{0, 3, 0}, R("1/2")}}),
                  Error);
  // Disjoint residues modulo a common divisor never meet.
  CHECK_NOTHROW(CountablePresentation::from_specs({{Progression{0, 4, 0}, R("1/2")},
                                                   {Progression{1, 2, 0}, R("1/2")}}));
  // Finite member inside a progression.
  CHECK_THROWS_AS(CountablePresentation::from_specs({{Progression{0, 2, 0}, R("1/2")},
                                                     {std::vector<ElementIndex>{4}, R("1/2")}}),
                  Error);
  // Below the start is fine.
  CHECK_NOTHROW(CountablePresentation::from_specs({{Progression{0, 2, 10}, R("1/2")},
                                                   {std::vector<ElementIndex>{4}, R("1/2")}}));
  CHECK(kind_of([] {
          CountablePresentation::from_specs({{Progression{0, 1, 1}, R("1/2")}});
        }) == ErrorKind::InvalidPmf);
  CHECK_THROWS_AS(CountablePresentation::from_specs({{Progression{2, 2, 0}, R("1")}}), Error);
  CHECK_THROWS_AS(CountablePresentation::from_specs({{std::vector<ElementIndex>{1, 1}, R("1")}}), Error);
}

TEST_CASE("inconsistent indexer is detected") {
  FiniteAtom fin{{1, 2}};
  auto bad_indexer = [](ElementIndex) -> std::optional<std::size_t> { return 1; };
  CHECK(kind_of([&] {
          CountablePresentation({{fin, R("1/2")}, {FiniteAtom{{3}}, R("1/2")}}, bad_indexer);
        }) == ErrorKind::IndexerInconsistent);

  // Accepted on construction, caught on the first disagreeing query.
  auto lying = [](ElementIndex i) -> std::optional<std::size_t> {
    if (i == 1 || i == 2) return 0;
    if (i == 3 || i == 99) return 1;
    return std::nullopt;
  };
  CountablePresentation pres({{fin, R("1/2")}, {FiniteAtom{{3}}, R("1/2")}}, lying);
  CHECK(lazy_pmf_eval(pres, 3) == R("1/2"));
  CHECK(kind_of([&] { lazy_pmf_eval(pres, 99); }) == ErrorKind::IndexerInconsistent);
}

TEST_CASE("all-finite presentation matches the finite engine") {
  auto pres = CountablePresentation::from_specs({
      {std::vector<ElementIndex>{10, 3, 7}, R("1/3")},
      {std::vector<ElementIndex>{1}, R("1/6")},
      {std::vector<ElementIndex>{4, 8}, R("1/2")},
  });
  auto mat = materialize(pres);
  CHECK(mat.space->labels() == std::vector<std::string>{"1", "3", "4", "7", "8", "10"});
  auto p = canonical_extension(mat.masses);
  for (std::size_t e = 0; e < p.size(); ++e) CHECK(p[e] == lazy_pmf_eval(pres, mat.index_of[e]));
  CHECK(degrees_of_freedom(pres).parametrization == degrees_of_freedom(mat.masses).parametrization);
  CHECK(degrees_of_freedom(pres).parametrization.value == 3);
  CHECK_THROWS_AS(materialize(CountablePresentation::geometric()), Error);
}

TEST_CASE("custom labels") {
  auto pres = CountablePresentation::from_specs({{Progression{0, 1, 1}, R("1")}},
                                                [](ElementIndex i) { return "n" + std::to_string(i); });
  CHECK(pres.label(3) == "n3");
  CHECK(pres.describe_atom(0) == "{i >= 1}");
}
