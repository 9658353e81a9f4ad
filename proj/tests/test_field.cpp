#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sigatoms/error.hpp"
#include "sigatoms/field.hpp"
#include "sigatoms/linear_system.hpp"
#include "support.hpp"

using namespace sigatoms;
using namespace sigatoms::testing;

namespace {

std::vector<std::string> as_strings(const EnumeratedField& f) {
  std::vector<std::string> out;
  for (const auto& s : f.sets) out.push_back(s.to_string());
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("enumerate_field lists unions in lexicographic atom order") {
  auto die = die_space();
  auto atoms = atoms_by_refinement(family(die, {{"2", "4", "6"}}));
  auto field = enumerate_field(atoms);
  // Atom 0 is {1,3,5} (least element 1).
  CHECK(as_strings(field) == std::vector<std::string>{"{}", "{1,3,5}", "{1,2,3,4,5,6}", "{2,4,6}"});
  REQUIRE(field.atom_basis.has_value());
  CHECK(*field.atom_basis == atoms);

  // Same family as the closure oracle.
  auto closure = closure_oracle(family(die, {{"2", "4", "6"}}));
  auto a = field.sets, b = closure.sets;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);

  auto trivial = enumerate_field(AtomPartition::trivial(die));
  CHECK(as_strings(trivial) == std::vector<std::string>{"{}", "{1,2,3,4,5,6}"});

  auto abc = space_of({"a", "b", "c"});
  auto power = enumerate_field(AtomPartition::singletons(abc));
  CHECK(as_strings(power) == std::vector<std::string>{"{}", "{a}", "{a,b}", "{a,b,c}", "{a,c}", "{b}",
                                                      "{b,c}", "{c}"});
}

TEST_CASE("enumerate_field guard names the bound") {
  auto s = FiniteSpace::make_indexed(21);
  try {
    enumerate_field(AtomPartition::singletons(s));
    FAIL("expected guard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GuardExceeded);
    CHECK(std::string(e.what()).find("20") != std::string::npos);
  }
  CHECK(enumerate_field(AtomPartition::singletons(FiniteSpace::make_indexed(3)), 3).sets.size() == 8);
  CHECK_THROWS_AS(enumerate_field(AtomPartition::singletons(FiniteSpace::make_indexed(3)), 2), Error);
}

TEST_CASE("closure_oracle examples") {
  auto abcd = space_of({"a", "b", "c", "d"});
  CHECK(closure_oracle(family(abcd, {{"a", "b"}})).sets.size() == 4);
  CHECK(closure_oracle(GeneratorFamily(abcd)).sets.size() == 2);

  auto three = die_space(3);
  auto f = closure_oracle(family(three, {{"1"}, {"2"}}));
  CHECK(f.sets.size() == 8);
  CHECK_FALSE(f.atom_basis.has_value());
  CHECK_THROWS_AS(closure_oracle(family(three, {{"1"}, {"2"}}), 7), Error);
}

TEST_CASE("is_measurable") {
  auto die = die_space();
  auto atoms = atoms_by_refinement(family(die, {{"2", "4", "6"}}));
  CHECK(is_measurable(set_of(die, {"1", "3", "5"}), atoms));
  CHECK_FALSE(is_measurable(set_of(die, {"1", "2"}), atoms));
  CHECK(is_measurable(SubsetMask::empty(die), atoms));
  CHECK(is_measurable(SubsetMask::full(die), atoms));
  CHECK_THROWS_AS(is_measurable(SubsetMask::full(die_space(5)), atoms), Error);
}

TEST_CASE("is_measurable agrees with the brute-force field on every subset") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto s = FiniteSpace::make_indexed(n);
    GeneratorFamily g(s);
    std::vector<oracle::Bits> gens;
    for (std::size_t k = rng() % 4; k > 0; --k) {
      SubsetMask m(s);
      for (std::size_t i = 0; i < n; ++i) {
        if (rng() & 1) m.insert(i);
      }
      gens.push_back(oracle::bits_of(n, m.members()));
      g.add(m);
    }
    auto field = oracle::generated_field(n, gens);
    auto atoms = atoms_by_refinement(g);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      SubsetMask a(s);
      oracle::Bits bits(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          a.insert(i);
          bits[i] = true;
        }
      }
      CHECK(is_measurable(a, atoms) == (field.count(bits) == 1));
    }
  }
}

TEST_CASE("row reduction: unique, inconsistent, underdetermined") {
  using V = std::vector<Rational>;
  {
    RowReduction rr({{V{1, 1, 0}, R("1/2"), "ab"}, {V{0, 1, 1}, R("3/4"), "bc"}, {V{1, 1, 1}, R("1"), "all"}},
                    3);
    REQUIRE(rr.unique());
    CHECK(rr.solution() == V{R("1/4"), R("1/4"), R("1/2")});
    CHECK(rr.determined_value(V{1, 0, 1}) == R("3/4"));
  }
  {
    RowReduction rr({{V{1, 0}, R("1/3"), "e"}, {V{0, 1}, R("1/3"), "o"}, {V{1, 1}, R("1"), "all"}}, 2);
    CHECK_FALSE(rr.consistent());
    CHECK(rr.witness() == 2u);
    CHECK(rr.witness_residual() == R("1/3"));
  }
  {
    RowReduction rr({{V{1, 1, 0}, R("1/2"), "ab"}, {V{1, 1, 1}, R("1"), "all"}}, 3);
    CHECK(rr.consistent());
    CHECK(rr.undetermined() == std::vector<std::size_t>{0, 1});
    CHECK(rr.determined_value(V{0, 0, 1}) == R("1/2"));
    CHECK_FALSE(rr.determined_value(V{1, 0, 0}).has_value());
  }
}

TEST_CASE("solve_atom_masses examples") {
  auto die = die_space();
  auto parity = atoms_by_refinement(family(die, {{"2", "4", "6"}}));
  MeasureAssignment m(die);
  m.assign(set_of(die, {"2", "4", "6"}), R("1/3"));
  auto masses = solve_atom_masses(m, parity);
  // Atom 0 is the odds, atom 1 the evens.
  CHECK(masses.mass(parity.atom_of(1)) == R("1/3"));
  CHECK(masses.mass(parity.atom_of(0)) == R("2/3"));
  CHECK(masses.measure_of(set_of(die, {"2", "4", "6"})) == R("1/3"));

  auto abc = space_of({"a", "b", "c"});
  auto singles = AtomPartition::singletons(abc);
  MeasureAssignment m2(abc);
  m2.assign(set_of(abc, {"a", "b"}), R("1/2"));
  m2.assign(set_of(abc, {"b", "c"}), R("3/4"));
  auto x = solve_atom_masses(m2, singles);
  CHECK(x.masses() == std::vector<Rational>{R("1/4"), R("1/4"), R("1/2")});
  // Substitution check.
  CHECK(x.mass(0) + x.mass(1) == R("1/2"));
  CHECK(x.mass(1) + x.mass(2) == R("3/4"));

  MeasureAssignment only_total(die);
  only_total.assign(SubsetMask::full(die), R("1"));
  try {
    solve_atom_masses(only_total, parity);
    FAIL("expected underdetermined");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Underdetermined);
    CHECK(std::string(e.what()).rfind("measure underdetermined", 0) == 0);
  }
}

TEST_CASE("solve_atom_masses error classes") {
  auto die = die_space();
  auto parity = atoms_by_refinement(family(die, {{"2", "4", "6"}}));
  auto evens = set_of(die, {"2", "4", "6"});
  auto odds = set_of(die, {"1", "3", "5"});

  MeasureAssignment bad_total(die);
  bad_total.assign(evens, R("1/3"));
  bad_total.assign(odds, R("1/3"));
  CHECK(kind_of([&] { solve_atom_masses(bad_total, parity); }) == ErrorKind::Inconsistent);
  try {
    solve_atom_masses(bad_total, parity);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("measure assignment inconsistent", 0) == 0);
    CHECK(std::string(e.what()).find("P(Omega) = 1") != std::string::npos);
  }

  MeasureAssignment not_measurable(die);
  not_measurable.assign(set_of(die, {"1", "2"}), R("1/3"));
  CHECK(kind_of([&] { solve_atom_masses(not_measurable, parity); }) == ErrorKind::NotMeasurable);

  MeasureAssignment negative(die);
  negative.assign(evens, R("3/2"));
  CHECK(kind_of([&] { solve_atom_masses(negative, parity); }) == ErrorKind::NegativeAtomMass);

  CHECK(kind_of([&] { solve_atom_masses(MeasureAssignment(die_space(5)), parity); }) ==
        ErrorKind::SpaceMismatch);
}

TEST_CASE("verify_measure reports") {
  auto die = die_space();
  auto parity = atoms_by_refinement(family(die, {{"2", "4", "6"}}));
  auto evens = set_of(die, {"2", "4", "6"});
  auto odds = set_of(die, {"1", "3", "5"});

  MeasureAssignment good(die);
  good.assign(evens, R("1/3"));
  CHECK(verify_measure(good, parity).valid());

  MeasureAssignment short_total(die);
  short_total.assign(evens, R("1/3"));
  short_total.assign(odds, R("1/3"));
  auto r = verify_measure(short_total, parity);
  REQUIRE(r.issues.size() == 1);
  CHECK(r.issues[0].kind == Violation::TotalNotOne);
  CHECK(r.issues[0].value == R("2/3"));

  MeasureAssignment nm(die);
  nm.assign(set_of(die, {"1", "2"}), R("1/2"));
  CHECK(verify_measure(nm, parity).has(Violation::NotMeasurable));

  MeasureAssignment neg(die);
  neg.assign(evens, R("-1/3"));
  auto rn = verify_measure(neg, parity);
  CHECK(rn.has(Violation::NegativeMass));
  CHECK(rn.has(Violation::NegativeAtomMass));

  MeasureAssignment omega_wrong(die);
  omega_wrong.assign(SubsetMask::full(die), R("3/4"));
  CHECK(verify_measure(omega_wrong, parity).has(Violation::TotalNotOne));

  auto singles = AtomPartition::singletons(die_space(3));
  auto three = singles.space();
  MeasureAssignment add3(three);
  add3.assign(SubsetMask::of_indices(three, {0}), R("1/4"));
  add3.assign(SubsetMask::of_indices(three, {1}), R("1/4"));
  add3.assign(SubsetMask::of_indices(three, {0, 1}), R("1/3"));
  CHECK(verify_measure(add3, singles).has(Violation::Inconsistent));

  MeasureAssignment under(three);
  under.assign(SubsetMask::of_indices(three, {0}), R("1/4"));
  CHECK(verify_measure(under, singles).has(Violation::Underdetermined));

  MeasureAssignment above(die);
  above.assign(evens, R("3/2"));
  auto ra = verify_measure(above, parity);
  CHECK(ra.has(Violation::MassAboveOne));
  CHECK(ra.has(Violation::NegativeAtomMass));
}

TEST_CASE("solved masses reproduce every assigned set") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    auto s = FiniteSpace::make_indexed(n);
    GeneratorFamily g(s);
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) {
      SubsetMask m(s);
      for (std::size_t i = 0; i < n; ++i) {
        if (rng() & 1) m.insert(i);
      }
      g.add(m);
    }
    auto atoms = atoms_by_refinement(g);
    std::vector<Rational> w(atoms.size());
    Rational total;
    for (auto& x : w) {
      x = static_cast<long>(1 + rng() % 9);
      total += x;
    }
    for (auto& x : w) x /= total;
    auto truth = AtomMasses::make(atoms, w);
    MeasureAssignment m(s);
    for (std::size_t i = 0; i < atoms.size(); ++i) m.assign(atoms.atom(i), w[i]);
    auto solved = solve_atom_masses(m, atoms);
    CHECK(solved == truth);
    for (const auto& [set, mass] : m.entries()) CHECK(solved.measure_of(set) == mass);
  }
}
