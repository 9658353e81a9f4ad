#include "sigatoms/instance.hpp"

#include <algorithm>

#include <json.hpp>

#include "sigatoms/error.hpp"

namespace sigatoms {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& require(const json& node, const char* key, const std::string& where) {
  if (!node.contains(key)) fail(where, std::string("missing required key '") + key + "'");
  return node.at(key);
}

std::string as_string(const json& node, const std::string& where) {
  if (!node.is_string()) fail(where, "expected a string");
  return node.get<std::string>();
}

std::uint64_t as_index(const json& node, const std::string& where) {
  if (!node.is_number_unsigned()) fail(where, "expected a non-negative integer");
  return node.get<std::uint64_t>();
}

Rational as_rational(const json& node, const std::string& where) {
  if (!node.is_string()) fail(where, "probabilities must be strings such as \"1/3\"");
  try {
    return Rational::parse(node.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

std::vector<std::string> as_labels(const json& node, const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(as_string(node[i], where + "/" + std::to_string(i)));
  }
  return out;
}

SubsetMask as_subset(const SpacePtr& space, const json& node, const std::string& where) {
  auto labels = as_labels(node, where);
  SubsetMask out(space);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto index = space->index_of(labels[i]);
    if (!index) fail(where + "/" + std::to_string(i), "unknown element '" + labels[i] + "'");
    out.insert(*index);
  }
  return out;
}

Pmf as_pmf(const SpacePtr& space, const json& node, const std::string& where) {
  if (!node.is_object()) fail(where, "expected an object mapping labels to masses");
  std::vector<Rational> masses(space->size());
  for (const auto& [key, value] : node.items()) {
    auto index = space->index_of(key);
    if (!index) fail(where + "/" + key, "unknown label '" + key + "'");
    masses[*index] = as_rational(value, where + "/" + key);
  }
  return Pmf(space, std::move(masses));
}

void parse_finite(Instance& inst, const json& doc, std::size_t space_limit) {
  try {
    inst.space = FiniteSpace::make(as_labels(doc.at("omega"), "/omega"), space_limit);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::GuardExceeded || e.kind() == ErrorKind::Parse) throw;
    fail("/omega", e.what());
  }
  const auto& space = inst.space;

  inst.generators.emplace(space);
  if (doc.contains("generators")) {
    const auto& gens = doc.at("generators");
    if (!gens.is_array()) fail("/generators", "expected an array of label lists");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      inst.generators->add(as_subset(space, gens[i], "/generators/" + std::to_string(i)));
    }
  }

  if (doc.contains("measure")) {
    const auto& entries = doc.at("measure");
    if (!entries.is_array()) fail("/measure", "expected an array of {set, mass} objects");
    MeasureAssignment m(space);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto where = "/measure/" + std::to_string(i);
      if (!entries[i].is_object()) fail(where, "expected an object with 'set' and 'mass'");
      m.assign(as_subset(space, require(entries[i], "set", where), where + "/set"),
               as_rational(require(entries[i], "mass", where), where + "/mass"));
    }
    inst.measure = std::move(m);
  }

  if (doc.contains("pmf")) inst.pmf = as_pmf(space, doc.at("pmf"), "/pmf");

  if (doc.contains("random_variable")) {
    const auto& rv = doc.at("random_variable");
    if (!rv.is_object()) fail("/random_variable", "expected an object mapping labels to values");
    std::vector<std::string> codomain;
    if (doc.contains("codomain")) codomain = as_labels(doc.at("codomain"), "/codomain");
    const bool declared = !codomain.empty();
    std::vector<std::size_t> value_of(space->size());
    for (std::size_t e = 0; e < space->size(); ++e) {
      const auto& label = space->label(e);
      if (!rv.contains(label)) fail("/random_variable", "no value for element '" + label + "'");
      auto value = as_string(rv.at(label), "/random_variable/" + label);
      auto it = std::find(codomain.begin(), codomain.end(), value);
      if (it == codomain.end()) {
        if (declared) fail("/random_variable/" + label, "value '" + value + "' not in codomain");
        codomain.push_back(value);
        it = codomain.end() - 1;
      }
      value_of[e] = static_cast<std::size_t>(it - codomain.begin());
    }
    for (const auto& [key, value] : rv.items()) {
      if (!space->index_of(key)) fail("/random_variable/" + key, "unknown element '" + key + "'");
    }
    try {
      inst.random_variable.emplace(space, std::move(codomain), std::move(value_of));
    } catch (const Error& e) {
      fail("/codomain", e.what());
    }
    if (doc.contains("distribution")) {
      inst.distribution =
          as_pmf(inst.random_variable->codomain(), doc.at("distribution"), "/distribution");
    }
  } else if (doc.contains("distribution")) {
    fail("/distribution", "a distribution needs a random_variable");
  }

  if (doc.contains("conditional_pmfs")) {
    const auto& cond = doc.at("conditional_pmfs");
    if (!cond.is_array()) fail("/conditional_pmfs", "expected an array of mass lists");
    std::vector<std::vector<Rational>> lists;
    for (std::size_t i = 0; i < cond.size(); ++i) {
      const auto where = "/conditional_pmfs/" + std::to_string(i);
      if (!cond[i].is_array()) fail(where, "expected an array of masses");
      std::vector<Rational> masses;
      for (std::size_t k = 0; k < cond[i].size(); ++k) {
        masses.push_back(as_rational(cond[i][k], where + "/" + std::to_string(k)));
      }
      lists.push_back(std::move(masses));
    }
    inst.conditional_pmfs = std::move(lists);
  }
}

void parse_countable(Instance& inst, const json& block) {
  if (!block.is_object()) fail("/countable", "expected an object");
  const auto& atoms = require(block, "atoms", "/countable");
  if (!atoms.is_array() || atoms.empty()) fail("/countable/atoms", "expected a non-empty array");
  std::vector<AtomSpec> specs;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const auto where = "/countable/atoms/" + std::to_string(a);
    const auto& atom = atoms[a];
    if (!atom.is_object()) fail(where, "expected an object");
    auto mass = as_rational(require(atom, "mass", where), where + "/mass");
    const bool has_members = atom.contains("members");
    const bool has_progression = atom.contains("progression");
    if (has_members == has_progression) {
      fail(where, "give exactly one of 'members' or 'progression'");
    }
    if (has_members) {
      const auto& members = atom.at("members");
      if (!members.is_array()) fail(where + "/members", "expected an array of indices");
      std::vector<ElementIndex> indices;
      for (std::size_t k = 0; k < members.size(); ++k) {
        indices.push_back(as_index(members[k], where + "/members/" + std::to_string(k)));
      }
      specs.push_back({std::move(indices), mass});
    } else {
      const auto& p = atom.at("progression");
      const auto pw = where + "/progression";
      if (!p.is_object()) fail(pw, "expected {residue, modulus, start}");
      Progression prog;
      if (p.contains("residue")) prog.residue = as_index(p.at("residue"), pw + "/residue");
      if (p.contains("modulus")) prog.modulus = as_index(p.at("modulus"), pw + "/modulus");
      if (p.contains("start")) prog.start = as_index(p.at("start"), pw + "/start");
      specs.push_back({prog, mass});
    }
  }
  CountablePresentation::Labeler labeler;
  if (block.contains("label_prefix")) {
    auto prefix = as_string(block.at("label_prefix"), "/countable/label_prefix");
    labeler = [prefix](ElementIndex i) { return prefix + std::to_string(i); };
  }
  try {
    inst.countable = CountablePresentation::from_specs(specs, labeler);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) fail("/countable/atoms", e.what());
    throw;
  }
}

}  // namespace

Instance parse_instance(const std::string& text, std::size_t space_limit) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "at byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) fail("", "instance must be a JSON object");

  Instance inst;
  const bool finite = doc.contains("omega");
  const bool countable = doc.contains("countable");
  if (finite == countable) fail("", "give exactly one of 'omega' or 'countable'");
  if (finite) {
    parse_finite(inst, doc, space_limit);
  } else {
    for (const char* key : {"generators", "measure", "pmf", "random_variable", "distribution",
                            "conditional_pmfs", "codomain"}) {
      if (doc.contains(key)) fail(std::string("/") + key, "not allowed with 'countable'");
    }
    parse_countable(inst, doc.at("countable"));
  }
  return inst;
}

}  // namespace sigatoms
