#include "sigatoms/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigatoms/extension.hpp"
#include "sigatoms/field.hpp"
#include "sigatoms/instance.hpp"
#include "sigatoms/random_variable.hpp"

namespace sigatoms::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string path;
  std::string format = "table";
  std::size_t guard_atoms = kDefaultAtomGuard;
  std::size_t space_limit = kDefaultSpaceLimit;
  std::uint64_t terms = 16;
  std::uint64_t seed = 0;  // reserved
};

struct Output {
  Json doc;
  std::vector<std::vector<std::string>> rows;  // table body, first row is the header
  std::vector<std::string> notes;              // lines printed after the table
  int status = kOk;
};

class Table {
 public:
  explicit Table(Output& out) : out_(out) {}
  Table& row(std::vector<std::string> cells) {
    out_.rows.push_back(std::move(cells));
    return *this;
  }

 private:
  Output& out_;
};

[[noreturn]] void usage(const std::string& message) {
  throw Error(ErrorKind::InvalidArgument, message);
}

Json labels_of(const SubsetMask& set) { return Json(set.member_labels()); }

Json pmf_json(const Pmf& p) {
  Json arr = Json::array();
  for (std::size_t e = 0; e < p.size(); ++e) {
    arr.push_back({{"element", p.space()->label(e)}, {"mass", p[e].to_string()}});
  }
  return arr;
}

void pmf_rows(Output& out, const Pmf& p, const char* key = "element") {
  Table t(out);
  t.row({key, "mass"});
  for (std::size_t e = 0; e < p.size(); ++e) t.row({p.space()->label(e), p[e].to_string()});
}

Json masses_json(const AtomMasses& m) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    arr.push_back({{"atom", i}, {"set", labels_of(m.partition().atom(i))}, {"mass", m.mass(i).to_string()}});
  }
  return arr;
}

void masses_rows(Output& out, const AtomMasses& m) {
  Table t(out);
  t.row({"atom", "set", "mass"});
  for (std::size_t i = 0; i < m.size(); ++i) {
    t.row({"B" + std::to_string(i), m.partition().atom(i).to_string(), m.mass(i).to_string()});
  }
}

Json dof_value(const DofCount& d) {
  if (d.countably_infinite) return Json("countably infinite");
  return Json(d.value);
}

Json dof_json(const DofReport& r) {
  return {{"parametrization", dof_value(r.parametrization)},
          {"distinct_extensions", dof_value(r.distinct_extensions)}};
}

void dof_rows(Output& out, const DofReport& r) {
  Table t(out);
  t.row({"count", "value"});
  t.row({"parametrization", r.parametrization.to_string()});
  t.row({"distinct_extensions", r.distinct_extensions.to_string()});
}

Json issues_json(const ValidationReport& report) {
  Json arr = Json::array();
  for (const auto& issue : report.issues) {
    arr.push_back({{"kind", to_string(issue.kind)}, {"message", issue.message}});
  }
  return arr;
}

AtomPartition finite_atoms(const Instance& inst) { return atoms_by_refinement(*inst.generators); }

const MeasureAssignment& require_measure(const Instance& inst) {
  if (!inst.measure) usage("instance has no 'measure'");
  return *inst.measure;
}

/// Lexicographic subsets of {0..k-1}, as in enumerate_field.
void atom_subsets(std::size_t k, std::size_t next, std::vector<std::size_t>& current,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  visit(current);
  for (std::size_t j = next; j < k; ++j) {
    current.push_back(j);
    atom_subsets(k, j + 1, current, visit);
    current.pop_back();
  }
}

// ---- finite instances -----------------------------------------------------

Output atoms_finite(const Instance& inst) {
  auto atoms = finite_atoms(inst);
  Output out;
  Json arr = Json::array();
  Table t(out);
  t.row({"atom", "set"});
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    arr.push_back(labels_of(atoms.atom(i)));
    t.row({"B" + std::to_string(i), atoms.atom(i).to_string()});
  }
  out.doc = {{"command", "atoms"}, {"atom_count", atoms.size()}, {"atoms", arr}};
  return out;
}

Output enum_field_finite(const Instance& inst, const Options& opt) {
  auto atoms = finite_atoms(inst);
  auto field = enumerate_field(atoms, opt.guard_atoms);
  Output out;
  Json arr = Json::array();
  Table t(out);
  t.row({"atoms", "set"});
  for (const auto& set : field.sets) {
    auto parts = *atom_decomposition(set, atoms);
    std::string ids;
    for (auto i : parts) ids += (ids.empty() ? "B" : ",B") + std::to_string(i);
    arr.push_back({{"atoms", parts}, {"set", labels_of(set)}});
    t.row({ids.empty() ? "-" : ids, set.to_string()});
  }
  out.doc = {{"command", "enum-field"},
             {"atom_count", atoms.size()},
             {"set_count", field.sets.size()},
             {"sets", arr}};
  return out;
}

Output verify_finite(const Instance& inst) {
  auto atoms = finite_atoms(inst);
  auto report = verify_measure(require_measure(inst), atoms);
  Output out;
  Json doc = {{"command", "verify"}, {"valid", report.valid()}, {"issues", issues_json(report)}};
  Table t(out);
  t.row({"check", "result"});
  for (const auto& issue : report.issues) t.row({to_string(issue.kind), issue.message});
  bool valid = report.valid();
  if (inst.pmf) {
    auto pmf_report = pmf_validate(*inst.pmf);
    doc["pmf_valid"] = pmf_report.valid();
    doc["pmf_issues"] = issues_json(pmf_report);
    for (const auto& issue : pmf_report.issues) t.row({"pmf " + std::string(to_string(issue.kind)), issue.message});
    valid = valid && pmf_report.valid();
    doc["valid"] = valid;
  }
  if (valid) t.row({"measure", "valid"});
  out.doc = std::move(doc);
  out.status = valid ? kOk : kViolations;
  return out;
}

Pmf conditional_from_list(const AtomPartition& atoms, std::size_t i, const std::vector<Rational>& list) {
  const auto members = atoms.atom(i).members();
  if (list.size() != members.size()) {
    usage("conditional_pmfs/" + std::to_string(i) + " has " + std::to_string(list.size()) +
          " masses for atom " + atoms.atom(i).to_string() + " of size " +
          std::to_string(members.size()));
  }
  std::vector<Rational> q(atoms.space()->size());
  for (std::size_t k = 0; k < members.size(); ++k) q[members[k]] = list[k];
  return Pmf(atoms.space(), std::move(q));
}

Output extend_finite(const Instance& inst) {
  auto atoms = finite_atoms(inst);
  auto masses = solve_atom_masses(require_measure(inst), atoms);
  Output out;
  std::string method = "canonical";
  std::optional<Pmf> p;
  if (inst.conditional_pmfs) {
    const auto& lists = *inst.conditional_pmfs;
    if (lists.size() != atoms.size()) {
      usage("conditional_pmfs has " + std::to_string(lists.size()) + " entries for " +
            std::to_string(atoms.size()) + " atoms");
    }
    std::vector<Pmf> conditionals;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      conditionals.push_back(conditional_from_list(atoms, i, lists[i]));
    }
    p = parametrized_extension(ExtensionSpec{masses, std::move(conditionals)});
    method = "parametrized";
  } else {
    p = canonical_extension(masses);
  }
  out.doc = {{"command", "extend"},
             {"method", method},
             {"atom_masses", masses_json(masses)},
             {"pmf", pmf_json(*p)}};
  pmf_rows(out, *p);
  out.notes.push_back("method: " + method);
  return out;
}

Output restrict_finite(const Instance& inst) {
  if (!inst.pmf) usage("instance has no 'pmf'");
  auto masses = restrict_pmf(*inst.pmf, finite_atoms(inst));
  Output out;
  out.doc = {{"command", "restrict"}, {"atom_masses", masses_json(masses)}};
  masses_rows(out, masses);
  return out;
}

Output sigma_finite(const Instance& inst) {
  if (!inst.random_variable) usage("instance has no 'random_variable'");
  const auto& x = *inst.random_variable;
  auto atoms = sigma_of(x);
  Output out;
  Json levels = Json::array();
  Table t(out);
  t.row({"value", "level set"});
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& value = x.codomain()->label(x.value_of(*atoms.atom(i).first()));
    levels.push_back({{"atom", i}, {"value", value}, {"set", labels_of(atoms.atom(i))}});
    t.row({value, atoms.atom(i).to_string()});
  }
  Json unattained = Json::array();
  for (std::size_t v = 0; v < x.codomain()->size(); ++v) {
    if (!x.attained(v)) {
      unattained.push_back(x.codomain()->label(v));
      out.notes.push_back("unattained value: " + x.codomain()->label(v));
    }
  }
  out.doc = {{"command", "sigma"}, {"level_sets", levels}, {"unattained", unattained}};

  auto law_json = [&](const Pmf& law) {
    Json arr = Json::array();
    for (std::size_t v = 0; v < law.size(); ++v) {
      arr.push_back({{"value", law.space()->label(v)}, {"mass", law[v].to_string()}});
      out.notes.push_back("P(X=" + law.space()->label(v) + ") = " + law[v].to_string());
    }
    return arr;
  };
  if (inst.pmf) out.doc["induced_distribution"] = law_json(induced_distribution(x, *inst.pmf));
  if (inst.distribution) {
    auto scenario = scenario_extension(x, *inst.distribution);
    out.doc["scenario"] = {{"atom_masses", masses_json(scenario.masses)},
                           {"pmf", pmf_json(scenario.pmf)},
                           {"dof", dof_json(scenario.dof)}};
    for (std::size_t e = 0; e < scenario.pmf.size(); ++e) {
      out.notes.push_back("p(" + scenario.pmf.space()->label(e) + ") = " + scenario.pmf[e].to_string());
    }
    out.notes.push_back("dof (parametrization): " + scenario.dof.parametrization.to_string());
    out.notes.push_back("dof (distinct extensions): " + scenario.dof.distinct_extensions.to_string());
  }
  return out;
}

Output dof_finite(const Instance& inst) {
  std::optional<AtomMasses> masses;
  if (inst.measure) {
    masses = solve_atom_masses(*inst.measure, finite_atoms(inst));
  } else if (inst.random_variable && inst.distribution) {
    masses = scenario_extension(*inst.random_variable, *inst.distribution).masses;
  } else {
    usage("instance has neither 'measure' nor a random_variable with a distribution");
  }
  auto report = degrees_of_freedom(*masses);
  Output out;
  out.doc = {{"command", "dof"}};
  const auto counts = dof_json(report);
  for (const auto& [k, v] : counts.items()) out.doc[k] = v;
  dof_rows(out, report);
  return out;
}

Output roundtrip_finite(const Instance& inst, const Options& opt) {
  auto report = extension_roundtrip_check(require_measure(inst), *inst.generators, opt.guard_atoms);
  Output out;
  out.doc = {{"command", "roundtrip"},
             {"agreed", report.agreed},
             {"sets_checked", report.sets_checked},
             {"atom_masses", masses_json(report.masses)},
             {"pmf", pmf_json(report.extension)}};
  Table t(out);
  t.row({"check", "result"});
  t.row({"sets checked", std::to_string(report.sets_checked)});
  t.row({"agreement", report.agreed ? "exact" : "FAILED"});
  if (!report.agreed) {
    out.doc["disagreement"] = {{"set", labels_of(*report.first_disagreement)},
                               {"expected", report.expected->to_string()},
                               {"actual", report.actual->to_string()}};
    t.row({"first disagreement", report.first_disagreement->to_string() + ": expected " +
                                     report.expected->to_string() + ", got " +
                                     report.actual->to_string()});
    out.status = kViolations;
  }
  return out;
}

// ---- countable instances --------------------------------------------------

Json countable_atom_json(const CountablePresentation& pres, std::size_t a) {
  return {{"atom", a},
          {"kind", pres.is_infinite(a) ? "infinite" : "finite"},
          {"set", pres.describe_atom(a)},
          {"mass", pres.mass(a).to_string()}};
}

Output atoms_countable(const CountablePresentation& pres) {
  Output out;
  Json arr = Json::array();
  Table t(out);
  t.row({"atom", "kind", "set", "mass"});
  for (std::size_t a = 0; a < pres.atom_count(); ++a) {
    arr.push_back(countable_atom_json(pres, a));
    t.row({"B" + std::to_string(a), pres.is_infinite(a) ? "infinite" : "finite", pres.describe_atom(a),
           pres.mass(a).to_string()});
  }
  out.doc = {{"command", "atoms"}, {"atom_count", pres.atom_count()}, {"atoms", arr}};
  return out;
}

Output enum_field_countable(const CountablePresentation& pres, const Options& opt) {
  if (pres.atom_count() > opt.guard_atoms) {
    throw Error(ErrorKind::GuardExceeded, "field enumeration guard exceeded: " +
                                              std::to_string(pres.atom_count()) + " atoms, bound is " +
                                              std::to_string(opt.guard_atoms));
  }
  Output out;
  Json arr = Json::array();
  Table t(out);
  t.row({"atoms", "mass"});
  std::vector<std::size_t> current;
  atom_subsets(pres.atom_count(), 0, current, [&](const std::vector<std::size_t>& ids) {
    auto mass = measure_of_presented_set(pres, std::set<std::size_t>(ids.begin(), ids.end()));
    std::string names;
    for (auto i : ids) names += (names.empty() ? "B" : ",B") + std::to_string(i);
    arr.push_back({{"atoms", ids}, {"mass", mass.to_string()}});
    t.row({names.empty() ? "-" : names, mass.to_string()});
  });
  out.doc = {{"command", "enum-field"},
             {"atom_count", pres.atom_count()},
             {"set_count", arr.size()},
             {"sets", arr}};
  return out;
}

Output verify_countable(const CountablePresentation& pres) {
  std::set<std::size_t> all;
  for (std::size_t a = 0; a < pres.atom_count(); ++a) all.insert(a);
  auto total = measure_of_presented_set(pres, all);
  const bool valid = total == Rational(1);
  Output out;
  out.doc = {{"command", "verify"}, {"valid", valid}, {"total", total.to_string()}, {"issues", Json::array()}};
  Table t(out);
  t.row({"check", "result"});
  t.row({"total mass", total.to_string()});
  t.row({"presentation", valid ? "valid" : "invalid"});
  out.status = valid ? kOk : kViolations;
  return out;
}

Output extend_countable(const CountablePresentation& pres, const Options& opt) {
  Output out;
  Json arr = Json::array();
  Table t(out);
  t.row({"atom", "rank", "element", "mass"});
  for (std::size_t a = 0; a < pres.atom_count(); ++a) {
    const std::uint64_t shown = pres.is_infinite(a)
                                    ? opt.terms
                                    : std::min<std::uint64_t>(opt.terms, *pres.finite_size(a));
    Json values = Json::array();
    for (std::uint64_t k = 1; k <= shown; ++k) {
      auto index = pres.member(a, k);
      auto mass = lazy_pmf_eval(pres, index);
      values.push_back({{"rank", k}, {"element", pres.label(index)}, {"mass", mass.to_string()}});
      t.row({"B" + std::to_string(a), std::to_string(k), pres.label(index), mass.to_string()});
    }
    Json entry = countable_atom_json(pres, a);
    entry["values"] = values;
    entry["partial_sum"] = partial_sum(pres, a, shown).to_string();
    out.notes.push_back("B" + std::to_string(a) + " partial sum over " + std::to_string(shown) +
                        " members: " + partial_sum(pres, a, shown).to_string());
    if (pres.is_infinite(a)) {
      entry["tail"] = tail_bound(pres, a, shown).to_string();
      out.notes.push_back("B" + std::to_string(a) + " tail: " + tail_bound(pres, a, shown).to_string());
    }
    arr.push_back(std::move(entry));
  }
  out.doc = {{"command", "extend"}, {"method", "dyadic"}, {"terms", opt.terms}, {"atoms", arr}};
  return out;
}

Output dof_countable(const CountablePresentation& pres) {
  auto report = degrees_of_freedom(pres);
  Output out;
  out.doc = {{"command", "dof"}};
  const auto counts = dof_json(report);
  for (const auto& [k, v] : counts.items()) out.doc[k] = v;
  dof_rows(out, report);
  return out;
}

Output roundtrip_countable(const CountablePresentation& pres, const Options& opt) {
  std::size_t checks = 0;
  Json failures = Json::array();
  for (std::size_t a = 0; a < pres.atom_count(); ++a) {
    const std::uint64_t limit = pres.is_infinite(a) ? opt.terms : *pres.finite_size(a);
    Rational running;
    for (std::uint64_t n = 0; n <= limit; ++n) {
      if (n > 0) running += lazy_pmf_eval(pres, pres.member(a, n));
      ++checks;
      if (running != partial_sum(pres, a, n)) {
        failures.push_back({{"atom", a}, {"n", n}, {"check", "partial_sum"}});
      }
      if (pres.is_infinite(a)) {
        ++checks;
        if (partial_sum(pres, a, n) + tail_bound(pres, a, n) != pres.mass(a)) {
          failures.push_back({{"atom", a}, {"n", n}, {"check", "tail_identity"}});
        }
      }
    }
    if (!pres.is_infinite(a)) {
      ++checks;
      if (running != pres.mass(a)) failures.push_back({{"atom", a}, {"check", "atom_total"}});
    }
  }
  Output out;
  const bool agreed = failures.empty();
  out.doc = {{"command", "roundtrip"}, {"agreed", agreed}, {"checks", checks}, {"terms", opt.terms},
             {"failures", failures}};
  Table t(out);
  t.row({"check", "result"});
  t.row({"identities checked", std::to_string(checks)});
  t.row({"agreement", agreed ? "exact" : "FAILED"});
  out.status = agreed ? kOk : kViolations;
  return out;
}

// ---- driver ---------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Output dispatch(const std::string& command, const Instance& inst, const Options& opt) {
  if (inst.countable) {
    const auto& pres = *inst.countable;
    if (command == "atoms") return atoms_countable(pres);
    if (command == "enum-field") return enum_field_countable(pres, opt);
    if (command == "verify") return verify_countable(pres);
    if (command == "extend") return extend_countable(pres, opt);
    if (command == "dof") return dof_countable(pres);
    if (command == "roundtrip") return roundtrip_countable(pres, opt);
    usage("'" + command + "' needs a finite instance");
  }
  if (command == "atoms") return atoms_finite(inst);
  if (command == "enum-field") return enum_field_finite(inst, opt);
  if (command == "verify") return verify_finite(inst);
  if (command == "extend") return extend_finite(inst);
  if (command == "restrict") return restrict_finite(inst);
  if (command == "sigma") return sigma_finite(inst);
  if (command == "dof") return dof_finite(inst);
  if (command == "roundtrip") return roundtrip_finite(inst, opt);
  usage("unknown command '" + command + "'");
}

void render_table(const Output& out, std::ostream& os) {
  std::vector<std::size_t> width;
  for (const auto& row : out.rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : out.rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
  for (const auto& note : out.notes) os << note << '\n';
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GuardExceeded:
      return kGuard;
    case ErrorKind::NotMeasurable:
    case ErrorKind::Inconsistent:
    case ErrorKind::Underdetermined:
    case ErrorKind::NegativeAtomMass:
    case ErrorKind::InvalidPmf:
    case ErrorKind::UnsupportedDistribution:
    case ErrorKind::IndexerInconsistent:
    case ErrorKind::FiniteAtomTail:
      return kMeasure;
    case ErrorKind::ZeroDenominator:
    case ErrorKind::SpaceMismatch:
    case ErrorKind::InvalidSpace:
    case ErrorKind::InvalidArgument:
    case ErrorKind::Parse:
      return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Atoms of sigma-fields on countable spaces and exact p.m.f. extensions", "sigatoms"};
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--guard-atoms", opt.guard_atoms, "largest atom count for field enumeration")
      ->capture_default_str();
  app.add_option("--space-limit", opt.space_limit, "largest finite sample space")->capture_default_str();
  app.add_option("--terms", opt.terms, "members shown or checked per infinite atom")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "reserved; the core uses no randomness");
  app.require_subcommand(1, 1);

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"atoms", "atom blocks in canonical order"},
      {"enum-field", "every set of the generated field"},
      {"verify", "check that the measure is a probability measure on the field"},
      {"extend", "p.m.f. extending the measure to all subsets"},
      {"restrict", "atom masses of the instance's p.m.f."},
      {"sigma", "atoms of sigma(X) and the law of X"},
      {"dof", "degrees of freedom of the extension"},
      {"roundtrip", "rebuild the measure from its extension and compare"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("instance", opt.path, "JSON instance file")->required();
    sub->fallthrough();
  }

  std::vector<std::string> argv_store{"sigatoms"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  const bool json = opt.format == "json";

  try {
    auto inst = parse_instance(read_file(opt.path), opt.space_limit);
    auto result = dispatch(command, inst, opt);
    if (json) {
      out << result.doc.dump(2) << '\n';
    } else {
      render_table(result, out);
    }
    return result.status;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    if (json) {
      Json doc = {{"command", command},
                  {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}},
                  {"exit_code", code}};
      out << doc.dump(2) << '\n';
    }
    return code;
  }
}

}  // namespace sigatoms::cli
