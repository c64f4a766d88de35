#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "osg/enumerate.hpp"
#include "osg/format.hpp"
#include "osg/lemmas.hpp"
#include "osg/report.hpp"
#include "osg/setalg.hpp"
#include "osg/validate.hpp"

namespace osg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

using report::Json;

namespace detail {

struct Outcome {
  Outcome() = default;
  Outcome(std::string cmd, Json s) : command(std::move(cmd)), structure(std::move(s)) {}

  std::string command;
  Json structure = nullptr;
  Json entries = Json::array();
  Json extra = Json::object();
  int exit_code = kExitOk;
  std::string text;
};

inline Witness violation_witness(const Violation& v) {
  static constexpr const char* kTriple[] = {"i", "j", "k"};
  static constexpr const char* kOrder[] = {"x", "y", "z"};
  static constexpr const char* kCompat[] = {"a", "b", "c"};
  const char* const* roles = kOrder;
  if (v.axiom == Axiom::Associativity) roles = kTriple;
  if (v.axiom == Axiom::LeftCompatibility || v.axiom == Axiom::RightCompatibility) {
    roles = kCompat;
  }
  Witness w;
  for (std::size_t i = 0; i < v.witness.size(); ++i) w.push_back({roles[i], v.witness[i]});
  return w;
}

inline std::string describe_violation(const OrderedSemigroup& s, const Violation& v) {
  const auto& w = v.witness;
  auto nm = [&](Element x) { return s.name(x); };
  switch (v.axiom) {
    case Axiom::Associativity:
      return "(" + nm(w[0]) + nm(w[1]) + ")" + nm(w[2]) + " = " +
             nm(s.mul(s.mul(w[0], w[1]), w[2])) + " but " + nm(w[0]) + "(" + nm(w[1]) +
             nm(w[2]) + ") = " + nm(s.mul(w[0], s.mul(w[1], w[2])));
    case Axiom::LeftCompatibility:
      return nm(w[0]) + " <= " + nm(w[1]) + " but " + nm(s.mul(w[2], w[0])) +
             " </= " + nm(s.mul(w[2], w[1]));
    case Axiom::RightCompatibility:
      return nm(w[0]) + " <= " + nm(w[1]) + " but " + nm(s.mul(w[0], w[2])) +
             " </= " + nm(s.mul(w[1], w[2]));
    default:
      return report::format_witness(s, violation_witness(v));
  }
}

inline void require_valid(const OrderedSemigroup& s) {
  ValidationReport r = validate(s);
  if (r.valid()) return;
  const Violation& v = r.violations.front();
  throw DomainError("structure is not a valid ordered semigroup: " +
                    std::string(axiom_id(v.axiom)) + " fails, " +
                    describe_violation(s, v));
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

inline Subset parse_labels(const OrderedSemigroup& s, const std::string& text) {
  Subset out;
  std::stringstream in(text);
  std::string label;
  while (std::getline(in, label, ',')) {
    label.erase(0, label.find_first_not_of(" \t"));
    label.erase(label.find_last_not_of(" \t") + 1);
    if (label.empty()) continue;
    auto x = s.index_of(label);
    if (!x) throw DomainError("unknown element label '" + label + "'");
    out.insert(*x);
  }
  return out;
}

inline Outcome run_validate(const std::string& file) {
  const OrderedSemigroup s = load_structure(file);
  const ValidationReport r = validate(s);
  const auto zero = find_zero(s);
  Outcome o{"validate", report::structure_json(s)};
  std::ostringstream text;
  for (Axiom a : kAllAxioms) {
    const bool zero_axiom = a == Axiom::ZeroAbsorption || a == Axiom::ZeroBottom;
    const Violation* hit = nullptr;
    for (const Violation& v : r.violations) {
      if (v.axiom == a) hit = &v;
    }
    Status st = hit ? Status::Fail : Status::Pass;
    if (zero_axiom && !s.declared_zero()) st = Status::NotApplicable;
    o.entries.push_back(report::entry_json(
        std::string(axiom_id(a)), st, axiom_universe(s, a),
        hit ? report::witness_json(s, violation_witness(*hit)) : Json(nullptr)));
    text << pad(std::string(axiom_id(a)), 22) << pad(std::string(to_string(st)), 16);
    if (hit) text << describe_violation(s, *hit);
    text << '\n';
  }
  o.extra["zero"] = zero ? report::element_json(s, *zero) : Json(nullptr);
  o.extra["valid"] = r.valid();
  text << "zero: " << (zero ? s.name(*zero) : std::string("none")) << '\n';
  text << (r.valid() ? "valid ordered semigroup" : "NOT a valid ordered semigroup") << '\n';
  o.exit_code = r.valid() ? kExitOk : kExitFailed;
  o.text = text.str();
  return o;
}

inline IdealKind parse_kind(const std::string& k) {
  if (k == "left") return IdealKind::Left;
  if (k == "right") return IdealKind::Right;
  return IdealKind::TwoSided;
}

inline Outcome run_ideals(const std::string& file, const std::string& kind_text) {
  const OrderedSemigroup s = load_structure(file);
  require_valid(s);
  const IdealKind kind = parse_kind(kind_text);
  Outcome o{"ideals", report::structure_json(s)};
  std::ostringstream text;
  const auto ideals = enumerate_ideals(s, kind);
  const std::size_t universe = s.carrier().bits();
  for (Subset m : ideals) {
    o.entries.push_back(report::entry_json(std::string(to_string(kind)) + "-ideal",
                                           Status::Pass, universe,
                                           Json{{"M", report::subset_json(s, m)}}));
    text << report::format_subset(s, m) << '\n';
  }
  text << ideals.size() << ' ' << to_string(kind) << " ideal(s) among " << universe
       << " nonempty subsets\n";
  o.text = text.str();
  return o;
}

inline Outcome run_ann(const std::string& file, const std::string& side_text,
                       const std::string& labels) {
  const OrderedSemigroup s = load_structure(file);
  require_valid(s);
  const Side side = side_text == "left" ? Side::Left : Side::Right;
  const Subset a = parse_labels(s, labels);
  const Subset result = annihilator(s, a, side);
  const std::string name = std::string(side == Side::Left ? "l" : "r") + "(A)";
  Outcome o{"ann", report::structure_json(s)};
  o.entries.push_back(report::entry_json(
      "annihilator." + std::string(to_string(side)), Status::Pass, s.size(),
      Json{{"A", report::subset_json(s, a)}, {name, report::subset_json(s, result)}}));
  o.text = std::string(side == Side::Left ? "l" : "r") + "(" +
           report::format_subset(s, a) + ") = " + report::format_subset(s, result) + '\n';
  return o;
}

inline Outcome run_check(const std::string& file, const std::string& selector) {
  const OrderedSemigroup s = load_structure(file);
  require_valid(s);
  const LemmaReport r = check_claims(s, selector);
  Outcome o{"check", report::structure_json(s)};
  std::ostringstream text;
  for (const LemmaEntry& e : r.entries) {
    o.entries.push_back(report::entry_json(s, e));
    text << pad(e.id, 16) << pad(std::string(to_string(e.status)), 16)
         << e.universe << " instance(s)";
    if (e.witness) text << "  witness: " << report::format_witness(s, *e.witness);
    text << '\n';
  }
  o.exit_code = r.passed() ? kExitOk : kExitFailed;
  o.text = text.str();
  return o;
}

inline Outcome run_refute(const std::string& file) {
  const OrderedSemigroup s = load_structure(file);
  require_valid(s);
  const auto witnesses = refute_monotonicity(s);
  Outcome o{"refute", report::structure_json(s)};
  std::ostringstream text;
  std::size_t comparable = 0;
  for (Element y = 0; y < s.size(); ++y) {
    for (Element x = 0; x < s.size(); ++x) comparable += s.lt(y, x) ? 1 : 0;
  }
  for (Side side : {Side::Left, Side::Right}) {
    const IdealKind kind = side == Side::Left ? IdealKind::Left : IdealKind::Right;
    const std::size_t universe = enumerate_ideals(s, kind).size() * comparable;
    const std::string id = "monotonicity." + std::string(to_string(side));
    bool any = false;
    for (const auto& w : witnesses) {
      if (w.side != side) continue;
      any = true;
      o.entries.push_back(report::entry_json(id, Status::Fail, universe,
                                             report::witness_json(s, w.as_witness())));
      const bool l = side == Side::Left;
      const std::string y = s.name(w.y), x = s.name(w.x);
      text << pad(std::string(to_string(side)), 6) << y << " <= " << x
           << "  M=" << report::format_subset(s, w.ideal) << ": "
           << (l ? y + "M=" : "M" + y + "=") << report::format_subset(s, w.lhs)
           << " not inside " << (l ? x + "M=" : "M" + x + "=")
           << report::format_subset(s, w.rhs) << '\n';
    }
    if (!any) o.entries.push_back(report::entry_json(id, Status::Pass, universe));
  }
  text << witnesses.size() << " refutation witness(es)\n";
  o.exit_code = witnesses.empty() ? kExitOk : kExitFailed;
  o.text = text.str();
  return o;
}

inline Outcome run_search(SearchTask task, const std::vector<std::string>& seed_files) {
  for (const auto& f : seed_files) task.seeds.push_back(load_structure(f));
  const SearchResult r = search(task);
  const std::string pid(property_id(task.property));
  Outcome o{"search", Json{{"names", letter_names(task.order_n)}, {"n", task.order_n}}};
  std::ostringstream text;
  for (const SearchWitness& w : r.witnesses) {
    Json wj = report::witness_json(w.structure, w.witness);
    wj["structure"] = report::structure_detail_json(w.structure);
    o.entries.push_back(
        report::entry_json(pid, Status::Fail, r.structures_examined, std::move(wj)));
    text << "--- witness: " << report::format_witness(w.structure, w.witness) << '\n'
         << serialize(w.structure);
  }
  if (r.witnesses_found == 0) {
    o.entries.push_back(report::entry_json(pid, Status::Pass, r.structures_examined));
  }
  o.extra["search"] = Json{{"property", pid},
                           {"structures_examined", r.structures_examined},
                           {"witnesses_found", r.witnesses_found},
                           {"complete", r.complete}};
  text << "property " << pid << ": examined " << r.structures_examined
       << " structure(s), " << r.witnesses_found << " witness(es), complete="
       << (r.complete ? "true" : "false") << '\n';
  o.exit_code = r.witnesses_found == 0 ? kExitOk : kExitFailed;
  o.text = text.str();
  return o;
}

}  // namespace detail

// Run one subcommand. `args` excludes the program name. Text or JSON goes to
// `out`, diagnostics to `err`. Returns 0 when every check passed, 1 when a
// check failed or a witness exists, 2 on input or usage errors.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Workbench for finite ordered semigroups", "osg"};
  app.require_subcommand(1);
  bool json = false;
  std::string file, kind, side, labels, selector = "all", property;
  SearchTask task;
  std::vector<std::string> seed_files;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Structure file")->required();
    sub->add_flag("--json", json, "Emit a JSON report");
    return sub;
  };
  auto* validate_cmd = with_file(app.add_subcommand("validate", "Check the axioms"));
  auto* ideals_cmd = with_file(app.add_subcommand("ideals", "List ideals"));
  ideals_cmd->add_option("--kind", kind, "left|right|two-sided")
      ->required()
      ->check(CLI::IsMember({"left", "right", "two-sided"}));
  auto* ann_cmd = with_file(app.add_subcommand("ann", "Compute an annihilator"));
  ann_cmd->add_option("--side", side, "left|right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  ann_cmd->add_option("--set", labels, "Comma-separated labels")->required();
  auto* check_cmd = with_file(app.add_subcommand("check", "Check the claims"));
  check_cmd->add_option("--lemma", selector, "Claim selector")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kClaimSelectors),
                                                     std::end(kClaimSelectors))));
  auto* refute_cmd =
      with_file(app.add_subcommand("refute", "Find non-monotone ideal products"));
  auto* search_cmd = app.add_subcommand("search", "Search generated structures");
  search_cmd->add_option("--size", task.order_n, "Structure size")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxSampledOrder));
  search_cmd->add_flag("--zero", task.require_zero, "Only structures with a zero");
  search_cmd->add_option("--property", property, "P1|P2|P3")
      ->required()
      ->check(CLI::IsMember({"P1", "P2", "P3"}));
  search_cmd->add_flag("--dedup", task.dedup, "One structure per isomorphism class");
  search_cmd->add_option("--limit", task.limit, "Maximum witnesses reported");
  search_cmd->add_option("--jobs", task.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--samples", task.samples, "Samples for sizes above 4");
  search_cmd->add_option("--rng-seed", task.rng_seed, "Seed for sampled mode");
  search_cmd->add_option("--seed-structure", seed_files,
                         "Structure files examined before generated ones");
  search_cmd->add_flag("--json", json, "Emit a JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  detail::Outcome o;
  try {
    if (chosen == validate_cmd) o = detail::run_validate(file);
    else if (chosen == ideals_cmd) o = detail::run_ideals(file, kind);
    else if (chosen == ann_cmd) o = detail::run_ann(file, side, labels);
    else if (chosen == check_cmd) o = detail::run_check(file, selector);
    else if (chosen == refute_cmd) o = detail::run_refute(file);
    else {
      task.property = parse_property(property);
      o = detail::run_search(task, seed_files);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    if (json) {
      Json j = report::make_report(chosen->get_name(), nullptr, Json::array(), kExitUsage);
      j["error"] = e.what();
      out << j.dump(2) << '\n';
    }
    return kExitUsage;
  }

  if (json) {
    Json j = report::make_report(o.command, o.structure, o.entries, o.exit_code);
    for (auto& [key, value] : o.extra.items()) j[key] = value;
    out << j.dump(2) << '\n';
  } else {
    out << o.text;
  }
  return o.exit_code;
}

}  // namespace osg::cli
