// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "osg/cli.hpp"
#include "osg/osg.hpp"
#include "schema_check.hpp"

namespace {

using Json = nlohmann::json;
using fixtures::path;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = osg::cli::run_command(args, out, err);
  return {code, out.str()};
}

Json labels(std::initializer_list<const char*> xs) {
  Json out = Json::array();
  for (const char* x : xs) out.push_back(x);
  return out;
}

std::vector<Json> ideal_label_sets(const Json& report) {
  std::vector<Json> out;
  for (const auto& e : report["entries"]) out.push_back(e["witness"]["M"]["labels"]);
  return out;
}

// AC1: Example 1 validates without zero, {a,c,d} is a left ideal, and refute
// reports both monotonicity failures with their exact products.
Outcome example1() {
  Outcome o;
  auto v = cli({"validate", path("example1.osg"), "--json"});
  o.require(v.code == 0, "validate exit code");
  o.require(v.json()["valid"] == true && v.json()["zero"].is_null(), "valid, no zero");
  auto left = ideal_label_sets(cli({"ideals", path("example1.osg"), "--kind", "left", "--json"}).json());
  o.require(std::find(left.begin(), left.end(), labels({"a", "c", "d"})) != left.end(),
            "{a,c,d} among left ideals");
  auto r = cli({"refute", path("example1.osg"), "--json"});
  o.require(r.code == 1, "refute exit code 1");
  bool found_left = false, found_right = false;
  const Json report = r.json();
  for (const auto& e : report["entries"]) {
    const auto& w = e["witness"];
    if (w.is_null() || w["y"]["label"] != "c" || w["x"]["label"] != "a") continue;
    if (w["side"] == "left" && w["M"]["labels"] == labels({"a", "c", "d"}) &&
        w["yM"]["labels"] == labels({"a", "c"}) && w["xM"]["labels"] == labels({"a"})) {
      found_left = true;
    }
    if (w["side"] == "right" && w["M"]["labels"] == labels({"a", "b", "c", "d"}) &&
        w["My"]["labels"] == labels({"a", "c"}) && w["Mx"]["labels"] == labels({"a"})) {
      found_right = true;
    }
  }
  o.require(found_left, "left witness (c, a, {a,c,d})");
  o.require(found_right, "right witness (c, a, {a,b,c,d})");
  return o;
}

// AC2: Example 2 zero and exact ideal lists.
Outcome example2() {
  Outcome o;
  auto v = cli({"validate", path("example2.osg"), "--json"}).json();
  o.require(v["valid"] == true, "valid");
  o.require(v["zero"]["label"] == "a", "zero is a");
  auto right = ideal_label_sets(cli({"ideals", path("example2.osg"), "--kind", "right", "--json"}).json());
  auto left = ideal_label_sets(cli({"ideals", path("example2.osg"), "--kind", "left", "--json"}).json());
  o.require(right == std::vector<Json>{labels({"a"}), labels({"a", "b", "c"}), labels({"a", "d", "f"}),
                                       labels({"a", "b", "c", "d", "f"})},
            "right ideals");
  o.require(left == std::vector<Json>{labels({"a"}), labels({"a", "b", "d"}), labels({"a", "c", "f"}),
                                      labels({"a", "b", "c", "d", "f"})},
            "left ideals");
  return o;
}

// AC3: every claim passes on Example 2 with the stated universes.
Outcome example2_claims() {
  Outcome o;
  auto r = cli({"check", path("example2.osg"), "--lemma", "all", "--json"});
  o.require(r.code == 0, "exit code 0");
  const auto s = fixtures::example2();
  const auto raw = oracle::raw(s);
  std::size_t leq = 0, pairs = 0, left_pairs = 0;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) leq += raw.leq[x][y];
  for (const auto& a : oracle::ideals(raw, 'T')) {
    const auto t = oracle::annihilator(raw, 0, a, 'r');
    for (unsigned bits = 1; bits < 32; ++bits) {
      oracle::Set l;
      for (int x = 0; x < 5; ++x)
        if (bits >> x & 1U) l.insert(x);
      bool down = oracle::subset_of(l, t);
      for (int x : l)
        for (int y : t) down = down && (!raw.leq[y][x] || l.count(y));
      if (!down) continue;
      const bool tl = oracle::subset_of(oracle::product(raw, t, l), l);
      pairs += tl && oracle::subset_of(oracle::product(raw, l, t), l);
      left_pairs += tl;
    }
  }
  const std::map<std::string, std::size_t> universe{
      {"1.1.1", 31},          {"1.1.2", 31},          {"1.1.4", 4},
      {"schwarz.a", 4},       {"schwarz.b", 4},       {"schwarz.c", 4},
      {"schwarz.simple", 4},  {"remark", 31 * leq},   {"2.15.4", pairs},
      {"2.15.4.left", left_pairs}};
  const auto entries = r.json()["entries"];
  o.require(entries.size() == universe.size(), "entry count");
  for (const auto& e : entries) {
    const std::string id = e["id"];
    o.require(e["status"] == "pass", id + " passes");
    o.require(universe.count(id) && e["universe"] == universe.at(id), id + " universe");
  }
  return o;
}

// AC4: no claim fails on any ordered semigroup with zero of size <= 3.
Outcome meta_test() {
  Outcome o;
  std::size_t examined = 0;
  for (const auto& s : fixtures::enumerated(3)) {
    if (!osg::find_zero(s)) continue;
    ++examined;
    o.require(osg::check_all(s).passed(), "claim failure on\n" + osg::serialize(s));
  }
  auto r = cli({"search", "--size", "3", "--zero", "--property", "P3", "--json"});
  const auto j = r.json();
  o.require(r.code == 0, "search exit code 0");
  o.require(j["search"]["complete"] == true, "complete=true");
  o.require(j["search"]["witnesses_found"] == 0, "0 witnesses");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(examined) +
              " structures with zero (sizes 1-3)";
  return o;
}

// AC5: the backtracking enumerator against brute force at size 2.
Outcome enumeration_oracle() {
  Outcome o;
  const auto brute = oracle::all_associative_tables(2);
  std::vector<std::vector<unsigned>> got;
  for (const auto& t : osg::enumerate_semigroups(2)) got.emplace_back(t.begin(), t.end());
  o.require(brute.size() == 8, "brute force gives 8 tables");
  o.require(got == brute, "enumerator equals brute-force filter");
  const int orbits = oracle::orbit_count(2, brute);
  o.require(static_cast<int>(osg::enumerate_semigroups(2, true).size()) == orbits,
            "dedup class count equals orbit count");
  o.require(orbits == 5, "5 classes");
  return o;
}

bool reverify_monotonicity(const osg::OrderedSemigroup& s, const osg::Witness& w) {
  const auto r = oracle::raw(s);
  std::string side;
  oracle::Set m;
  int y = -1, x = -1;
  for (const auto& part : w) {
    if (part.role == "side") side = std::get<std::string>(part.value);
    if (part.role == "M") m = oracle::to_set(std::get<osg::Subset>(part.value));
    if (part.role == "y") y = static_cast<int>(std::get<osg::Element>(part.value));
    if (part.role == "x") x = static_cast<int>(std::get<osg::Element>(part.value));
  }
  if (y < 0 || x < 0 || x == y || !r.leq[y][x]) return false;
  if (!oracle::ideal(r, m, side == "left" ? 'L' : 'R')) return false;
  const auto lhs = side == "left" ? oracle::product(r, {y}, m) : oracle::product(r, m, {y});
  const auto rhs = side == "left" ? oracle::product(r, {x}, m) : oracle::product(r, m, {x});
  return !oracle::subset_of(lhs, rhs);
}

// A lifting failure: A a two-sided ideal, L a relative ideal of r(A) that is
// not an ideal of S (or misses 0).
bool reverify_lifting(const osg::OrderedSemigroup& s, const osg::Witness& w) {
  const auto r = oracle::raw(s);
  const auto zs = oracle::zeros(r);
  if (zs.size() != 1) return false;
  std::string claim;
  oracle::Set a, l;
  for (const auto& part : w) {
    if (part.role == "claim") claim = std::get<std::string>(part.value);
    if (part.role == "A") a = oracle::to_set(std::get<osg::Subset>(part.value));
    if (part.role == "L") l = oracle::to_set(std::get<osg::Subset>(part.value));
  }
  const char kind = claim == "2.15.4" ? 'T' : 'L';
  if (claim != "2.15.4" && claim != "2.15.4.left") return false;
  if (!oracle::ideal(r, a, 'T')) return false;
  const auto t = oracle::annihilator(r, zs[0], a, 'r');
  if (l.empty() || !oracle::subset_of(l, t)) return false;
  if (!oracle::subset_of(oracle::product(r, t, l), l)) return false;
  if (kind == 'T' && !oracle::subset_of(oracle::product(r, l, t), l)) return false;
  for (int x : l)
    for (int y : t)
      if (r.leq[y][x] && !l.count(y)) return false;
  return !l.count(zs[0]) || !oracle::ideal(r, l, kind);
}

// AC6: every refute/search witness re-verifies by brute force.
Outcome witness_soundness() {
  Outcome o;
  auto structures = fixtures::enumerated(4, 1000);
  o.require(structures.size() == 1000, "1000 enumerated structures");
  structures.push_back(fixtures::example1());
  structures.push_back(fixtures::example2());
  structures.push_back(fixtures::lift_counterexample());
  std::size_t checked = 0;
  for (const auto& s : structures) {
    for (const auto& w : osg::refute_monotonicity(s)) {
      ++checked;
      o.require(reverify_monotonicity(s, w.as_witness()), "refute witness\n" + osg::serialize(s));
    }
  }
  for (auto p : {osg::Property::LeftMonotoneIdeals, osg::Property::RightMonotoneIdeals}) {
    osg::SearchTask task;
    task.order_n = 3;
    task.property = p;
    task.jobs = 4;
    task.seeds.push_back(fixtures::example1());
    const auto r = osg::search(task);
    o.require(r.witnesses.size() == r.witnesses_found, "unlimited search keeps all witnesses");
    for (const auto& w : r.witnesses) {
      ++checked;
      o.require(reverify_monotonicity(w.structure, w.witness), "search witness");
    }
  }
  osg::SearchTask lemma_task;
  lemma_task.order_n = 4;
  lemma_task.require_zero = true;
  lemma_task.property = osg::Property::LemmaSuite;
  lemma_task.jobs = 4;
  const auto lr = osg::search(lemma_task);
  for (const auto& w : lr.witnesses) {
    ++checked;
    o.require(reverify_lifting(w.structure, w.witness), "P3 witness\n" + osg::serialize(w.structure));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " witnesses re-verified";
  return o;
}

// AC7: closure operator laws and the down-closure inclusion.
Outcome closure_properties() {
  Outcome o;
  auto structures = fixtures::enumerated(3);
  structures.push_back(fixtures::example1());
  structures.push_back(fixtures::example2());
  std::size_t instances = 0;
  for (const auto& s : structures) {
    const auto r = oracle::raw(s);
    const osg::Subset::Bits full = s.carrier().bits();
    for (osg::Subset::Bits ab = 0; ab <= full; ++ab) {
      const osg::Subset a(ab);
      const osg::Subset da = osg::down_closure(s, a);
      o.require(oracle::to_set(da) == oracle::down(r, oracle::to_set(a)), "closure agrees with oracle");
      o.require(a.is_subset_of(da), "extensive");
      o.require(osg::down_closure(s, da) == da, "idempotent");
      for (osg::Subset::Bits bb = ab; bb <= full; bb = (bb + 1) | ab) {
        o.require(da.is_subset_of(osg::down_closure(s, osg::Subset(bb))), "monotone");
      }
      if (a.empty()) continue;
      for (int x = 0; x < r.n; ++x)
        for (int y = 0; y < r.n; ++y) {
          if (!r.leq[y][x]) continue;
          ++instances;
          const auto ya = oracle::product(r, {y}, oracle::to_set(a));
          const auto xa = oracle::down(r, oracle::product(r, {x}, oracle::to_set(a)));
          o.require(oracle::subset_of(ya, xa), "yA inside (xA]");
        }
    }
    o.require(osg::check_down_closure_remark(s).status == osg::Status::Pass, "remark entry passes");
  }
  o.require(instances >= 10000, "at least 10000 (A, y, x) instances");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(instances) + " (A, y, x) instances";
  return o;
}

// AC8: text round trip and JSON schema conformance.
Outcome round_trip_and_schema() {
  Outcome o;
  std::vector<osg::OrderedSemigroup> all{fixtures::example1(), fixtures::example2()};
  const auto pool = fixtures::enumerated(4, 5000);
  for (std::size_t i = 0; i < pool.size() && all.size() < 102; i += pool.size() / 100) {
    all.push_back(pool[i]);
  }
  o.require(all.size() == 102, "2 fixtures + 100 enumerated");
  for (const auto& s : all) {
    o.require(osg::parse_structure(osg::serialize(s)) == s, "round trip\n" + osg::serialize(s));
  }
  std::ifstream in(OSG_SCHEMA);
  const schema::Checker checker(Json::parse(in));
  const std::vector<std::vector<std::string>> commands{
      {"validate", path("example1.osg"), "--json"},
      {"validate", path("broken.osg"), "--json"},
      {"ideals", path("example2.osg"), "--kind", "right", "--json"},
      {"ann", path("example2.osg"), "--side", "right", "--set", "d", "--json"},
      {"check", path("example2.osg"), "--lemma", "all", "--json"},
      {"refute", path("example1.osg"), "--json"},
      {"search", "--size", "3", "--property", "P2", "--json"},
  };
  for (const auto& c : commands) {
    const auto r = cli(c);
    const auto err = checker.check(r.json());
    o.require(err.empty(), c[0] + " report: " + err);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double seconds_limit;  // 0 = no time bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 example 1: valid, no zero, left ideal {a,c,d}, both refutations", 1.0, example1},
      {"AC2 example 2: zero a, exact left/right ideal lists", 1.0, example2},
      {"AC3 example 2: every claim passes with full coverage", 1.0, example2_claims},
      {"AC4 meta-test: no claim fails for sizes <= 3 with zero", 60.0, meta_test},
      {"AC5 enumerator equals brute force at size 2; dedup equals orbit count", 1.0,
       enumeration_oracle},
      {"AC6 witness soundness over fixtures, 1000 structures and searches", 0.0,
       witness_soundness},
      {"AC7 closure laws and yA inside (xA] on fixtures and sizes <= 3", 0.0,
       closure_properties},
      {"AC8 round trip and JSON schema conformance", 0.0, round_trip_and_schema},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds_limit > 0 && secs >= c.seconds_limit) {
      o.require(false, "took " + std::to_string(secs) + " s");
      o.ok = false;
    }
    failures += o.ok ? 0 : 1;
    std::printf("[%s] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
