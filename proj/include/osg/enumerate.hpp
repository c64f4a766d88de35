#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "osg/error.hpp"
#include "osg/lemmas.hpp"
#include "osg/ordered_semigroup.hpp"
#include "osg/setalg.hpp"
#include "osg/validate.hpp"

namespace osg {

inline constexpr std::size_t kMaxExhaustiveOrder = 4;
inline constexpr std::size_t kMaxSampledOrder = 5;

// Row-major Cayley table, cells[i * n + j] = i*j.
using Table = std::vector<Element>;

namespace detail {

inline constexpr int kUnset = -1;

// Backtracking over the cells of an n x n table in row-major order. A cell is
// assigned only if every associativity triple it completes still holds, so
// each yielded table is associative and tables come out in lexicographic
// order (unless `shuffle` randomises the value order).
class TableSearch {
 public:
  TableSearch(std::size_t n, std::vector<int> preset)
      : n_(n), cells_(std::move(preset)) {
    if (cells_.empty()) cells_.assign(n * n, kUnset);
  }

  // Calls visit(table) for each associative completion; visit returns false to
  // stop. Returns false if stopped early.
  template <typename Visit>
  bool run(Visit&& visit, std::mt19937_64* shuffle = nullptr) {
    if (!consistent()) return true;
    return descend(0, visit, shuffle);
  }

 private:
  int at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  // Every fully determined triple is associative.
  bool consistent() const {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        const int xy = at(x, y);
        if (xy == kUnset) continue;
        for (std::size_t w = 0; w < n_; ++w) {
          const int yw = at(y, w);
          if (yw == kUnset) continue;
          const int left = at(static_cast<std::size_t>(xy), w);
          const int right = at(x, static_cast<std::size_t>(yw));
          if (left != kUnset && right != kUnset && left != right) return false;
        }
      }
    }
    return true;
  }

  template <typename Visit>
  bool descend(std::size_t pos, Visit& visit, std::mt19937_64* shuffle) {
    while (pos < cells_.size() && cells_[pos] != kUnset) ++pos;
    if (pos == cells_.size()) {
      Table t(cells_.begin(), cells_.end());
      return visit(static_cast<const Table&>(t));
    }
    std::vector<int> values(n_);
    std::iota(values.begin(), values.end(), 0);
    if (shuffle) std::shuffle(values.begin(), values.end(), *shuffle);
    for (int v : values) {
      cells_[pos] = v;
      if (consistent() && !descend(pos + 1, visit, shuffle)) {
        cells_[pos] = kUnset;
        return false;
      }
    }
    cells_[pos] = kUnset;
    return true;
  }

  std::size_t n_;
  std::vector<int> cells_;
};

inline void check_exhaustive_order(std::size_t n) {
  if (n < 1 || n > kMaxExhaustiveOrder) {
    throw DomainError("exhaustive enumeration supports sizes 1.." +
                      std::to_string(kMaxExhaustiveOrder) + ", got " +
                      std::to_string(n));
  }
}

// First row number `index` in base n, most significant digit first, so that
// partitions are numbered in lexicographic order of their first rows.
inline std::vector<int> first_row_preset(std::size_t n, std::size_t index) {
  std::vector<int> preset(n * n, kUnset);
  for (std::size_t j = n; j-- > 0;) {
    preset[j] = static_cast<int>(index % n);
    index /= n;
  }
  return preset;
}

inline std::size_t partition_count(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= n;
  return c;
}

}  // namespace detail

// Visit every associative n x n table in lexicographic order.
template <typename Visit>
void for_each_semigroup(std::size_t n, Visit&& visit) {
  detail::check_exhaustive_order(n);
  detail::TableSearch(n, {}).run([&](const Table& t) {
    visit(t);
    return true;
  });
}

// Visit the associative tables whose first row is the `index`-th first row in
// lexicographic order; the partitions over index = 0..n^n-1 cover the space.
template <typename Visit>
void for_each_semigroup_in_partition(std::size_t n, std::size_t index, Visit&& visit) {
  detail::check_exhaustive_order(n);
  detail::TableSearch(n, detail::first_row_preset(n, index)).run([&](const Table& t) {
    visit(t);
    return true;
  });
}

// Relabel a table by the permutation p (old element i becomes p[i]).
inline Table relabel(std::size_t n, const Table& t, std::span<const Element> p) {
  Table out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[p[i] * n + p[j]] = p[t[i * n + j]];
  }
  return out;
}

// Lexicographically smallest table over all relabelings.
inline Table canonical_table(std::size_t n, const Table& t) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0U);
  Table best = t;
  do {
    Table cand = relabel(n, t, p);
    if (cand < best) best = std::move(cand);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Every associative table of size n; with dedup, only the canonical
// representative of each isomorphism class. Lexicographic order either way.
inline std::vector<Table> enumerate_semigroups(std::size_t n, bool dedup = false) {
  std::vector<Table> out;
  for_each_semigroup(n, [&](const Table& t) {
    if (!dedup || canonical_table(n, t) == t) out.push_back(t);
  });
  return out;
}

namespace detail {

// Builds partial orders by deciding strict pairs (x, y) one at a time in
// row-major order. Each inclusion adds the pair, closes transitively and
// adds every pair that compatibility then forces; the branch dies on a cycle
// or on a pair that was already decided against.
class OrderSearch {
 public:
  OrderSearch(std::size_t n, std::span<const Element> table)
      : n_(n), table_(table.begin(), table.end()) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (x != y) pairs_.emplace_back(x, y);
      }
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    std::vector<Subset> below(n_);
    for (Element x = 0; x < n_; ++x) below[x] = Subset::singleton(x);
    std::vector<Subset> excluded(n_);
    descend(0, below, excluded, visit);
  }

 private:
  Element mul(Element a, Element b) const { return table_[a * n_ + b]; }

  bool insert(std::vector<Subset>& below, const std::vector<Subset>& excluded,
              Element a, Element b) const {
    std::vector<StrictPair> work{{a, b}};
    while (!work.empty()) {
      auto [lo, hi] = work.back();
      work.pop_back();
      if (below[hi].contains(lo)) continue;
      std::vector<Element> ups;
      for (Element v = 0; v < n_; ++v) {
        if (below[v].contains(hi)) ups.push_back(v);
      }
      const Subset downs = below[lo];
      for (Element v : ups) {
        bool failed = false;
        downs.for_each([&](Element u) {
          if (failed || below[v].contains(u)) return;
          if (u == v || below[u].contains(v) || excluded[v].contains(u)) {
            failed = true;
            return;
          }
          below[v].insert(u);
          for (Element c = 0; c < n_; ++c) {
            if (mul(c, u) != mul(c, v)) work.emplace_back(mul(c, u), mul(c, v));
            if (mul(u, c) != mul(v, c)) work.emplace_back(mul(u, c), mul(v, c));
          }
        });
        if (failed) return false;
      }
    }
    return true;
  }

  template <typename Visit>
  void descend(std::size_t k, std::vector<Subset>& below,
               std::vector<Subset>& excluded, Visit& visit) {
    if (k == pairs_.size()) {
      visit(static_cast<std::span<const Subset>>(below));
      return;
    }
    const auto [x, y] = pairs_[k];
    if (below[y].contains(x)) {
      descend(k + 1, below, excluded, visit);
      return;
    }
    excluded[y].insert(x);
    descend(k + 1, below, excluded, visit);
    excluded[y].erase(x);

    if (below[x].contains(y)) return;
    std::vector<Subset> next = below;
    if (insert(next, excluded, x, y)) descend(k + 1, next, excluded, visit);
  }

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<StrictPair> pairs_;
};

}  // namespace detail

// Visit every partial order compatible with an associative table on both
// sides, as down-sets. The discrete order is always visited first.
template <typename Visit>
void for_each_compatible_order(std::size_t n, std::span<const Element> table,
                               Visit&& visit) {
  detail::OrderSearch(n, table).run(visit);
}

inline std::vector<std::vector<Subset>> enumerate_compatible_orders(
    std::size_t n, std::span<const Element> table) {
  std::vector<std::vector<Subset>> out;
  for_each_compatible_order(n, table, [&](std::span<const Subset> below) {
    out.emplace_back(below.begin(), below.end());
  });
  return out;
}

// Table cells followed by the order matrix (leq[i][j] at n*n + i*n + j).
using StructureCode = std::vector<Element>;

inline StructureCode structure_code(std::size_t n, std::span<const Element> table,
                                    std::span<const Subset> below,
                                    std::span<const Element> p) {
  StructureCode code(2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      code[p[i] * n + p[j]] = p[table[i * n + j]];
      code[n * n + p[i] * n + p[j]] = below[j].contains(static_cast<Element>(i)) ? 1 : 0;
    }
  }
  return code;
}

// Lexicographically smallest (table, order) code over all relabelings.
inline StructureCode canonical_code(std::size_t n, std::span<const Element> table,
                                    std::span<const Subset> below) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0U);
  StructureCode best = structure_code(n, table, below, p);
  while (std::next_permutation(p.begin(), p.end())) {
    StructureCode cand = structure_code(n, table, below, p);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

inline bool is_canonical(std::size_t n, std::span<const Element> table,
                         std::span<const Subset> below) {
  std::vector<Element> id(n);
  std::iota(id.begin(), id.end(), 0U);
  return structure_code(n, table, below, id) == canonical_code(n, table, below);
}

inline OrderedSemigroup make_structure(std::size_t n, const Table& table,
                                       std::span<const Subset> below) {
  return OrderedSemigroup(letter_names(n), table,
                          std::vector<Subset>(below.begin(), below.end()));
}

// -- search -----------------------------------------------------------------

enum class Property {
  LeftMonotoneIdeals,   // P1: y <= x implies yM inside xM for left ideals M
  RightMonotoneIdeals,  // P2: y <= x implies My inside Mx for right ideals M
  LemmaSuite,           // P3: every claim of check_all holds
};

inline constexpr std::string_view property_id(Property p) {
  switch (p) {
    case Property::LeftMonotoneIdeals: return "P1";
    case Property::RightMonotoneIdeals: return "P2";
    case Property::LemmaSuite: return "P3";
  }
  return "?";
}

inline Property parse_property(std::string_view id) {
  for (Property p : {Property::LeftMonotoneIdeals, Property::RightMonotoneIdeals,
                     Property::LemmaSuite}) {
    if (property_id(p) == id) return p;
  }
  throw DomainError("unknown property '" + std::string(id) + "'");
}

struct SearchTask {
  std::size_t order_n = 1;
  bool require_zero = false;
  Property property = Property::LemmaSuite;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  bool dedup = false;
  std::size_t jobs = 1;
  // Sampled mode (order_n above kMaxExhaustiveOrder).
  std::size_t samples = 200;
  std::uint64_t rng_seed = 1;
  // Explicit structures examined before the generated ones.
  std::vector<OrderedSemigroup> seeds;
};

struct SearchWitness {
  OrderedSemigroup structure;
  Witness witness;
};

struct SearchResult {
  std::size_t structures_examined = 0;
  std::size_t witnesses_found = 0;
  std::vector<SearchWitness> witnesses;  // first `limit` in search order
  bool complete = false;
};

// The first violation of the property on one structure, if any. P1/P2 report
// the first monotonicity witness of their side; P3 reports the first failing
// claim with its witness.
inline std::optional<Witness> evaluate_property(const OrderedSemigroup& s,
                                                Property p) {
  if (p == Property::LemmaSuite) {
    for (const LemmaEntry& e : check_all(s).entries) {
      if (e.status != Status::Fail) continue;
      Witness w{{"claim", e.id}};
      if (e.witness) w.insert(w.end(), e.witness->begin(), e.witness->end());
      return w;
    }
    return std::nullopt;
  }
  const Side side = p == Property::LeftMonotoneIdeals ? Side::Left : Side::Right;
  for (const MonotonicityWitness& m : refute_monotonicity(s)) {
    if (m.side == side) return m.as_witness();
  }
  return std::nullopt;
}

namespace detail {

struct PartialResult {
  std::size_t examined = 0;
  std::size_t found = 0;
  std::vector<SearchWitness> witnesses;

  void examine(const OrderedSemigroup& s, const SearchTask& task) {
    if (task.require_zero && !find_zero(s)) return;
    ++examined;
    if (auto w = evaluate_property(s, task.property)) {
      ++found;
      if (witnesses.size() < task.limit) witnesses.push_back({s, std::move(*w)});
    }
  }

  void merge(PartialResult&& other, std::size_t limit) {
    examined += other.examined;
    found += other.found;
    for (auto& w : other.witnesses) {
      if (witnesses.size() >= limit) break;
      witnesses.push_back(std::move(w));
    }
  }
};

inline void examine_table(std::size_t n, const Table& t, const SearchTask& task,
                          PartialResult& out) {
  for_each_compatible_order(n, t, [&](std::span<const Subset> below) {
    if (task.dedup && !is_canonical(n, t, below)) return;
    out.examine(make_structure(n, t, below), task);
  });
}

inline PartialResult search_exhaustive(const SearchTask& task) {
  const std::size_t n = task.order_n;
  const std::size_t parts = partition_count(n);
  std::vector<PartialResult> results(parts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < parts; k = next++) {
      for_each_semigroup_in_partition(n, k, [&](const Table& t) {
        examine_table(n, t, task, results[k]);
      });
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(task.jobs, 1, parts);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  PartialResult merged;
  for (auto& r : results) merged.merge(std::move(r), task.limit);
  return merged;
}

// One random associative table per sample (randomised value order in the
// backtracking), then one of its compatible orders chosen uniformly. With
// require_zero the first element is fixed as zero and bottom.
inline PartialResult search_sampled(const SearchTask& task) {
  const std::size_t n = task.order_n;
  std::mt19937_64 rng(task.rng_seed);
  PartialResult out;
  for (std::size_t sample = 0; sample < task.samples; ++sample) {
    std::vector<int> preset(n * n, kUnset);
    if (task.require_zero) {
      for (std::size_t i = 0; i < n; ++i) preset[i] = preset[i * n] = 0;
    }
    Table table;
    TableSearch(n, preset).run(
        [&](const Table& t) {
          table = t;
          return false;
        },
        &rng);
    std::vector<std::vector<Subset>> orders;
    for_each_compatible_order(n, table, [&](std::span<const Subset> below) {
      if (task.require_zero && !std::all_of(below.begin(), below.end(),
                                            [](Subset d) { return d.contains(0); })) {
        return;
      }
      orders.emplace_back(below.begin(), below.end());
    });
    std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
    const auto& below = orders[pick(rng)];
    if (task.dedup && !is_canonical(n, table, below)) continue;
    out.examine(make_structure(n, table, below), task);
  }
  return out;
}

}  // namespace detail

// Run a property over every ordered semigroup of the task's size (or a seeded
// sample of them above kMaxExhaustiveOrder), after the explicit seeds.
// Results do not depend on the number of jobs.
inline SearchResult search(const SearchTask& task) {
  if (task.order_n < 1 || task.order_n > kMaxSampledOrder) {
    throw DomainError("search supports sizes 1.." + std::to_string(kMaxSampledOrder) +
                      ", got " + std::to_string(task.order_n));
  }
  detail::PartialResult total;
  for (const OrderedSemigroup& s : task.seeds) {
    if (!validate(s).valid()) throw DomainError("seed structure is not a valid ordered semigroup");
    total.examine(s, task);
  }
  const bool exhaustive = task.order_n <= kMaxExhaustiveOrder;
  total.merge(exhaustive ? detail::search_exhaustive(task) : detail::search_sampled(task),
              task.limit);
  return {total.examined, total.found, std::move(total.witnesses), exhaustive};
}

}  // namespace osg
