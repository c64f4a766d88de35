#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osg/error.hpp"
#include "osg/subset.hpp"

namespace osg {

using CayleyRows = std::vector<std::vector<Element>>;
using StrictPair = std::pair<Element, Element>;  // (x, y) means x < y

// A finite semigroup with a partial order on its carrier and an optional
// declared zero. Immutable once constructed.
//
// The order is stored as one down-set per element: below(x) = {y | y <= x}.
// Construction only checks shapes and index ranges; the algebraic axioms are
// the business of validate().
class OrderedSemigroup {
 public:
  OrderedSemigroup(std::vector<std::string> names, std::vector<Element> table,
                   std::vector<Subset> below,
                   std::optional<Element> declared_zero = std::nullopt)
      : names_(std::move(names)),
        table_(std::move(table)),
        below_(std::move(below)),
        zero_(declared_zero) {
    const std::size_t n = names_.size();
    if (n == 0 || n > kMaxOrder) {
      throw BuildError("structure size must be between 1 and " +
                       std::to_string(kMaxOrder) + ", got " +
                       std::to_string(n));
    }
    check_labels();
    if (table_.size() != n * n) {
      throw BuildError("table must have " + std::to_string(n * n) +
                       " entries, got " + std::to_string(table_.size()));
    }
    for (std::size_t k = 0; k < table_.size(); ++k) {
      if (table_[k] >= n) {
        throw BuildError("table entry " + names_[k / n] + "*" + names_[k % n] +
                         " is out of range (" + std::to_string(table_[k]) +
                         ")");
      }
    }
    if (below_.size() != n) {
      throw BuildError("order must have one row per element");
    }
    const Subset carrier = Subset::full(n);
    for (const Subset& row : below_) {
      if (!row.is_subset_of(carrier)) {
        throw BuildError("order row refers to elements out of range");
      }
    }
    if (zero_ && *zero_ >= n) {
      throw BuildError("declared zero is out of range");
    }
  }

  std::size_t size() const { return names_.size(); }
  Subset carrier() const { return Subset::full(size()); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element x) const { return names_[x]; }
  std::optional<Element> index_of(std::string_view label) const {
    auto it = std::find(names_.begin(), names_.end(), label);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Element>(it - names_.begin());
  }

  Element mul(Element a, Element b) const { return table_[a * size() + b]; }
  bool leq(Element a, Element b) const { return below_[b].contains(a); }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  Subset below(Element x) const { return below_[x]; }

  // Row-major Cayley table: table()[a * n + b] = a*b.
  std::span<const Element> table() const { return table_; }
  std::span<const Subset> down_sets() const { return below_; }

  std::optional<Element> declared_zero() const { return zero_; }

  friend bool operator==(const OrderedSemigroup&,
                         const OrderedSemigroup&) = default;

 private:
  void check_labels() const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const std::string& s = names_[i];
      if (s.empty()) throw BuildError("element label must not be empty");
      for (char c : s) {
        if (c == '(' || c == ')' || c == ',' || c == '#' ||
            static_cast<unsigned char>(c) <= ' ') {
          throw BuildError("element label '" + s +
                           "' contains a reserved character");
        }
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[j] == s) throw BuildError("duplicate element label '" + s + "'");
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<Element> table_;
  std::vector<Subset> below_;
  std::optional<Element> zero_;
};

namespace detail {

inline std::vector<Element> flatten_rows(const CayleyRows& rows, std::size_t n) {
  if (rows.size() != n) {
    throw BuildError("table must have " + std::to_string(n) + " rows, got " +
                     std::to_string(rows.size()));
  }
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw BuildError("table row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries, got " +
                       std::to_string(rows[i].size()));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return flat;
}

// Path from `from` to `to` along the strict pairs, found by BFS; empty if
// unreachable.
inline std::vector<Element> strict_path(std::size_t n,
                                        const std::vector<StrictPair>& pairs,
                                        Element from, Element to) {
  std::vector<int> parent(n, -1);
  std::vector<Element> queue{from};
  std::vector<bool> seen(n, false);
  seen[from] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element u = queue[head];
    for (const auto& [x, y] : pairs) {
      if (x != u || seen[y]) continue;
      seen[y] = true;
      parent[y] = static_cast<int>(u);
      queue.push_back(y);
    }
  }
  if (!seen[to]) return {};
  std::vector<Element> path{to};
  for (Element v = to; v != from;) {
    v = static_cast<Element>(parent[v]);
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

// Reflexive-transitive closure of a strict relation, as down-sets.
inline std::vector<Subset> order_closure(std::size_t n,
                                         const std::vector<StrictPair>& pairs) {
  std::vector<Subset> below(n);
  for (Element x = 0; x < n; ++x) below[x] = Subset::singleton(x);
  for (const auto& [x, y] : pairs) below[y].insert(x);
  for (Element k = 0; k < n; ++k) {
    for (Element y = 0; y < n; ++y) {
      if (below[y].contains(k)) below[y] |= below[k];
    }
  }
  return below;
}

// Assemble a structure from a Cayley table and covering/strict pairs. The
// order is the reflexive-transitive closure of `strict`. A closure that is
// not antisymmetric is a build error carrying the offending cycle.
inline OrderedSemigroup build(std::vector<std::string> names,
                              const CayleyRows& cayley,
                              const std::vector<StrictPair>& strict,
                              std::optional<Element> declared_zero = std::nullopt) {
  const std::size_t n = names.size();
  if (n == 0 || n > kMaxOrder) {
    throw BuildError("structure size must be between 1 and " +
                     std::to_string(kMaxOrder) + ", got " + std::to_string(n));
  }
  std::vector<Element> table = detail::flatten_rows(cayley, n);
  for (const auto& [x, y] : strict) {
    if (x >= n || y >= n) throw BuildError("order pair refers to an unknown element");
    if (x == y) {
      throw BuildError("order pair (" + names[x] + "," + names[x] +
                           ") is not strict",
                       {x, x});
    }
  }
  std::vector<Subset> below = order_closure(n, strict);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (below[y].contains(x) && below[x].contains(y)) {
        std::vector<Element> cycle = detail::strict_path(n, strict, x, y);
        std::vector<Element> back = detail::strict_path(n, strict, y, x);
        cycle.insert(cycle.end(), back.begin() + 1, back.end());
        std::string text;
        for (Element e : cycle) text += (text.empty() ? "" : " < ") + names[e];
        throw BuildError("order is not antisymmetric: cycle " + text,
                         std::move(cycle));
      }
    }
  }
  return OrderedSemigroup(std::move(names), std::move(table), std::move(below),
                          declared_zero);
}

// Assemble a structure from a full order matrix, leq[i][j] = (i <= j). The
// matrix is taken as given and checked by validate(), never closed.
inline OrderedSemigroup build_with_order_matrix(
    std::vector<std::string> names, const CayleyRows& cayley,
    const std::vector<std::vector<bool>>& leq,
    std::optional<Element> declared_zero = std::nullopt) {
  const std::size_t n = names.size();
  std::vector<Element> table = detail::flatten_rows(cayley, n);
  if (leq.size() != n) throw BuildError("order matrix must be n x n");
  std::vector<Subset> below(n);
  for (Element i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw BuildError("order matrix must be n x n");
    for (Element j = 0; j < n; ++j) {
      if (leq[i][j]) below[j].insert(i);
    }
  }
  return OrderedSemigroup(std::move(names), std::move(table), std::move(below),
                          declared_zero);
}

// Default labels a, b, c, ... for generated structures.
inline std::vector<std::string> letter_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

}  // namespace osg
