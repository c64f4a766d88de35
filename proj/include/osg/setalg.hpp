#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osg/error.hpp"
#include "osg/ordered_semigroup.hpp"
#include "osg/subset.hpp"
#include "osg/validate.hpp"

namespace osg {

enum class IdealKind { Left, Right, TwoSided };
enum class Side { Left, Right };

inline constexpr std::string_view to_string(IdealKind k) {
  switch (k) {
    case IdealKind::Left: return "left";
    case IdealKind::Right: return "right";
    case IdealKind::TwoSided: return "two-sided";
  }
  return "?";
}

inline constexpr std::string_view to_string(Side s) {
  return s == Side::Left ? "left" : "right";
}

// {ab | a in A, b in B}
inline Subset product(const OrderedSemigroup& s, Subset a, Subset b) {
  Subset out;
  a.for_each([&](Element x) {
    b.for_each([&](Element y) { out.insert(s.mul(x, y)); });
  });
  return out;
}

// (A] = {y | y <= x for some x in A}
inline Subset down_closure(const OrderedSemigroup& s, Subset a) {
  Subset out;
  a.for_each([&](Element x) { out |= s.below(x); });
  return out;
}

inline bool is_down_closed(const OrderedSemigroup& s, Subset a) {
  return down_closure(s, a) == a;
}

// Nonempty, absorbing on the requested side(s), and downward closed.
inline bool is_ideal(const OrderedSemigroup& s, Subset a, IdealKind kind) {
  if (a.empty()) return false;
  const Subset all = s.carrier();
  if (kind != IdealKind::Right && !product(s, all, a).is_subset_of(a)) return false;
  if (kind != IdealKind::Left && !product(s, a, all).is_subset_of(a)) return false;
  return is_down_closed(s, a);
}

// Every ideal of the given kind, in ascending bitmask order.
inline std::vector<Subset> enumerate_ideals(const OrderedSemigroup& s,
                                            IdealKind kind) {
  std::vector<Subset> out;
  const Subset::Bits end = Subset::full(s.size()).bits();
  for (Subset::Bits bits = 1; bits != 0 && bits <= end; ++bits) {
    if (is_ideal(s, Subset(bits), kind)) out.push_back(Subset(bits));
  }
  return out;
}

inline Element require_zero(const OrderedSemigroup& s) {
  auto z = find_zero(s);
  if (!z) throw DomainError("annihilator undefined without zero");
  return *z;
}

// l(A) = {x | xa = 0 for all a in A}, r(A) = {x | ax = 0 for all a in A}.
inline Subset annihilator(const OrderedSemigroup& s, Subset a, Side side) {
  const Element z = require_zero(s);
  if (a.empty()) throw DomainError("annihilator of the empty set is undefined");
  Subset out;
  for (Element x = 0; x < s.size(); ++x) {
    bool kills = true;
    a.for_each([&](Element y) {
      if ((side == Side::Left ? s.mul(x, y) : s.mul(y, x)) != z) kills = false;
    });
    if (kills) out.insert(x);
  }
  return out;
}

inline Subset left_annihilator(const OrderedSemigroup& s, Subset a) {
  return annihilator(s, a, Side::Left);
}
inline Subset right_annihilator(const OrderedSemigroup& s, Subset a) {
  return annihilator(s, a, Side::Right);
}

// Throws DomainError naming a pair whose product leaves T.
inline void require_product_closed(const OrderedSemigroup& s, Subset t) {
  t.for_each([&](Element x) {
    t.for_each([&](Element y) {
      if (!t.contains(s.mul(x, y))) {
        throw DomainError("subset is not closed under the product: " +
                          s.name(x) + "*" + s.name(y) + " = " +
                          s.name(s.mul(x, y)));
      }
    });
  });
}

// L is an ideal of the subsemigroup T with the order inherited from S:
// nonempty, L within T, absorbing products with T on the requested side(s),
// and closed downward inside T. T must be product-closed.
inline bool is_ideal_of_subsemigroup(const OrderedSemigroup& s, Subset t,
                                     Subset l,
                                     IdealKind kind = IdealKind::TwoSided) {
  require_product_closed(s, t);
  if (l.empty() || !l.is_subset_of(t)) return false;
  if (kind != IdealKind::Right && !product(s, t, l).is_subset_of(l)) return false;
  if (kind != IdealKind::Left && !product(s, l, t).is_subset_of(l)) return false;
  return (down_closure(s, l) & t).is_subset_of(l);
}

// Every relative ideal of T, in ascending bitmask order.
inline std::vector<Subset> enumerate_relative_ideals(
    const OrderedSemigroup& s, Subset t, IdealKind kind = IdealKind::TwoSided) {
  require_product_closed(s, t);
  std::vector<Subset> out;
  // Submasks of T in increasing order.
  const Subset::Bits mask = t.bits();
  for (Subset::Bits sub = mask & (~mask + 1); sub != 0;
       sub = ((sub | ~mask) + 1) & mask) {
    if (is_ideal_of_subsemigroup(s, t, Subset(sub), kind)) out.push_back(Subset(sub));
  }
  return out;
}

}  // namespace osg
