#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "osg/ordered_semigroup.hpp"

namespace osg {

enum class Axiom {
  Associativity,       // witness (i, j, k): (ij)k != i(jk)
  Reflexivity,         // witness (x, x): x </= x
  Antisymmetry,        // witness (x, y): x <= y, y <= x, x != y
  Transitivity,        // witness (x, y, z): x <= y <= z but x </= z
  LeftCompatibility,   // witness (a, b, c): a <= b but ca </= cb
  RightCompatibility,  // witness (a, b, c): a <= b but ac </= bc
  ZeroAbsorption,      // witness (x): xz != z or zx != z
  ZeroBottom,          // witness (x): z </= x
};

inline constexpr std::array<Axiom, 8> kAllAxioms = {
    Axiom::Associativity,     Axiom::Reflexivity,
    Axiom::Antisymmetry,      Axiom::Transitivity,
    Axiom::LeftCompatibility, Axiom::RightCompatibility,
    Axiom::ZeroAbsorption,    Axiom::ZeroBottom};

inline constexpr std::string_view axiom_id(Axiom a) {
  switch (a) {
    case Axiom::Associativity: return "associativity";
    case Axiom::Reflexivity: return "reflexivity";
    case Axiom::Antisymmetry: return "antisymmetry";
    case Axiom::Transitivity: return "transitivity";
    case Axiom::LeftCompatibility: return "left-compatibility";
    case Axiom::RightCompatibility: return "right-compatibility";
    case Axiom::ZeroAbsorption: return "zero-absorption";
    case Axiom::ZeroBottom: return "zero-bottom";
  }
  return "unknown";
}

// Number of witness tuples validate() inspects for one axiom; zero axioms
// only apply when a zero is declared.
inline std::size_t axiom_universe(const OrderedSemigroup& s, Axiom a) {
  const std::size_t n = s.size();
  switch (a) {
    case Axiom::Associativity:
    case Axiom::Transitivity:
    case Axiom::LeftCompatibility:
    case Axiom::RightCompatibility: return n * n * n;
    case Axiom::Reflexivity: return n;
    case Axiom::Antisymmetry: return n * (n - 1) / 2;
    case Axiom::ZeroAbsorption:
    case Axiom::ZeroBottom: return s.declared_zero() ? n : 0;
  }
  return 0;
}

struct Violation {
  Axiom axiom;
  std::vector<Element> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool violates(Axiom a) const {
    for (const Violation& v : violations) {
      if (v.axiom == a) return true;
    }
    return false;
  }
};

// Re-evaluate a violation's witness against the structure. True iff the
// witness still demonstrates the broken axiom.
inline bool reproduces(const OrderedSemigroup& s, const Violation& v) {
  const auto& w = v.witness;
  const std::size_t n = s.size();
  auto in_range = [&](std::size_t arity) {
    if (w.size() != arity) return false;
    for (Element e : w) {
      if (e >= n) return false;
    }
    return true;
  };
  switch (v.axiom) {
    case Axiom::Associativity:
      return in_range(3) &&
             s.mul(s.mul(w[0], w[1]), w[2]) != s.mul(w[0], s.mul(w[1], w[2]));
    case Axiom::Reflexivity:
      return in_range(2) && w[0] == w[1] && !s.leq(w[0], w[0]);
    case Axiom::Antisymmetry:
      return in_range(2) && w[0] != w[1] && s.leq(w[0], w[1]) &&
             s.leq(w[1], w[0]);
    case Axiom::Transitivity:
      return in_range(3) && s.leq(w[0], w[1]) && s.leq(w[1], w[2]) &&
             !s.leq(w[0], w[2]);
    case Axiom::LeftCompatibility:
      return in_range(3) && s.leq(w[0], w[1]) &&
             !s.leq(s.mul(w[2], w[0]), s.mul(w[2], w[1]));
    case Axiom::RightCompatibility:
      return in_range(3) && s.leq(w[0], w[1]) &&
             !s.leq(s.mul(w[0], w[2]), s.mul(w[1], w[2]));
    case Axiom::ZeroAbsorption: {
      if (!in_range(1) || !s.declared_zero()) return false;
      const Element z = *s.declared_zero();
      return s.mul(w[0], z) != z || s.mul(z, w[0]) != z;
    }
    case Axiom::ZeroBottom:
      return in_range(1) && s.declared_zero() &&
             !s.leq(*s.declared_zero(), w[0]);
  }
  return false;
}

// Check every axiom of an ordered semigroup. Each violated axiom appears once,
// with its lexicographically smallest witness.
inline ValidationReport validate(const OrderedSemigroup& s) {
  const Element n = static_cast<Element>(s.size());
  ValidationReport report;
  auto first_triple = [&](Axiom axiom, auto&& broken) {
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        for (Element k = 0; k < n; ++k) {
          if (broken(i, j, k)) {
            report.violations.push_back({axiom, {i, j, k}});
            return;
          }
        }
      }
    }
  };

  first_triple(Axiom::Associativity, [&](Element i, Element j, Element k) {
    return s.mul(s.mul(i, j), k) != s.mul(i, s.mul(j, k));
  });
  for (Element x = 0; x < n; ++x) {
    if (!s.leq(x, x)) {
      report.violations.push_back({Axiom::Reflexivity, {x, x}});
      break;
    }
  }
  [&] {
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (s.leq(x, y) && s.leq(y, x)) {
          report.violations.push_back({Axiom::Antisymmetry, {x, y}});
          return;
        }
      }
    }
  }();
  first_triple(Axiom::Transitivity, [&](Element x, Element y, Element z) {
    return s.leq(x, y) && s.leq(y, z) && !s.leq(x, z);
  });
  first_triple(Axiom::LeftCompatibility, [&](Element a, Element b, Element c) {
    return s.leq(a, b) && !s.leq(s.mul(c, a), s.mul(c, b));
  });
  first_triple(Axiom::RightCompatibility, [&](Element a, Element b, Element c) {
    return s.leq(a, b) && !s.leq(s.mul(a, c), s.mul(b, c));
  });
  if (auto z = s.declared_zero()) {
    for (Element x = 0; x < n; ++x) {
      if (s.mul(x, *z) != *z || s.mul(*z, x) != *z) {
        report.violations.push_back({Axiom::ZeroAbsorption, {x}});
        break;
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (!s.leq(*z, x)) {
        report.violations.push_back({Axiom::ZeroBottom, {x}});
        break;
      }
    }
  }
  return report;
}

// The element z with xz = zx = z and z <= x for every x, if there is one.
// A multiplicative zero is unique, so at most one candidate can qualify.
inline std::optional<Element> find_zero(const OrderedSemigroup& s) {
  const Element n = static_cast<Element>(s.size());
  for (Element z = 0; z < n; ++z) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = s.mul(x, z) == z && s.mul(z, x) == z && s.leq(z, x);
    }
    if (ok) return z;
  }
  return std::nullopt;
}

}  // namespace osg
