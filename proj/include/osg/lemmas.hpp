#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "osg/ordered_semigroup.hpp"
#include "osg/setalg.hpp"
#include "osg/validate.hpp"

namespace osg {

// One named component of a witness: an element, a subset, or a tag such as
// the side of a one-sided claim.
struct WitnessPart {
  std::string role;
  std::variant<Element, Subset, std::string> value;

  friend bool operator==(const WitnessPart&, const WitnessPart&) = default;
};

using Witness = std::vector<WitnessPart>;

enum class Status { Pass, Fail, NotApplicable };

inline constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

// Outcome of checking one claim over its whole universe of instances. A
// failing entry carries the first instance (in enumeration order) where the
// claim broke.
struct LemmaEntry {
  LemmaEntry() = default;
  explicit LemmaEntry(std::string claim) : id(std::move(claim)) {}

  std::string id;
  std::size_t universe = 0;
  Status status = Status::Pass;
  std::optional<Witness> witness;

  void fail(Witness w) {
    if (status == Status::Fail) return;
    status = Status::Fail;
    witness = std::move(w);
  }
};

struct LemmaReport {
  std::vector<LemmaEntry> entries;

  bool passed() const {
    return std::none_of(entries.begin(), entries.end(), [](const LemmaEntry& e) {
      return e.status == Status::Fail;
    });
  }

  const LemmaEntry* find(std::string_view id) const {
    for (const LemmaEntry& e : entries) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }
};

namespace detail {

inline LemmaEntry not_applicable(std::string id) {
  LemmaEntry e{std::move(id)};
  e.status = Status::NotApplicable;
  return e;
}

template <typename F>
void for_each_nonempty_subset(const OrderedSemigroup& s, F&& f) {
  const Subset::Bits end = s.carrier().bits();
  for (Subset::Bits bits = 1; bits <= end; ++bits) f(Subset(bits));
}

inline std::size_t nonempty_subset_count(const OrderedSemigroup& s) {
  return s.carrier().bits();
}

}  // namespace detail

// l(A) is a left ideal and r(A) a right ideal for every nonempty A.
// Needs a zero.
inline LemmaEntry check_annihilators_are_ideals(const OrderedSemigroup& s) {
  if (!find_zero(s)) return detail::not_applicable("1.1.1");
  LemmaEntry e{"1.1.1"};
  detail::for_each_nonempty_subset(s, [&](Subset a) {
    ++e.universe;
    const Subset l = left_annihilator(s, a);
    if (!is_ideal(s, l, IdealKind::Left)) {
      e.fail({{"A", a}, {"side", std::string("left")}, {"l(A)", l}});
    }
    const Subset r = right_annihilator(s, a);
    if (!is_ideal(s, r, IdealKind::Right)) {
      e.fail({{"A", a}, {"side", std::string("right")}, {"r(A)", r}});
    }
  });
  return e;
}

// A is contained in r(l(A)) and in l(r(A)) for every nonempty A.
inline LemmaEntry check_double_annihilator_inclusion(const OrderedSemigroup& s) {
  if (!find_zero(s)) return detail::not_applicable("1.1.2");
  LemmaEntry e{"1.1.2"};
  detail::for_each_nonempty_subset(s, [&](Subset a) {
    ++e.universe;
    const Subset l = left_annihilator(s, a);
    const Subset rl = right_annihilator(s, l);
    if (!a.is_subset_of(rl)) e.fail({{"A", a}, {"l(A)", l}, {"r(l(A))", rl}});
    const Subset r = right_annihilator(s, a);
    const Subset lr = left_annihilator(s, r);
    if (!a.is_subset_of(lr)) e.fail({{"A", a}, {"r(A)", r}, {"l(r(A))", lr}});
  });
  return e;
}

// r(M) is a two-sided ideal for every right ideal M.
inline LemmaEntry check_right_annihilator_of_right_ideal(const OrderedSemigroup& s) {
  if (!find_zero(s)) return detail::not_applicable("1.1.4");
  LemmaEntry e{"1.1.4"};
  for (Subset m : enumerate_ideals(s, IdealKind::Right)) {
    ++e.universe;
    const Subset r = right_annihilator(s, m);
    if (!is_ideal(s, r, IdealKind::TwoSided)) e.fail({{"M", m}, {"r(M)", r}});
  }
  return e;
}

// The four steps of the classical argument that r(M) absorbs products, run
// for every right ideal M:
//   schwarz.a       M r(M) = {0}
//   schwarz.b       M (S r(M)) = {0} and M (r(M) S) = {0}
//   schwarz.c       every element e of S r(M) or r(M) S has Me = {0}, hence
//                   S r(M) and r(M) S lie inside r(M)
//   schwarz.simple  for a in S, b in r(M): (Ma)b is inside Mb = {0} and
//                   0 is in M(ab), so M(ab) = {0}
inline std::vector<LemmaEntry> check_annihilator_steps(const OrderedSemigroup& s) {
  const auto zero = find_zero(s);
  if (!zero) {
    return {detail::not_applicable("schwarz.a"), detail::not_applicable("schwarz.b"),
            detail::not_applicable("schwarz.c"),
            detail::not_applicable("schwarz.simple")};
  }
  const Subset z = Subset::singleton(*zero);
  const Subset all = s.carrier();
  LemmaEntry a{"schwarz.a"}, b{"schwarz.b"}, c{"schwarz.c"}, simple{"schwarz.simple"};

  for (Subset m : enumerate_ideals(s, IdealKind::Right)) {
    const Subset r = right_annihilator(s, m);
    ++a.universe;
    ++b.universe;
    ++c.universe;
    ++simple.universe;

    const Subset mr = product(s, m, r);
    if (mr != z) a.fail({{"M", m}, {"r(M)", r}, {"M r(M)", mr}});

    const Subset sr = product(s, all, r);
    const Subset rs = product(s, r, all);
    const Subset msr = product(s, m, sr);
    const Subset mrs = product(s, m, rs);
    if (msr != z) b.fail({{"M", m}, {"S r(M)", sr}, {"M(S r(M))", msr}});
    if (mrs != z) b.fail({{"M", m}, {"r(M) S", rs}, {"M(r(M) S)", mrs}});

    (sr | rs).for_each([&](Element x) {
      const Subset mx = product(s, m, Subset::singleton(x));
      if (mx != z) c.fail({{"M", m}, {"element", x}, {"M element", mx}});
    });
    if (!sr.is_subset_of(r)) c.fail({{"M", m}, {"r(M)", r}, {"S r(M)", sr}});
    if (!rs.is_subset_of(r)) c.fail({{"M", m}, {"r(M)", r}, {"r(M) S", rs}});

    for (Element x = 0; x < s.size(); ++x) {
      r.for_each([&](Element y) {
        const Subset mx_y = product(s, product(s, m, Subset::singleton(x)),
                                    Subset::singleton(y));
        const Subset my = product(s, m, Subset::singleton(y));
        const Subset mxy = product(s, m, Subset::singleton(s.mul(x, y)));
        if (!mx_y.is_subset_of(my) || my != z || !mxy.contains(*zero) || mxy != z) {
          simple.fail({{"M", m}, {"a", x}, {"b", y}, {"M(ab)", mxy}});
        }
      });
    }
  }
  return {a, b, c, simple};
}

// y <= x implies yA lies inside (xA], for every nonempty A and every
// comparable pair. Holds without a zero.
inline LemmaEntry check_down_closure_remark(const OrderedSemigroup& s) {
  LemmaEntry e{"remark"};
  const Element n = static_cast<Element>(s.size());
  detail::for_each_nonempty_subset(s, [&](Subset a) {
    for (Element x = 0; x < n; ++x) {
      const Subset xa_down = down_closure(s, product(s, Subset::singleton(x), a));
      s.below(x).for_each([&](Element y) {
        ++e.universe;
        const Subset ya = product(s, Subset::singleton(y), a);
        if (!ya.is_subset_of(xa_down)) {
          e.fail({{"A", a}, {"y", y}, {"x", x}, {"yA", ya}, {"(xA]", xa_down}});
        }
      });
    }
  });
  return e;
}

// For every two-sided ideal A and every ideal L of the subsemigroup r(A),
// L contains 0 and is an ideal of S ("2.15.4"). The one-sided variant
// ("2.15.4.left") lifts left ideals of r(A) to left ideals of S. Both are
// false in general: the absorption S L inside L does not follow.
inline std::vector<LemmaEntry> check_relative_ideals_lift(const OrderedSemigroup& s) {
  const auto zero = find_zero(s);
  if (!zero) {
    return {detail::not_applicable("2.15.4"), detail::not_applicable("2.15.4.left")};
  }
  LemmaEntry both{"2.15.4"}, left{"2.15.4.left"};
  auto run = [&](LemmaEntry& e, Subset a, Subset t, IdealKind kind) {
    std::vector<Subset> relative;
    try {
      relative = enumerate_relative_ideals(s, t, kind);
    } catch (const DomainError&) {
      ++e.universe;
      e.fail({{"A", a}, {"r(A)", t}});
      return;
    }
    for (Subset l : relative) {
      ++e.universe;
      if (!l.contains(*zero) || !is_ideal(s, l, kind)) {
        e.fail({{"A", a}, {"r(A)", t}, {"L", l}});
      }
    }
  };
  for (Subset a : enumerate_ideals(s, IdealKind::TwoSided)) {
    const Subset t = right_annihilator(s, a);
    run(both, a, t, IdealKind::TwoSided);
    run(left, a, t, IdealKind::Left);
  }
  return {both, left};
}

// A refutation of "y <= x implies yM inside xM" (left ideals M) or
// "y <= x implies My inside Mx" (right ideals M).
struct MonotonicityWitness {
  Side side;
  Subset ideal;
  Element y;
  Element x;
  Subset lhs;  // yM or My
  Subset rhs;  // xM or Mx

  friend bool operator==(const MonotonicityWitness&,
                         const MonotonicityWitness&) = default;

  Witness as_witness() const {
    const bool l = side == Side::Left;
    return {{"side", std::string(to_string(side))},
            {"M", ideal},
            {"y", y},
            {"x", x},
            {l ? "yM" : "My", lhs},
            {l ? "xM" : "Mx", rhs}};
  }
};

// Every (M, y, x) with y < x where the product with a one-sided ideal fails
// to be monotone. Left-side witnesses come first, then right-side; each group
// is ordered by M, then y, then x.
inline std::vector<MonotonicityWitness> refute_monotonicity(const OrderedSemigroup& s) {
  std::vector<MonotonicityWitness> out;
  const Element n = static_cast<Element>(s.size());
  for (Side side : {Side::Left, Side::Right}) {
    const IdealKind kind = side == Side::Left ? IdealKind::Left : IdealKind::Right;
    for (Subset m : enumerate_ideals(s, kind)) {
      for (Element y = 0; y < n; ++y) {
        for (Element x = 0; x < n; ++x) {
          if (!s.lt(y, x)) continue;
          const Subset sy = Subset::singleton(y), sx = Subset::singleton(x);
          const Subset lhs = side == Side::Left ? product(s, sy, m) : product(s, m, sy);
          const Subset rhs = side == Side::Left ? product(s, sx, m) : product(s, m, sx);
          if (!lhs.is_subset_of(rhs)) out.push_back({side, m, y, x, lhs, rhs});
        }
      }
    }
  }
  return out;
}

inline constexpr std::string_view kClaimSelectors[] = {
    "1.1.1", "1.1.2", "1.1.4", "schwarz", "remark", "2.15.4", "all"};

// Entries for one selector from kClaimSelectors, in fixed order.
inline LemmaReport check_claims(const OrderedSemigroup& s, std::string_view selector) {
  LemmaReport report;
  auto& out = report.entries;
  const bool all = selector == "all";
  auto append = [&](std::vector<LemmaEntry> entries) {
    out.insert(out.end(), entries.begin(), entries.end());
  };
  if (all || selector == "1.1.1") out.push_back(check_annihilators_are_ideals(s));
  if (all || selector == "1.1.2") out.push_back(check_double_annihilator_inclusion(s));
  if (all || selector == "1.1.4") out.push_back(check_right_annihilator_of_right_ideal(s));
  if (all || selector == "schwarz") append(check_annihilator_steps(s));
  if (all || selector == "remark") out.push_back(check_down_closure_remark(s));
  if (all || selector == "2.15.4") append(check_relative_ideals_lift(s));
  if (out.empty()) throw DomainError("unknown claim selector '" + std::string(selector) + "'");
  return report;
}

inline LemmaReport check_all(const OrderedSemigroup& s) { return check_claims(s, "all"); }

}  // namespace osg
