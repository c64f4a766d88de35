#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace osg {

// Elements of a finite structure are dense indices 0..n-1.
using Element = unsigned;

inline constexpr std::size_t kMaxOrder = 16;

// Subset: bitmask over the carrier of one structure. Bit i set <=> element i
// is a member. Comparison orders subsets by their bitmask value, which is the
// order every enumeration in this library reports in.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset singleton(Element x) { return Subset(Bits{1} << x); }
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(Element x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(Element x) { bits_ |= Bits{1} << x; }
  constexpr void erase(Element x) { bits_ &= ~(Bits{1} << x); }

  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  // Smallest member; undefined on the empty set.
  constexpr Element front() const {
    return static_cast<Element>(std::countr_zero(bits_));
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
      f(static_cast<Element>(std::countr_zero(rest)));
    }
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  constexpr Subset& operator|=(Subset other) {
    bits_ |= other.bits_;
    return *this;
  }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  Bits bits_ = 0;
};

}  // namespace osg
