#pragma once

#include <string>
#include <vector>

#include "osg/enumerate.hpp"
#include "osg/format.hpp"

#ifndef OSG_DATA_DIR
#error "OSG_DATA_DIR must point at the fixture directory"
#endif

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(OSG_DATA_DIR) + "/" + name; }

inline osg::OrderedSemigroup example1() { return osg::load_structure(path("example1.osg")); }
inline osg::OrderedSemigroup example2() { return osg::load_structure(path("example2.osg")); }
inline osg::OrderedSemigroup broken() { return osg::load_structure(path("broken.osg")); }
inline osg::OrderedSemigroup lift_counterexample() {
  return osg::load_structure(path("lift_counterexample.osg"));
}

inline osg::OrderedSemigroup trivial() {
  return osg::build({"e"}, {{0}}, {});
}

// Every ordered semigroup of sizes 1..max_n, in enumeration order.
inline std::vector<osg::OrderedSemigroup> enumerated(std::size_t max_n,
                                                     std::size_t cap = SIZE_MAX) {
  std::vector<osg::OrderedSemigroup> out;
  for (std::size_t n = 1; n <= max_n && out.size() < cap; ++n) {
    osg::for_each_semigroup(n, [&](const osg::Table& t) {
      osg::for_each_compatible_order(n, t, [&](std::span<const osg::Subset> below) {
        if (out.size() < cap) out.push_back(osg::make_structure(n, t, below));
      });
    });
  }
  return out;
}

// Element index by label.
inline osg::Element el(const osg::OrderedSemigroup& s, const std::string& label) {
  return *s.index_of(label);
}

inline osg::Subset set(const osg::OrderedSemigroup& s, const std::vector<std::string>& labels) {
  osg::Subset out;
  for (const auto& l : labels) out.insert(el(s, l));
  return out;
}

}  // namespace fixtures
