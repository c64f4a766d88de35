#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "osg/lemmas.hpp"
#include "osg/ordered_semigroup.hpp"
#include "osg/validate.hpp"

namespace osg::report {

using Json = nlohmann::ordered_json;

// Human rendering uses labels only.

inline std::string format_subset(const OrderedSemigroup& s, Subset a) {
  std::string out = "{";
  bool first = true;
  a.for_each([&](Element x) {
    out += (first ? "" : ",") + s.name(x);
    first = false;
  });
  return out + "}";
}

inline std::string format_witness(const OrderedSemigroup& s, const Witness& w) {
  std::string out;
  for (const WitnessPart& part : w) {
    if (!out.empty()) out += ' ';
    out += part.role + '=';
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Element>) out += s.name(v);
          else if constexpr (std::is_same_v<T, Subset>) out += format_subset(s, v);
          else out += v;
        },
        part.value);
  }
  return out;
}

// Machine rendering carries labels and indices.

inline Json element_json(const OrderedSemigroup& s, Element x) {
  return Json{{"label", s.name(x)}, {"index", x}};
}

inline Json subset_json(const OrderedSemigroup& s, Subset a) {
  Json labels = Json::array(), indices = Json::array();
  a.for_each([&](Element x) {
    labels.push_back(s.name(x));
    indices.push_back(x);
  });
  return Json{{"labels", labels}, {"indices", indices}};
}

inline Json witness_json(const OrderedSemigroup& s, const Witness& w) {
  Json out = Json::object();
  for (const WitnessPart& part : w) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Element>) out[part.role] = element_json(s, v);
          else if constexpr (std::is_same_v<T, Subset>) out[part.role] = subset_json(s, v);
          else out[part.role] = v;
        },
        part.value);
  }
  return out;
}

inline Json entry_json(std::string id, Status status, std::size_t universe,
                       Json witness = nullptr) {
  return Json{{"id", std::move(id)},
              {"status", std::string(to_string(status))},
              {"universe", universe},
              {"witness", std::move(witness)}};
}

inline Json entry_json(const OrderedSemigroup& s, const LemmaEntry& e) {
  return entry_json(e.id, e.status, e.universe,
                    e.witness ? witness_json(s, *e.witness) : Json(nullptr));
}

inline Json structure_json(const OrderedSemigroup& s) {
  return Json{{"names", s.names()}, {"n", s.size()}};
}

// Full description of a structure, used where it is not the command's input
// (search witnesses).
inline Json structure_detail_json(const OrderedSemigroup& s) {
  Json j = structure_json(s);
  Json table = Json::array();
  for (Element i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (Element k = 0; k < s.size(); ++k) row.push_back(s.name(s.mul(i, k)));
    table.push_back(std::move(row));
  }
  Json order = Json::array();
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      if (s.lt(x, y)) order.push_back(Json::array({s.name(x), s.name(y)}));
    }
  }
  j["table"] = std::move(table);
  j["order"] = std::move(order);
  return j;
}

inline Json make_report(std::string command, Json structure, Json entries, int exit_code) {
  return Json{{"command", std::move(command)},
              {"structure", std::move(structure)},
              {"entries", std::move(entries)},
              {"exit_code", exit_code}};
}

}  // namespace osg::report
