#pragma once

#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "osg/error.hpp"
#include "osg/ordered_semigroup.hpp"

namespace osg {

// Text format, one structure per file:
//
//   # comment
//   elements a b c d f
//   table
//   a b a a a            <- row i lists elements[i]*elements[j] for each j
//   ...
//   order (a,b) (c,a)    <- strict pairs; (x,y) means x < y; may be empty
//   zero a               <- optional
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Syntactic content of a structure file, with the positions needed for
// diagnostics.
struct StructureFile {
  struct Token {
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
  };

  std::vector<Token> names;
  std::vector<std::vector<Token>> rows;
  std::vector<std::pair<Token, Token>> order;
  std::optional<Token> zero;
};

namespace detail {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
};

inline std::vector<StructureFile::Token> split_tokens(const Line& line,
                                                      std::size_t from = 0) {
  std::vector<StructureFile::Token> out;
  const std::string& s = line.text;
  std::size_t i = from;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({s.substr(start, i - start), line.number, start + 1});
  }
  return out;
}

// "(x,y) (u,v) ..." starting at `from`.
inline std::vector<std::pair<StructureFile::Token, StructureFile::Token>>
parse_pairs(const Line& line, std::size_t from) {
  std::vector<std::pair<StructureFile::Token, StructureFile::Token>> out;
  const std::string& s = line.text;
  std::size_t i = from;
  auto skip_space = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_space();
    if (i >= s.size() || s[i] != c) {
      throw ParseError(line.number, i + 1,
                       std::string("expected '") + c + "' in order pair");
    }
    ++i;
  };
  auto label = [&] {
    skip_space();
    std::size_t start = i;
    while (i < s.size() && s[i] != ',' && s[i] != ')' && s[i] != '(' &&
           !std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    if (start == i) throw ParseError(line.number, i + 1, "expected element label");
    return StructureFile::Token{s.substr(start, i - start), line.number, start + 1};
  };
  for (skip_space(); i < s.size(); skip_space()) {
    expect('(');
    auto lo = label();
    expect(',');
    auto hi = label();
    expect(')');
    out.emplace_back(std::move(lo), std::move(hi));
  }
  return out;
}

inline bool starts_with_keyword(const std::string& text, std::string_view kw) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.compare(i, kw.size(), kw) != 0) return false;
  const std::size_t end = i + kw.size();
  return end == text.size() || std::isspace(static_cast<unsigned char>(text[end]));
}

inline std::size_t keyword_end(const std::string& text, std::string_view kw) {
  return text.find(kw) + kw.size();
}

}  // namespace detail

inline StructureFile parse_structure_file(std::string_view text) {
  std::vector<detail::Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t") == std::string::npos) continue;
      lines.push_back({number, raw});
    }
  }

  StructureFile file;
  std::size_t k = 0;
  const std::size_t last_line = lines.empty() ? 1 : lines.back().number;

  if (k == lines.size() || !detail::starts_with_keyword(lines[k].text, "elements")) {
    throw ParseError(k < lines.size() ? lines[k].number : 1, 1,
                     "expected 'elements' line");
  }
  file.names = detail::split_tokens(
      lines[k], detail::keyword_end(lines[k].text, "elements"));
  if (file.names.empty()) throw ParseError(lines[k].number, 1, "no elements declared");
  const std::size_t n = file.names.size();
  auto known = [&](const StructureFile::Token& t) {
    for (const auto& name : file.names) {
      if (name.text == t.text) return;
    }
    throw ParseError(t.line, t.column, "unknown element label '" + t.text + "'");
  };
  ++k;

  if (k == lines.size() || !detail::starts_with_keyword(lines[k].text, "table")) {
    throw ParseError(k < lines.size() ? lines[k].number : last_line, 1,
                     "expected 'table' line");
  }
  if (!detail::split_tokens(lines[k], detail::keyword_end(lines[k].text, "table")).empty()) {
    throw ParseError(lines[k].number, 1, "table rows start on the line after 'table'");
  }
  ++k;

  while (file.rows.size() < n) {
    const bool at_keyword =
        k == lines.size() || detail::starts_with_keyword(lines[k].text, "order") ||
        detail::starts_with_keyword(lines[k].text, "zero");
    if (at_keyword) {
      throw ParseError(k < lines.size() ? lines[k].number : last_line, 1,
                       "table has " + std::to_string(file.rows.size()) +
                           " rows, expected " + std::to_string(n) +
                           "; missing row for '" + file.names[file.rows.size()].text +
                           "'");
    }
    auto row = detail::split_tokens(lines[k]);
    if (row.size() != n) {
      throw ParseError(lines[k].number, row.empty() ? 1 : row.back().column,
                       "row for '" + file.names[file.rows.size()].text + "' has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (const auto& t : row) known(t);
    file.rows.push_back(std::move(row));
    ++k;
  }

  bool have_order = false;
  for (; k < lines.size(); ++k) {
    const detail::Line& line = lines[k];
    if (detail::starts_with_keyword(line.text, "order")) {
      if (have_order) throw ParseError(line.number, 1, "duplicate order declaration");
      have_order = true;
      file.order = detail::parse_pairs(line, detail::keyword_end(line.text, "order"));
      for (const auto& [lo, hi] : file.order) {
        known(lo);
        known(hi);
      }
    } else if (detail::starts_with_keyword(line.text, "zero")) {
      if (file.zero) throw ParseError(line.number, 1, "duplicate zero declaration");
      auto toks = detail::split_tokens(line, detail::keyword_end(line.text, "zero"));
      if (toks.size() != 1) {
        throw ParseError(line.number, 1, "zero declaration needs exactly one label");
      }
      known(toks[0]);
      file.zero = toks[0];
    } else {
      auto toks = detail::split_tokens(line);
      throw ParseError(line.number, toks.front().column,
                       "unexpected '" + toks.front().text + "' (table has " +
                           std::to_string(n) + " rows)");
    }
  }
  if (!have_order) throw ParseError(last_line, 1, "missing 'order' line");
  return file;
}

// Parse and build; the result is not validated.
inline OrderedSemigroup parse_structure(std::string_view text) {
  StructureFile file = parse_structure_file(text);
  std::vector<std::string> names;
  for (const auto& t : file.names) names.push_back(t.text);
  auto index = [&](const StructureFile::Token& t) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == t.text) return static_cast<Element>(i);
    }
    throw ParseError(t.line, t.column, "unknown element label '" + t.text + "'");
  };
  CayleyRows rows;
  for (const auto& row : file.rows) {
    auto& out = rows.emplace_back();
    for (const auto& t : row) out.push_back(index(t));
  }
  std::vector<StrictPair> pairs;
  for (const auto& [lo, hi] : file.order) pairs.emplace_back(index(lo), index(hi));
  std::optional<Element> zero;
  if (file.zero) zero = index(*file.zero);
  return build(std::move(names), rows, pairs, zero);
}

inline OrderedSemigroup load_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_structure(text.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

// Covering pairs of the order: x < y with nothing strictly between.
inline std::vector<StrictPair> covering_pairs(const OrderedSemigroup& s) {
  std::vector<StrictPair> out;
  const Element n = static_cast<Element>(s.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!s.lt(x, y)) continue;
      bool covered = true;
      for (Element z = 0; z < n && covered; ++z) covered = !(s.lt(x, z) && s.lt(z, y));
      if (covered) out.emplace_back(x, y);
    }
  }
  return out;
}

// Inverse of parse_structure for structures whose order is a partial order.
inline std::string serialize(const OrderedSemigroup& s) {
  std::ostringstream out;
  out << "elements";
  for (const auto& name : s.names()) out << ' ' << name;
  out << "\ntable\n";
  for (Element i = 0; i < s.size(); ++i) {
    for (Element j = 0; j < s.size(); ++j) out << (j ? " " : "") << s.name(s.mul(i, j));
    out << '\n';
  }
  out << "order";
  for (const auto& [x, y] : covering_pairs(s)) {
    out << " (" << s.name(x) << ',' << s.name(y) << ')';
  }
  out << '\n';
  if (auto z = s.declared_zero()) out << "zero " << s.name(*z) << '\n';
  return out.str();
}

}  // namespace osg
