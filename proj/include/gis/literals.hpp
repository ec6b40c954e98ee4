// Text forms for paths and elements, as accepted and printed by the CLI.
//
//   path     := <vertex-id> | '[' <edge-id>+ ']'
//   element  := '0'
//             | <path> '|' <path>
//             | <vertex-id>            (shorthand for v | v)
//             | <edge-id>              (shorthand for [e] | r(e))
//             | <edge-id>'^-1'         (shorthand for r(e) | [e])

#ifndef GIS_LITERALS_HPP
#define GIS_LITERALS_HPP

#include <string>
#include <vector>

#include "gis/element.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace gis {

namespace detail {

inline std::vector<std::string> lex_literal(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back(cur);
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == '|') {
      flush();
      tokens.push_back(std::string(1, ch));
    } else if (static_cast<unsigned char>(ch) <= 0x20) {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return tokens;
}

inline Path parse_path_tokens(const Graph& g,
                              const std::vector<std::string>& tokens,
                              const std::string& original) {
  if (tokens.empty()) {
    throw Error("empty path literal in '" + original + "'");
  }
  if (tokens.front() == "[") {
    if (tokens.back() != "]" || tokens.size() < 3) {
      throw Error("unbalanced brackets in path literal '" + original + "'");
    }
    std::vector<std::string> ids(tokens.begin() + 1, tokens.end() - 1);
    for (const std::string& id : ids) {
      if (id == "[" || id == "]") {
        throw Error("nested brackets in path literal '" + original + "'");
      }
    }
    return Path::from_edge_ids(g, ids);
  }
  if (tokens.size() != 1) {
    throw Error("malformed path literal '" + original + "'");
  }
  return Path::trivial(g, tokens.front());
}

}  // namespace detail

inline Path parse_path_literal(const Graph& g, const std::string& text) {
  return detail::parse_path_tokens(g, detail::lex_literal(text), text);
}

inline GisElement parse_element_literal(const Graph& g,
                                        const std::string& text) {
  std::vector<std::string> tokens = detail::lex_literal(text);
  if (tokens.empty()) {
    throw Error("empty element literal");
  }

  auto bar = std::find(tokens.begin(), tokens.end(), "|");
  if (bar != tokens.end()) {
    Path left = detail::parse_path_tokens(
        g, std::vector<std::string>(tokens.begin(), bar), text);
    Path right = detail::parse_path_tokens(
        g, std::vector<std::string>(bar + 1, tokens.end()), text);
    if (left.range() != right.range()) {
      throw Error("range mismatch in '" + text + "': left side ends at '" +
                  g.vertex_id(left.range()) + "' but right side ends at '" +
                  g.vertex_id(right.range()) + "'");
    }
    return GisElement::pair(left, right);
  }

  if (tokens.size() != 1) {
    throw Error("malformed element literal '" + text + "'");
  }
  const std::string& word = tokens.front();
  if (word == "0") {
    return GisElement::zero();
  }
  if (word.size() > 3 && word.ends_with("^-1")) {
    std::string id = word.substr(0, word.size() - 3);
    if (!g.find_edge(id)) {
      throw Error("'^-1' applies to edges, but '" + id + "' is not an edge");
    }
    return GisElement::edge_inverse(g, id);
  }
  if (g.find_vertex(word)) {
    return GisElement::vertex(g, word);
  }
  if (g.find_edge(word)) {
    return GisElement::edge(g, word);
  }
  throw Error("'" + word + "' names neither a vertex nor an edge");
}

}  // namespace gis

#endif  // GIS_LITERALS_HPP
