// Finite directed multigraphs with named vertices and edges, plus the
// connectivity predicates the rest of the library is built on.

#ifndef GIS_GRAPH_HPP
#define GIS_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Characters that would collide with the graph-file and literal grammars.
inline std::optional<std::string> identifier_problem(const std::string& id) {
  if (id.empty()) {
    return "identifier is empty";
  }
  for (char c : id) {
    if (static_cast<unsigned char>(c) <= 0x20 || c == 0x7f) {
      return "identifier contains whitespace or a control character";
    }
    if (c == '#' || c == '[' || c == ']' || c == '|' || c == '^') {
      return std::string("identifier contains reserved character '") + c + "'";
    }
  }
  return std::nullopt;
}

struct EdgeSpec {
  std::string id;
  std::string source;
  std::string range;
};

// Immutable after construction.  Vertices and edges are stored sorted by
// identifier, so integer index order coincides with lexicographic id order;
// every deterministic-ordering contract in the library leans on that.
class Graph {
 public:
  struct Edge {
    std::string id;
    int source;
    int range;

    bool operator==(const Edge&) const = default;
  };

  Graph() = default;

  static Graph make(std::vector<std::string> vertices,
                    std::vector<EdgeSpec> edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (auto why = identifier_problem(vertices[i])) {
        throw Error("vertex '" + vertices[i] + "': " + *why);
      }
      if (i > 0 && vertices[i] == vertices[i - 1]) {
        throw Error("duplicate vertex '" + vertices[i] + "'");
      }
    }
    g.vertices_ = std::move(vertices);

    std::sort(edges.begin(), edges.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    g.edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const EdgeSpec& e = edges[i];
      if (auto why = identifier_problem(e.id)) {
        throw Error("edge '" + e.id + "': " + *why);
      }
      if (i > 0 && e.id == edges[i - 1].id) {
        throw Error("duplicate edge '" + e.id + "'");
      }
      if (g.find_vertex(e.id)) {
        throw Error("edge '" + e.id + "' reuses a vertex identifier");
      }
      auto src = g.find_vertex(e.source);
      if (!src) {
        throw Error("edge '" + e.id + "': unknown source vertex '" + e.source +
                    "'");
      }
      auto rng = g.find_vertex(e.range);
      if (!rng) {
        throw Error("edge '" + e.id + "': unknown range vertex '" + e.range +
                    "'");
      }
      g.edges_.push_back(Edge{e.id, *src, *rng});
    }

    g.out_.assign(g.vertices_.size(), {});
    g.in_.assign(g.vertices_.size(), {});
    for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
      g.out_[g.edges_[i].source].push_back(i);
      g.in_[g.edges_[i].range].push_back(i);
    }
    return g;
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& vertex_id(int v) const { return vertices_.at(v); }
  const std::string& edge_id(int e) const { return edges_.at(e).id; }
  int edge_source(int e) const { return edges_.at(e).source; }
  int edge_range(int e) const { return edges_.at(e).range; }

  std::optional<int> find_vertex(const std::string& id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id) {
      return std::nullopt;
    }
    return static_cast<int>(it - vertices_.begin());
  }

  std::optional<int> find_edge(const std::string& id) const {
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), id,
        [](const Edge& e, const std::string& s) { return e.id < s; });
    if (it == edges_.end() || it->id != id) {
      return std::nullopt;
    }
    return static_cast<int>(it - edges_.begin());
  }

  int require_vertex(const std::string& id) const {
    if (auto v = find_vertex(id)) {
      return *v;
    }
    throw Error("unknown vertex '" + id + "'");
  }

  int require_edge(const std::string& id) const {
    if (auto e = find_edge(id)) {
      return *e;
    }
    throw Error("unknown edge '" + id + "'");
  }

  // Edge indices leaving / entering a vertex, ascending.
  const std::vector<int>& out_edges(int v) const { return out_.at(v); }
  const std::vector<int>& in_edges(int v) const { return in_.at(v); }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Line-oriented format:
//   vertex <id>
//   edge <id> <source-vertex-id> <range-vertex-id>
// '#' starts a comment, blank lines are ignored.  Endpoints may be declared
// after the edges that use them; errors still point at the offending line.
inline Graph parse_graph(std::istream& in) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<int> edge_lines;
  std::vector<std::pair<std::string, int>> seen;  // id -> line, for duplicates

  auto fail = [](int line, const std::string& what) {
    throw Error("line " + std::to_string(line) + ": " + what);
  };

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream tok(raw);
    std::vector<std::string> words;
    std::string w;
    while (tok >> w) {
      words.push_back(w);
    }
    if (words.empty()) {
      continue;
    }
    if (words[0] == "vertex") {
      if (words.size() != 2) {
        fail(line, "expected 'vertex <id>'");
      }
      if (auto why = identifier_problem(words[1])) {
        fail(line, *why);
      }
      vertices.push_back(words[1]);
      seen.emplace_back(words[1], line);
    } else if (words[0] == "edge") {
      if (words.size() != 4) {
        fail(line, "expected 'edge <id> <source> <range>'");
      }
      if (auto why = identifier_problem(words[1])) {
        fail(line, *why);
      }
      edges.push_back(EdgeSpec{words[1], words[2], words[3]});
      edge_lines.push_back(line);
      seen.emplace_back(words[1], line);
    } else {
      fail(line, "unknown directive '" + words[0] + "'");
    }
  }

  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      fail(std::max(seen[i].second, seen[i - 1].second),
           "identifier '" + seen[i].first + "' already declared on line " +
               std::to_string(std::min(seen[i].second, seen[i - 1].second)));
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const std::string* end : {&edges[i].source, &edges[i].range}) {
      if (std::find(vertices.begin(), vertices.end(), *end) ==
          vertices.end()) {
        fail(edge_lines[i], "edge '" + edges[i].id + "': unknown vertex '" +
                                *end + "'");
      }
    }
  }
  return Graph::make(std::move(vertices), std::move(edges));
}

inline Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline Graph load_graph_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) {
    throw Error("cannot open graph file '" + filename + "'");
  }
  return parse_graph(in);
}

// Vertices reachable from `start` by directed paths (including `start`).
inline std::vector<bool> reachable_from(const Graph& g, int start) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.out_edges(v)) {
      int w = g.edge_range(e);
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Vertices that reach `target` by directed paths (including `target`).
inline std::vector<bool> reaching(const Graph& g, int target) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{target};
  seen[target] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.in_edges(v)) {
      int w = g.edge_source(e);
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// True iff every ordered vertex pair is joined by a path.  The empty graph
// and single-vertex graphs qualify vacuously.
inline bool is_strongly_connected(const Graph& g) {
  if (g.vertex_count() == 0) {
    return true;
  }
  auto fwd = reachable_from(g, 0);
  auto bwd = reaching(g, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!fwd[v] || !bwd[v]) {
      return false;
    }
  }
  return true;
}

// True iff some edge closes back on itself: an edge v->w with w reaching v.
inline bool has_cycle(const Graph& g) {
  for (int e = 0; e < g.edge_count(); ++e) {
    if (reachable_from(g, g.edge_range(e))[g.edge_source(e)]) {
      return true;
    }
  }
  return false;
}

// G(E) is infinite exactly when E has a cycle: a cycle pumps out arbitrarily
// long paths, while an acyclic finite graph has finitely many paths and hence
// finitely many normal forms.
inline bool gis_is_infinite(const Graph& g) { return has_cycle(g); }

// Maximal subgraphs connected when edge direction is ignored, ordered by
// least vertex identifier.  Vertex and edge sets partition the input.
inline std::vector<Graph> weakly_connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) {
    parent[v] = v;
  }
  auto find = [&parent](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    parent[find(g.edge_source(e))] = find(g.edge_range(e));
  }

  std::vector<Graph> components;
  std::vector<int> root_slot(n, -1);
  std::vector<std::vector<std::string>> vertex_sets;
  std::vector<std::vector<EdgeSpec>> edge_sets;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (root_slot[r] < 0) {
      root_slot[r] = static_cast<int>(vertex_sets.size());
      vertex_sets.emplace_back();
      edge_sets.emplace_back();
    }
    vertex_sets[root_slot[r]].push_back(g.vertex_id(v));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    int slot = root_slot[find(g.edge_source(e))];
    edge_sets[slot].push_back(EdgeSpec{g.edge_id(e),
                                       g.vertex_id(g.edge_source(e)),
                                       g.vertex_id(g.edge_range(e))});
  }
  components.reserve(vertex_sets.size());
  for (std::size_t i = 0; i < vertex_sets.size(); ++i) {
    components.push_back(
        Graph::make(std::move(vertex_sets[i]), std::move(edge_sets[i])));
  }
  // Vertices are scanned in id order, so slot order is already by least
  // vertex identifier.
  return components;
}

}  // namespace gis

#endif  // GIS_GRAPH_HPP
