// Paths in a directed multigraph: composition, prefix structure, and the
// bounded enumerations that stand in for the infinite set Path(E).

#ifndef GIS_PATH_HPP
#define GIS_PATH_HPP

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gis/graph.hpp"

namespace gis {

// A vertex (length 0) or a composable nonempty edge sequence.  Source and
// range are cached at construction so path arithmetic never needs the graph
// again.  Equality is structural; a trivial path equals no positive-length
// path.
class Path {
 public:
  Path() = default;

  static Path trivial(const Graph& g, int vertex) {
    if (vertex < 0 || vertex >= g.vertex_count()) {
      throw Error("vertex index out of range");
    }
    return Path(vertex, vertex, {});
  }

  static Path trivial(const Graph& g, const std::string& vertex_id) {
    return trivial(g, g.require_vertex(vertex_id));
  }

  static Path from_edges(const Graph& g, std::vector<int> edges) {
    if (edges.empty()) {
      throw Error("a path needs at least one edge; use trivial() for vertices");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] < 0 || edges[i] >= g.edge_count()) {
        throw Error("edge index out of range");
      }
      if (i > 0 && g.edge_range(edges[i - 1]) != g.edge_source(edges[i])) {
        throw Error("edges '" + g.edge_id(edges[i - 1]) + "' and '" +
                    g.edge_id(edges[i]) + "' do not compose");
      }
    }
    int src = g.edge_source(edges.front());
    int rng = g.edge_range(edges.back());
    return Path(src, rng, std::move(edges));
  }

  static Path from_edge_ids(const Graph& g,
                            const std::vector<std::string>& ids) {
    std::vector<int> edges;
    edges.reserve(ids.size());
    for (const std::string& id : ids) {
      edges.push_back(g.require_edge(id));
    }
    return from_edges(g, std::move(edges));
  }

  int source() const { return source_; }
  int range() const { return range_; }
  int length() const { return static_cast<int>(edges_.size()); }
  bool is_trivial() const { return edges_.empty(); }
  const std::vector<int>& edges() const { return edges_; }

  bool operator==(const Path&) const = default;

 private:
  Path(int source, int range, std::vector<int> edges)
      : source_(source), range_(range), edges_(std::move(edges)) {}

  friend std::optional<Path> concat(const Path&, const Path&);
  friend std::optional<Path> prefix_remainder(const Path&, const Path&);
  friend std::pair<Path, Path> split_path(const Graph&, const Path&, int);

  int source_ = -1;
  int range_ = -1;
  std::vector<int> edges_;
};

// Canonical order: by length, then vertex index for trivial paths, then the
// edge sequence lexicographically.  Indices are sorted by identifier, so this
// is (length, lexicographic edge-id sequence) as seen from the outside.  This
// order is part of the public contract: it fixes generator indexing.
inline bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) {
    return a.length() < b.length();
  }
  if (a.is_trivial()) {
    return a.source() < b.source();
  }
  return a.edges() < b.edges();
}

// Defined iff r(a) = s(b); trivial paths act as identities at their vertex.
inline std::optional<Path> concat(const Path& a, const Path& b) {
  if (a.range() != b.source()) {
    return std::nullopt;
  }
  if (a.is_trivial()) {
    return b;
  }
  if (b.is_trivial()) {
    return a;
  }
  std::vector<int> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return Path(a.source(), b.range(), std::move(edges));
}

// The unique z with x = concat(p, z), or nullopt when p is not a prefix of x.
inline std::optional<Path> prefix_remainder(const Path& p, const Path& x) {
  if (p.length() > x.length()) {
    return std::nullopt;
  }
  if (p.is_trivial()) {
    return p.source() == x.source() ? std::optional<Path>(x) : std::nullopt;
  }
  if (!std::equal(p.edges().begin(), p.edges().end(), x.edges().begin())) {
    return std::nullopt;
  }
  if (p.length() == x.length()) {
    return Path(x.range(), x.range(), {});
  }
  std::vector<int> rest(x.edges().begin() + p.length(), x.edges().end());
  return Path(p.range(), x.range(), std::move(rest));
}

inline bool is_prefix(const Path& p, const Path& x) {
  return prefix_remainder(p, x).has_value();
}

// (first k edges, remaining edges) of x; both halves share the cut vertex.
inline std::pair<Path, Path> split_path(const Graph& g, const Path& x, int k) {
  assert(k >= 0 && k <= x.length());
  int mid = k == 0 ? x.source() : g.edge_range(x.edges()[k - 1]);
  Path head(x.source(), mid,
            std::vector<int>(x.edges().begin(), x.edges().begin() + k));
  Path tail(mid, k == x.length() ? mid : x.range(),
            std::vector<int>(x.edges().begin() + k, x.edges().end()));
  return {std::move(head), std::move(tail)};
}

inline std::string to_string(const Graph& g, const Path& p) {
  if (p.is_trivial()) {
    return g.vertex_id(p.source());
  }
  std::string out = "[";
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += g.edge_id(p.edges()[i]);
  }
  out += ']';
  return out;
}

// All paths of length <= max_len in canonical order.  The result has no
// duplicates and is closed under prefixes.
inline std::vector<Path> enumerate_paths(const Graph& g, int max_len) {
  std::vector<Path> all;
  std::vector<Path> level;
  for (int v = 0; v < g.vertex_count(); ++v) {
    level.push_back(Path::trivial(g, v));
  }
  all = level;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : level) {
      for (int e : g.out_edges(p.range())) {
        std::vector<int> edges = p.edges();
        edges.push_back(e);
        next.push_back(Path::from_edges(g, std::move(edges)));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.empty()) {
      break;
    }
  }
  std::sort(all.begin(), all.end(), path_less);
  return all;
}

// C^e restricted to |u| <= max_len: cycles at e plus the trivial path at e.
inline std::vector<Path> cycles_at(const Graph& g, const std::string& vertex_id,
                                   int max_len) {
  int e = g.require_vertex(vertex_id);
  std::vector<Path> result;
  for (const Path& p : enumerate_paths(g, max_len)) {
    if (p.source() == e && p.range() == e) {
      result.push_back(p);
    }
  }
  return result;
}

// True for cycles at e whose proper nonempty prefixes never return to e.
inline bool is_first_return_cycle(const Graph& g, int e, const Path& u) {
  if (u.source() != e || u.range() != e) {
    return false;
  }
  for (int i = 1; i < u.length(); ++i) {
    if (g.edge_range(u.edges()[i - 1]) == e) {
      return false;
    }
  }
  return true;
}

// C_1^e restricted to |u| <= max_len, in canonical order.  Position among the
// nontrivial entries defines the polycyclic generator index.
inline std::vector<Path> first_return_cycles_at(const Graph& g,
                                                const std::string& vertex_id,
                                                int max_len) {
  int e = g.require_vertex(vertex_id);
  std::vector<Path> result;
  for (const Path& p : cycles_at(g, vertex_id, max_len)) {
    if (p.is_trivial() || is_first_return_cycle(g, e, p)) {
      result.push_back(p);
    }
  }
  return result;
}

}  // namespace gis

#endif  // GIS_PATH_HPP
