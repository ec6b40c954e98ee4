// Independent brute-force oracles.  Everything here recomputes results from
// first principles so the library implementations have something honest to
// disagree with; none of it calls the code paths it checks.

#ifndef GIS_TESTS_ORACLES_HPP
#define GIS_TESTS_ORACLES_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "gis/element.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace oracles {

// All-pairs reachability by repeated relaxation of the edge relation.
inline std::vector<std::vector<bool>> reach_matrix(const gis::Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) {
    reach[v][v] = true;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    reach[g.edge_source(e)][g.edge_range(e)] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (reach[i][j]) {
          continue;
        }
        for (int k = 0; k < n; ++k) {
          if (reach[i][k] && reach[k][j]) {
            reach[i][j] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return reach;
}

inline bool strongly_connected(const gis::Graph& g) {
  auto reach = reach_matrix(g);
  for (const auto& row : reach) {
    for (bool cell : row) {
      if (!cell) {
        return false;
      }
    }
  }
  return true;
}

// Every composable edge sequence of length <= max_len, found by filtering
// the full cartesian product rather than walking the graph.
inline std::vector<std::vector<int>> edge_sequences(const gis::Graph& g,
                                                    int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> level{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& seq : level) {
      for (int e = 0; e < g.edge_count(); ++e) {
        if (!seq.empty() &&
            g.edge_range(seq.back()) != g.edge_source(e)) {
          continue;
        }
        auto longer = seq;
        longer.push_back(e);
        next.push_back(std::move(longer));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

inline std::vector<gis::Path> all_paths(const gis::Graph& g, int max_len) {
  std::vector<gis::Path> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.push_back(gis::Path::trivial(g, v));
  }
  for (const auto& seq : edge_sequences(g, max_len)) {
    out.push_back(gis::Path::from_edges(g, seq));
  }
  return out;
}

// { x in the window : x * a = b }, by scanning every window element.
inline std::vector<gis::GisElement> brute_solve_left(
    const gis::Graph& g, int window, const gis::GisElement& a,
    const gis::GisElement& b) {
  std::vector<gis::GisElement> out;
  for (const gis::GisElement& x : gis::enumerate_elements(g, window)) {
    if (gis::mul(x, a) == b) {
      out.push_back(x);
    }
  }
  return out;
}

inline std::vector<gis::GisElement> brute_solve_right(
    const gis::Graph& g, int window, const gis::GisElement& a,
    const gis::GisElement& b) {
  std::vector<gis::GisElement> out;
  for (const gis::GisElement& x : gis::enumerate_elements(g, window)) {
    if (gis::mul(a, x) == b) {
      out.push_back(x);
    }
  }
  return out;
}

// A window large enough to contain every solution of x*a=b: case analysis
// on the product bounds |u| by |left(b)| and |v| by |left(a)| + |right(b)|.
inline int solution_window(const gis::GisElement& a, const gis::GisElement& b) {
  return a.left().length() + a.right().length() + b.left().length() +
         b.right().length();
}

// Mutual left/right divisibility, the definitional route to L and R for
// nonzero elements.
inline bool divisible_left(const gis::Graph& g, const gis::GisElement& a,
                           const gis::GisElement& b, int window) {
  return !brute_solve_left(g, window, a, b).empty();
}

inline bool l_related(const gis::Graph& g, const gis::GisElement& a,
                      const gis::GisElement& b, int window) {
  return divisible_left(g, window, a, b) && divisible_left(g, window, b, a);
}

inline bool divisible_right(const gis::Graph& g, const gis::GisElement& a,
                            const gis::GisElement& b, int window) {
  return !brute_solve_right(g, window, a, b).empty();
}

inline bool r_related(const gis::Graph& g, const gis::GisElement& a,
                      const gis::GisElement& b, int window) {
  return divisible_right(g, window, a, b) && divisible_right(g, window, b, a);
}

// Every way to write u as a concatenation of nontrivial first-return cycles
// at e, by exhaustive search over all cut sequences.
inline std::vector<std::vector<gis::Path>> all_factorizations(
    const gis::Graph& g, int e, const gis::Path& u) {
  std::vector<std::vector<gis::Path>> out;
  if (u.is_trivial()) {
    out.push_back({});
    return out;
  }
  struct Frame {
    int consumed;
    std::vector<gis::Path> factors;
  };
  std::vector<Frame> stack{{0, {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.consumed == u.length()) {
      out.push_back(f.factors);
      continue;
    }
    for (int cut = f.consumed + 1; cut <= u.length(); ++cut) {
      std::vector<int> seg(u.edges().begin() + f.consumed,
                           u.edges().begin() + cut);
      gis::Path candidate = gis::Path::from_edges(g, seg);
      if (candidate.source() != e || candidate.range() != e) {
        continue;
      }
      if (!gis::is_first_return_cycle(g, e, candidate)) {
        continue;
      }
      Frame next = f;
      next.consumed = cut;
      next.factors.push_back(candidate);
      stack.push_back(std::move(next));
    }
  }
  return out;
}

// The classical two-counter product on pairs (m, n) standing for q^m p^n.
inline std::pair<int, int> bicyclic_mul(std::pair<int, int> a,
                                        std::pair<int, int> b) {
  int t = std::max(a.second, b.first);
  return {a.first - a.second + t, b.second - b.first + t};
}

}  // namespace oracles

#endif  // GIS_TESTS_ORACLES_HPP
