// Small graphs shared across the test suites.  These mirror the files under
// graphs/ so library-level tests need no filesystem access.

#ifndef GIS_TESTS_CORPUS_HPP
#define GIS_TESTS_CORPUS_HPP

#include <vector>

#include "gis/graph.hpp"

namespace corpus {

inline gis::Graph empty() { return gis::Graph::make({}, {}); }

inline gis::Graph single_vertex() { return gis::Graph::make({"a"}, {}); }

inline gis::Graph single_edge() {
  return gis::Graph::make({"v0", "v1"}, {{"x", "v0", "v1"}});
}

inline gis::Graph single_loop() {
  return gis::Graph::make({"a"}, {{"p", "a", "a"}});
}

// One edge forward, two parallel edges back: exactly two first-return
// cycles at v0.
inline gis::Graph poly2() {
  return gis::Graph::make(
      {"v0", "v1"},
      {{"x", "v0", "v1"}, {"y", "v1", "v0"}, {"z", "v1", "v0"}});
}

inline gis::Graph two_loops() {
  return gis::Graph::make({"a", "b"}, {{"p", "a", "a"}, {"q", "b", "b"}});
}

inline gis::Graph loop_edge() {
  return gis::Graph::make({"v0", "v2", "v3"},
                          {{"p", "v0", "v0"}, {"x", "v2", "v3"}});
}

inline gis::Graph bridged_loops() {
  return gis::Graph::make(
      {"v0", "v1"},
      {{"l0", "v0", "v0"}, {"l1", "v1", "v1"}, {"b", "v0", "v1"}});
}

// Loop hanging off a strongly connected pair: infinitely many first-return
// cycles at e, finitely many at a.
inline gis::Graph pendant_loop() {
  return gis::Graph::make(
      {"a", "e"}, {{"l", "a", "a"}, {"x", "e", "a"}, {"y", "a", "e"}});
}

// The seven graphs named by the acceptance suite.
inline std::vector<gis::Graph> all() {
  return {empty(),     single_vertex(), single_edge(), single_loop(),
          poly2(),     two_loops(),     loop_edge()};
}

}  // namespace corpus

#endif  // GIS_TESTS_CORPUS_HPP
