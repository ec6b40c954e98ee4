#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>

#include "gis/graph.hpp"
#include "gis/path.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using gis::Graph;

TEST_CASE("graph file parsing accepts the documented format") {
  Graph g = gis::parse_graph_text(
      "# a comment\n"
      "vertex v0\n"
      "\n"
      "vertex v1   # trailing comment\n"
      "edge x v0 v1\n"
      "edge y v1 v0\n"
      "edge z v1 v0\n");
  REQUIRE(g.vertex_count() == 2);
  REQUIRE(g.edge_count() == 3);
  REQUIRE(g == corpus::poly2());
}

TEST_CASE("edges may be declared before their endpoints") {
  Graph g = gis::parse_graph_text("edge x v0 v1\nvertex v1\nvertex v0\n");
  REQUIRE(g == corpus::single_edge());
}

TEST_CASE("parse errors carry line numbers") {
  auto message = [](const std::string& text) {
    try {
      gis::parse_graph_text(text);
    } catch (const gis::Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK_THAT(message("vertex a\nfrobnicate b\n"),
             Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THAT(message("vertex a\nvertex a\n"),
             Catch::Matchers::ContainsSubstring("already declared on line 1"));
  CHECK_THAT(message("vertex a\nedge p a\n"),
             Catch::Matchers::ContainsSubstring("expected 'edge"));
  CHECK_THAT(message("vertex a\nedge p a missing\n"),
             Catch::Matchers::ContainsSubstring("unknown vertex 'missing'"));
  CHECK_THAT(message("vertex a\nedge a a a\n"),
             Catch::Matchers::ContainsSubstring("already declared"));
  CHECK_THAT(message("vertex a|b\n"),
             Catch::Matchers::ContainsSubstring("reserved"));
}

TEST_CASE("strong connectivity on the corpus") {
  CHECK(gis::is_strongly_connected(corpus::single_loop()));
  CHECK(gis::is_strongly_connected(corpus::poly2()));
  CHECK_FALSE(gis::is_strongly_connected(corpus::single_edge()));
  CHECK_FALSE(gis::is_strongly_connected(corpus::two_loops()));
  CHECK(gis::is_strongly_connected(corpus::empty()));
  CHECK(gis::is_strongly_connected(corpus::single_vertex()));
}

TEST_CASE("strong connectivity agrees with brute-force reachability") {
  auto graphs = corpus::all();
  graphs.push_back(corpus::bridged_loops());
  graphs.push_back(corpus::pendant_loop());
  for (const Graph& g : graphs) {
    CAPTURE(g.vertex_count(), g.edge_count());
    CHECK(gis::is_strongly_connected(g) == oracles::strongly_connected(g));
  }
}

TEST_CASE("weakly connected components partition the graph") {
  SECTION("two isolated loops") {
    auto parts = gis::weakly_connected_components(corpus::two_loops());
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == corpus::single_loop());  // vertex a, loop p
    CHECK(parts[1] == Graph::make({"b"}, {{"q", "b", "b"}}));
  }
  SECTION("a single edge is one component") {
    CHECK(gis::weakly_connected_components(corpus::single_edge()).size() == 1);
  }
  SECTION("empty graph has no components") {
    CHECK(gis::weakly_connected_components(corpus::empty()).empty());
  }
  SECTION("vertex and edge sets partition the input") {
    auto graphs = corpus::all();
    graphs.push_back(corpus::bridged_loops());
    for (const Graph& g : graphs) {
      std::set<std::string> vertices;
      std::set<std::string> edges;
      std::size_t vertex_total = 0;
      std::size_t edge_total = 0;
      for (const Graph& c : gis::weakly_connected_components(g)) {
        for (const auto& v : c.vertex_ids()) {
          vertices.insert(v);
        }
        for (const auto& e : c.edges()) {
          edges.insert(e.id);
          // Edge endpoints live in the same component.
          CHECK(c.find_vertex(g.vertex_id(g.edge_source(*g.find_edge(e.id)))));
        }
        vertex_total += c.vertex_ids().size();
        edge_total += c.edges().size();
      }
      CHECK(vertex_total == static_cast<std::size_t>(g.vertex_count()));
      CHECK(edge_total == static_cast<std::size_t>(g.edge_count()));
      CHECK(vertices.size() == vertex_total);
      CHECK(edges.size() == edge_total);
    }
  }
  SECTION("strong connectivity implies a single component") {
    for (const Graph& g : corpus::all()) {
      if (g.vertex_count() > 0 && gis::is_strongly_connected(g)) {
        CHECK(gis::weakly_connected_components(g).size() == 1);
      }
    }
  }
}

TEST_CASE("cycle detection") {
  CHECK(gis::has_cycle(corpus::single_loop()));
  CHECK_FALSE(gis::has_cycle(corpus::single_edge()));
  CHECK(gis::has_cycle(
      Graph::make({"v0", "v1"}, {{"x", "v0", "v1"}, {"y", "v1", "v0"}})));
  CHECK_FALSE(gis::has_cycle(corpus::empty()));
}

TEST_CASE("infiniteness of the semigroup") {
  // A loop keeps generating longer paths.
  auto loop_paths = gis::enumerate_paths(corpus::single_loop(), 3);
  CHECK(loop_paths.size() == 4);  // a, p, pp, ppp all distinct
  CHECK(gis::gis_is_infinite(corpus::single_loop()));

  // The single-edge graph stops growing: same elements at every window.
  CHECK_FALSE(gis::gis_is_infinite(corpus::single_edge()));
  CHECK(gis::enumerate_paths(corpus::single_edge(), 1) ==
        gis::enumerate_paths(corpus::single_edge(), 5));

  CHECK_FALSE(gis::gis_is_infinite(corpus::empty()));

  for (const Graph& g : corpus::all()) {
    CHECK(gis::gis_is_infinite(g) == gis::has_cycle(g));
  }
}
