// Bounded witness search for the length-increasing left-multiplier condition
// on path families, and the dichotomy classifier built from decidable graph
// properties.

#ifndef GIS_STAR_HPP
#define GIS_STAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "gis/element.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace gis {

// mu = a b^-1 with |a| > |b|, together with the members of A that b
// prefixes: for each such x, mu * x is again a path and strictly longer.
struct StarWitness {
  GisElement mu;
  std::vector<Path> subset;
  std::vector<Path> images;
};

// Searches mu = a b^-1 with |a| <= mu_window and |b| < |a|.  Candidates with
// a nonempty b are tried first, then the trivial-b fallback; within each pass
// (a, b) run in canonical path order and the first candidate prefixing at
// least k members of A wins.  A miss refutes nothing beyond this window and
// this A.
inline std::optional<StarWitness> star_witness_search(
    const Graph& g, const std::vector<Path>& paths, int k, int mu_window) {
  if (k < 1) {
    throw Error("witness subset size k must be at least 1");
  }
  std::vector<Path> candidates = enumerate_paths(g, mu_window);
  for (bool nontrivial_b : {true, false}) {
    for (const Path& a : candidates) {
      if (a.is_trivial()) {
        continue;
      }
      for (const Path& b : candidates) {
        if (b.length() >= a.length()) {
          break;  // canonical order is by length first
        }
        if (b.is_trivial() == nontrivial_b || b.range() != a.range()) {
          continue;
        }
        StarWitness w;
        w.mu = GisElement::pair(a, b);
        for (const Path& x : paths) {
          if (auto rest = prefix_remainder(b, x)) {
            auto image = concat(a, *rest);
            w.subset.push_back(x);
            w.images.push_back(*image);
          }
        }
        if (static_cast<int>(w.subset.size()) >= k) {
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

// The sufficient criterion: an infinite semigroup over a strongly connected
// graph qualifies; a finite semigroup qualifies vacuously (there is no
// infinite path family at all).  `sufficient == false` means "not
// established", never a refutation.
struct StarSufficiency {
  bool sufficient = false;
  bool vacuous = false;
};

inline StarSufficiency star_sufficient(const Graph& g) {
  if (!gis_is_infinite(g)) {
    return {true, true};
  }
  if (is_strongly_connected(g)) {
    return {true, false};
  }
  return {false, false};
}

enum class Outcome { Holds, Fails, Unknown };

inline std::string outcome_tag(Outcome o) {
  switch (o) {
    case Outcome::Holds:
      return "holds";
    case Outcome::Fails:
      return "fails";
    case Outcome::Unknown:
      return "unknown";
  }
  return "?";
}

struct Reason {
  std::string code;
  std::string text;
};

struct ComponentReport {
  Graph component;
  bool strongly_connected = false;
  bool infinite_gis = false;

  // Components are named by their least vertex.
  const std::string& name() const { return component.vertex_ids().front(); }
};

struct StarProbeReport {
  int a_max_len = 0;
  int k = 0;
  int mu_window = 0;
  std::size_t a_size = 0;
  std::optional<StarWitness> witness;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::vector<Reason> reasons;
  std::vector<ComponentReport> components;
  std::vector<std::string> witness_components;  // exactly two for Fails
  StarSufficiency star;
  std::optional<StarProbeReport> probe;
};

inline int verdict_exit_code(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::Holds:
      return 0;
    case Outcome::Fails:
      return 10;
    case Outcome::Unknown:
      return 20;
  }
  return 2;
}

struct ClassifyOptions {
  int probe_a_max_len = 6;
  int probe_k = 5;
  int probe_mu_window = 6;
};

// Decision procedure over the weakly connected components:
//   no infinite component          -> Holds / FINITE
//   two or more infinite           -> Fails / PROP1_DECOMPOSITION
//   one infinite, strongly conn.   -> Holds / MAIN_THEOREM
//                                     (+ GENERALIZATION_REMARK with company)
//   one infinite, not strongly c.  -> Unknown / OPEN_QUESTION
inline Verdict classify_dichotomy(const Graph& g,
                                  const ClassifyOptions& options = {}) {
  Verdict v;
  v.star = star_sufficient(g);
  std::vector<int> infinite;
  for (Graph& c : weakly_connected_components(g)) {
    ComponentReport r;
    r.strongly_connected = is_strongly_connected(c);
    r.infinite_gis = gis_is_infinite(c);
    r.component = std::move(c);
    if (r.infinite_gis) {
      infinite.push_back(static_cast<int>(v.components.size()));
    }
    v.components.push_back(std::move(r));
  }

  if (infinite.empty()) {
    v.outcome = Outcome::Holds;
    v.reasons.push_back(
        {"FINITE",
         "the semigroup is finite; its only Hausdorff topology is discrete, "
         "which is also compact here"});
    return v;
  }
  if (infinite.size() >= 2) {
    v.outcome = Outcome::Fails;
    v.reasons.push_back(
        {"PROP1_DECOMPOSITION",
         "two disjoint components each generate an infinite semigroup, which "
         "admits a locally compact topology that is neither compact nor "
         "discrete"});
    v.witness_components.push_back(v.components[infinite[0]].name());
    v.witness_components.push_back(v.components[infinite[1]].name());
    return v;
  }
  const ComponentReport& core = v.components[infinite.front()];
  if (core.strongly_connected) {
    v.outcome = Outcome::Holds;
    v.reasons.push_back(
        {"MAIN_THEOREM",
         "the unique infinite-semigroup component is strongly connected with "
         "finitely many vertices, so every locally compact shift-continuous "
         "topology is compact or discrete"});
    if (v.components.size() > 1) {
      v.reasons.push_back(
          {"GENERALIZATION_REMARK",
           "all other components contribute only finitely many elements and "
           "do not disturb the dichotomy"});
    }
    return v;
  }
  v.outcome = Outcome::Unknown;
  v.reasons.push_back(
      {"OPEN_QUESTION",
       "a single infinite-semigroup component that is not strongly "
       "connected; no implemented criterion decides the dichotomy"});
  StarProbeReport probe;
  probe.a_max_len = options.probe_a_max_len;
  probe.k = options.probe_k;
  probe.mu_window = options.probe_mu_window;
  std::vector<Path> family = enumerate_paths(g, options.probe_a_max_len);
  probe.a_size = family.size();
  probe.witness =
      star_witness_search(g, family, options.probe_k, options.probe_mu_window);
  v.probe = probe;
  return v;
}

}  // namespace gis

#endif  // GIS_STAR_HPP
