// The local submonoid of cycles at a vertex: unique factorization into
// first-return cycles, the polycyclic monoid model, and the explicit
// isomorphism between the two, checked exhaustively on finite windows.

#ifndef GIS_CYCLE_MONOID_HPP
#define GIS_CYCLE_MONOID_HPP

#include <cassert>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gis/element.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace gis {

// Normal form in the polycyclic monoid: zero, or p_{left} * (p_{right})^-1
// for finite words over generator indices.  The identity is the pair of
// empty words.
struct PolyElement {
  bool is_zero = false;
  std::vector<int> left;
  std::vector<int> right;

  static PolyElement zero() { return PolyElement{true, {}, {}}; }
  static PolyElement one() { return PolyElement{}; }
  bool is_one() const { return !is_zero && left.empty() && right.empty(); }

  bool operator==(const PolyElement&) const = default;
  bool operator<(const PolyElement& o) const {
    return std::tie(is_zero, left, right) <
           std::tie(o.is_zero, o.left, o.right);
  }
};

namespace detail {

inline bool word_prefix(const std::vector<int>& p, const std::vector<int>& w,
                        std::vector<int>* rest) {
  if (p.size() > w.size()) {
    return false;
  }
  if (!std::equal(p.begin(), p.end(), w.begin())) {
    return false;
  }
  rest->assign(w.begin() + p.size(), w.end());
  return true;
}

// The product formula without the generator-index bound check.
inline PolyElement poly_mul_unchecked(const PolyElement& a,
                                      const PolyElement& b) {
  if (a.is_zero || b.is_zero) {
    return PolyElement::zero();
  }
  std::vector<int> w;
  if (word_prefix(a.right, b.left, &w)) {
    PolyElement out;
    out.left = a.left;
    out.left.insert(out.left.end(), w.begin(), w.end());
    out.right = b.right;
    return out;
  }
  if (word_prefix(b.left, a.right, &w)) {
    PolyElement out;
    out.left = a.left;
    out.right = b.right;
    out.right.insert(out.right.end(), w.begin(), w.end());
    return out;
  }
  return PolyElement::zero();
}

}  // namespace detail

// Normal-form product in the lambda-polycyclic monoid: generator inverses
// cancel on exact index match and annihilate otherwise.
inline PolyElement poly_mul(const PolyElement& a, const PolyElement& b,
                            int lambda) {
  for (const PolyElement* e : {&a, &b}) {
    for (const std::vector<int>* word : {&e->left, &e->right}) {
      for (int i : *word) {
        if (i < 0 || i >= lambda) {
          throw Error("generator index " + std::to_string(i) +
                      " out of range for lambda = " + std::to_string(lambda));
        }
      }
    }
  }
  return detail::poly_mul_unchecked(a, b);
}

inline PolyElement poly_inv(const PolyElement& a) {
  if (a.is_zero) {
    return a;
  }
  return PolyElement{false, a.right, a.left};
}

// Rendering: "1" for the identity, "0" for zero, otherwise the generator
// product with the inverted block on the right, e.g. "p0 p1 . (p1)^-1 (p0)^-1".
inline std::string to_string(const PolyElement& a) {
  if (a.is_zero) {
    return "0";
  }
  if (a.is_one()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < a.left.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += "p" + std::to_string(a.left[i]);
  }
  if (!a.left.empty() && !a.right.empty()) {
    out += " . ";
  }
  for (std::size_t i = a.right.size(); i-- > 0;) {
    out += "(p" + std::to_string(a.right[i]) + ")^-1";
    if (i > 0) {
      out += ' ';
    }
  }
  return out;
}

// The unique factorization of a cycle at e into nontrivial first-return
// cycles: cut wherever the running prefix returns to e.  Trivial input
// factors as the empty sequence.
inline std::vector<Path> factor_cycle(const Graph& g,
                                      const std::string& vertex_id,
                                      const Path& u) {
  int e = g.require_vertex(vertex_id);
  if (u.source() != e || u.range() != e) {
    throw Error("path is not a cycle at vertex '" + vertex_id + "'");
  }
  std::vector<Path> factors;
  int start = 0;
  for (int i = 1; i <= u.length(); ++i) {
    if (g.edge_range(u.edges()[i - 1]) == e) {
      std::vector<int> segment(u.edges().begin() + start,
                               u.edges().begin() + i);
      Path factor = Path::from_edges(g, std::move(segment));
      if (!is_first_return_cycle(g, e, factor)) {
        throw Error("internal error: factor segment is not first-return");
      }
      factors.push_back(std::move(factor));
      start = i;
    }
  }
  if (start != u.length()) {
    // The tail never returned to e, so u was not a cycle; unreachable given
    // the range check above.
    throw Error("internal error: cycle factorization left a remainder");
  }
  return factors;
}

enum class MonoidKind { Trivial, Bicyclic, Polycyclic };

// What the cycles at one vertex generate.  lambda counts the nontrivial
// first-return cycles; when that count is infinite the generator list is a
// window sample and `truncated` is set.
struct CycleMonoidType {
  MonoidKind kind = MonoidKind::Trivial;
  bool lambda_finite = true;
  std::size_t lambda = 0;
  std::vector<Path> generators;
  bool truncated = false;
};

inline std::string to_string(const CycleMonoidType& t) {
  switch (t.kind) {
    case MonoidKind::Trivial:
      return "Trivial";
    case MonoidKind::Bicyclic:
      return "Bicyclic";
    case MonoidKind::Polycyclic:
      return t.lambda_finite ? "Polycyclic(" + std::to_string(t.lambda) + ")"
                             : "Polycyclic(inf)";
  }
  return "?";
}

namespace detail {

// Cycle detection restricted to an induced vertex subset.
inline bool induced_has_cycle(const Graph& g, const std::vector<bool>& keep) {
  for (int e = 0; e < g.edge_count(); ++e) {
    int s = g.edge_source(e);
    int r = g.edge_range(e);
    if (!keep[s] || !keep[r]) {
      continue;
    }
    // Is there a path r -> s staying inside keep?
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> stack{r};
    seen[r] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int f : g.out_edges(v)) {
        int w = g.edge_range(f);
        if (keep[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (seen[s]) {
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Classifies <C^e>.  Whether any cycle passes through e, and whether the
// generator count is finite, are decided on the graph itself; the window
// only limits the sample of generators reported in the infinite case.
inline CycleMonoidType cycle_monoid_type(const Graph& g,
                                         const std::string& vertex_id,
                                         int window) {
  int e = g.require_vertex(vertex_id);
  CycleMonoidType t;

  auto to_e = reaching(g, e);
  bool cycle_through_e = false;
  for (int f : g.out_edges(e)) {
    if (to_e[g.edge_range(f)]) {
      cycle_through_e = true;
      break;
    }
  }
  if (!cycle_through_e) {
    return t;  // Trivial
  }

  // The strongly connected patch around e; every first-return cycle lives
  // inside it.
  auto from_e = reachable_from(g, e);
  std::vector<bool> patch(g.vertex_count(), false);
  int patch_size = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    patch[v] = from_e[v] && to_e[v];
    patch_size += patch[v] ? 1 : 0;
  }
  std::vector<bool> patch_minus_e = patch;
  patch_minus_e[e] = false;

  if (!detail::induced_has_cycle(g, patch_minus_e)) {
    // No cycle avoids e, so first-return cycles cannot revisit an
    // intermediate vertex: their length is at most the patch size.
    t.lambda_finite = true;
    for (const Path& u : first_return_cycles_at(g, vertex_id, patch_size)) {
      if (!u.is_trivial()) {
        t.generators.push_back(u);
      }
    }
    t.lambda = t.generators.size();
    t.kind = t.lambda == 1 ? MonoidKind::Bicyclic : MonoidKind::Polycyclic;
    return t;
  }

  t.kind = MonoidKind::Polycyclic;
  t.lambda_finite = false;
  t.truncated = true;
  for (const Path& u : first_return_cycles_at(g, vertex_id, window)) {
    if (!u.is_trivial()) {
      t.generators.push_back(u);
    }
  }
  t.lambda = t.generators.size();  // lower bound within the window
  return t;
}

namespace detail {

// Ranks of nontrivial first-return cycles in enumeration order; stable under
// enlarging the length bound, so ranks computed per-need are global.
inline int generator_index(const Graph& g, const std::string& vertex_id,
                           const Path& cycle) {
  int rank = 0;
  for (const Path& u : first_return_cycles_at(g, vertex_id, cycle.length())) {
    if (u.is_trivial()) {
      continue;
    }
    if (u == cycle) {
      return rank;
    }
    ++rank;
  }
  throw Error("internal error: factor is not a first-return cycle");
}

inline std::vector<int> factor_word(const Graph& g,
                                    const std::string& vertex_id,
                                    const Path& u) {
  std::vector<int> word;
  for (const Path& factor : factor_cycle(g, vertex_id, u)) {
    word.push_back(generator_index(g, vertex_id, factor));
  }
  return word;
}

}  // namespace detail

// The isomorphism f from <C^e> onto the polycyclic model: factor both paths
// and replace each first-return cycle by its generator index.
inline PolyElement iso_to_polycyclic(const Graph& g,
                                     const std::string& vertex_id,
                                     const GisElement& a) {
  if (a.is_zero()) {
    return PolyElement::zero();
  }
  int e = g.require_vertex(vertex_id);
  for (const Path* p : {&a.left(), &a.right()}) {
    if (p->source() != e || p->range() != e) {
      throw Error("element is not in the cycle submonoid at '" + vertex_id +
                  "'");
    }
  }
  PolyElement out;
  out.left = detail::factor_word(g, vertex_id, a.left());
  out.right = detail::factor_word(g, vertex_id, a.right());
  return out;
}

// The inverse map: spell each index back as its first-return cycle and
// concatenate.  Indices must be realized by some cycle of length <= max_len.
inline GisElement iso_preimage(const Graph& g, const std::string& vertex_id,
                               const PolyElement& a, int max_len) {
  if (a.is_zero) {
    return GisElement::zero();
  }
  int e = g.require_vertex(vertex_id);
  std::vector<Path> gens;
  for (const Path& u : first_return_cycles_at(g, vertex_id, max_len)) {
    if (!u.is_trivial()) {
      gens.push_back(u);
    }
  }
  auto spell = [&](const std::vector<int>& word) {
    Path p = Path::trivial(g, e);
    for (int i : word) {
      if (i < 0 || i >= static_cast<int>(gens.size())) {
        throw Error("generator index " + std::to_string(i) +
                    " not realized within max_len " + std::to_string(max_len));
      }
      auto q = concat(p, gens[i]);
      assert(q.has_value());
      p = *q;
    }
    return p;
  };
  return GisElement::pair(spell(a.left), spell(a.right));
}

struct IsoReport {
  std::size_t elements = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;  // product paths left the window
  std::size_t hom_failures = 0;
  std::size_t inv_failures = 0;
  std::size_t injectivity_collisions = 0;
  std::optional<std::string> counterexample;
};

// Exhaustive window check of the isomorphism: f(ab) = f(a)f(b),
// f(a^-1) = f(a)^-1, and injectivity over all elements of <C^e> whose cycle
// lengths fit the window.  Pairs whose product leaves the window are skipped
// and counted.
inline IsoReport verify_iso_window(const Graph& g, const std::string& vertex_id,
                                   int window) {
  IsoReport report;
  std::vector<Path> cycles = cycles_at(g, vertex_id, window);
  std::vector<GisElement> elems{GisElement::zero()};
  for (const Path& u : cycles) {
    for (const Path& v : cycles) {
      elems.push_back(GisElement::pair(u, v));
    }
  }
  report.elements = elems.size();

  std::vector<PolyElement> images;
  images.reserve(elems.size());
  for (const GisElement& a : elems) {
    images.push_back(iso_to_polycyclic(g, vertex_id, a));
  }

  std::map<PolyElement, std::size_t> seen;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto [it, fresh] = seen.emplace(images[i], i);
    if (!fresh) {
      ++report.injectivity_collisions;
      if (!report.counterexample) {
        report.counterexample = "f(" + to_string(g, elems[it->second]) +
                                ") = f(" + to_string(g, elems[i]) + ")";
      }
    }
    if (iso_to_polycyclic(g, vertex_id, inv(elems[i])) !=
        poly_inv(images[i])) {
      ++report.inv_failures;
    }
  }

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      GisElement product = mul(elems[i], elems[j]);
      if (!product.is_zero() && (product.left().length() > window ||
                                 product.right().length() > window)) {
        ++report.pairs_skipped;
        continue;
      }
      ++report.pairs_checked;
      PolyElement expected = iso_to_polycyclic(g, vertex_id, product);
      PolyElement got = detail::poly_mul_unchecked(images[i], images[j]);
      if (expected != got) {
        ++report.hom_failures;
        if (!report.counterexample) {
          report.counterexample = "f(" + to_string(g, elems[i]) + " * " +
                                  to_string(g, elems[j]) +
                                  ") != f(a) f(b)";
        }
      }
    }
  }
  return report;
}

}  // namespace gis

#endif  // GIS_CYCLE_MONOID_HPP
