// Elements of the graph inverse semigroup G(E) in normal form, with the
// prefix-cancellation product, Green's relations, and exact division solvers.

#ifndef GIS_ELEMENT_HPP
#define GIS_ELEMENT_HPP

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace gis {

// Zero, or a pair of paths (left, right) with equal range, read as
// left * right^-1.  The normal form is the only representation: the
// multiplication below never produces anything else.
class GisElement {
 public:
  GisElement() = default;  // zero

  static GisElement zero() { return GisElement(); }

  static GisElement pair(Path left, Path right) {
    if (left.range() != right.range()) {
      throw Error("element paths must share their range vertex");
    }
    GisElement a;
    a.parts_.emplace(std::move(left), std::move(right));
    return a;
  }

  // The embedding of a path p as the element p * r(p)^-1.
  static GisElement path(const Graph& g, const Path& p) {
    return pair(p, Path::trivial(g, p.range()));
  }

  static GisElement vertex(const Graph& g, const std::string& id) {
    Path t = Path::trivial(g, id);
    return pair(t, t);
  }

  static GisElement edge(const Graph& g, const std::string& id) {
    return path(g, Path::from_edge_ids(g, {id}));
  }

  static GisElement edge_inverse(const Graph& g, const std::string& id) {
    Path p = Path::from_edge_ids(g, {id});
    return pair(Path::trivial(g, p.range()), p);
  }

  bool is_zero() const { return !parts_.has_value(); }
  const Path& left() const { return parts_->first; }
  const Path& right() const { return parts_->second; }

  bool operator==(const GisElement&) const = default;

 private:
  std::optional<std::pair<Path, Path>> parts_;
};

// Zero first, then by (left, right) in canonical path order.
inline bool element_less(const GisElement& a, const GisElement& b) {
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() && !b.is_zero();
  }
  if (a.left() != b.left()) {
    return path_less(a.left(), b.left());
  }
  return path_less(a.right(), b.right());
}

// u1 v1^-1 * u2 v2^-1 is u1 w v2^-1 when u2 = v1 w, u1 (v2 w)^-1 when
// v1 = u2 w, and zero otherwise.  Both cases apply exactly when u2 = v1,
// where they agree; the first is taken.
inline GisElement mul(const GisElement& a, const GisElement& b) {
  if (a.is_zero() || b.is_zero()) {
    return GisElement::zero();
  }
  if (auto w = prefix_remainder(a.right(), b.left())) {
    auto product = concat(a.left(), *w);
    assert(product.has_value());
#ifndef NDEBUG
    if (a.right() == b.left()) {
      // Overlap case: the second branch applies too and must agree.
      auto w2 = prefix_remainder(b.left(), a.right());
      auto extended = concat(b.right(), *w2);
      assert(*product == a.left() && *extended == b.right());
    }
#endif
    return GisElement::pair(*product, b.right());
  }
  if (auto w = prefix_remainder(b.left(), a.right())) {
    auto extended = concat(b.right(), *w);
    assert(extended.has_value());
    return GisElement::pair(a.left(), *extended);
  }
  return GisElement::zero();
}

inline GisElement inv(const GisElement& a) {
  if (a.is_zero()) {
    return a;
  }
  return GisElement::pair(a.right(), a.left());
}

// Idempotents are exactly zero and the elements u u^-1.
inline bool is_idempotent(const GisElement& a) {
  return a.is_zero() || a.left() == a.right();
}

// Green's relations via the normal-form characterization; the zero class
// is {0}.
inline bool green_L(const GisElement& a, const GisElement& b) {
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() && b.is_zero();
  }
  return a.right() == b.right();
}

inline bool green_R(const GisElement& a, const GisElement& b) {
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() && b.is_zero();
  }
  return a.left() == b.left();
}

inline bool green_D(const GisElement& a, const GisElement& b) {
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() && b.is_zero();
  }
  return a.left().range() == b.left().range();
}

inline bool green_H(const GisElement& a, const GisElement& b) {
  return green_L(a, b) && green_R(a, b);
}

namespace detail {

inline void push_candidate(std::vector<GisElement>& out, const Path& left,
                           const Path& right) {
  if (left.range() == right.range()) {
    out.push_back(GisElement::pair(left, right));
  }
}

inline void sort_unique(std::vector<GisElement>& v) {
  std::sort(v.begin(), v.end(), element_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

// The complete finite set { x : x * a = b }, for nonzero a, b.  Candidates
// come from a case split on the product formula; the splits bound every
// solution's path lengths, and each candidate is confirmed by multiplying.
inline std::vector<GisElement> solve_left(const Graph& g, const GisElement& a,
                                          const GisElement& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error("solve_left requires nonzero arguments");
  }
  const Path& c = a.left();
  const Path& d = a.right();
  const Path& p = b.left();
  const Path& q = b.right();

  std::vector<GisElement> candidates;

  // Case 1: x = u v^-1 with c = v w; the product is (u w) d^-1, so d must
  // equal q and w must also be a trailing segment of p.
  if (d == q) {
    for (int k = 0; k <= c.length(); ++k) {
      auto [v, w] = split_path(g, c, k);
      if (w.length() > p.length()) {
        continue;
      }
      int cut = p.length() - w.length();
      if (!std::equal(w.edges().begin(), w.edges().end(),
                      p.edges().begin() + cut)) {
        continue;
      }
      detail::push_candidate(candidates, split_path(g, p, cut).first, v);
    }
  }

  // Case 2: x = u (c w)^-1 with q = d w; at most one such w exists.
  if (auto w = prefix_remainder(d, q)) {
    if (auto v = concat(c, *w)) {
      detail::push_candidate(candidates, p, *v);
    }
  }

  std::vector<GisElement> solutions;
  for (const GisElement& x : candidates) {
    if (mul(x, a) == b) {
      solutions.push_back(x);
    }
  }
  detail::sort_unique(solutions);
  return solutions;
}

// { x : a * x = b }, via the inversion anti-isomorphism:
// a x = b  iff  x^-1 a^-1 = b^-1.
inline std::vector<GisElement> solve_right(const Graph& g, const GisElement& a,
                                           const GisElement& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error("solve_right requires nonzero arguments");
  }
  std::vector<GisElement> solutions;
  for (const GisElement& y : solve_left(g, inv(a), inv(b))) {
    GisElement x = inv(y);
    if (mul(a, x) == b) {
      solutions.push_back(x);
    }
  }
  detail::sort_unique(solutions);
  return solutions;
}

// Zero plus every pair of window-bounded paths with a common range vertex,
// in canonical order.
inline std::vector<GisElement> enumerate_elements(const Graph& g, int window) {
  std::vector<GisElement> out{GisElement::zero()};
  std::vector<Path> paths = enumerate_paths(g, window);
  for (const Path& u : paths) {
    for (const Path& v : paths) {
      if (u.range() == v.range()) {
        out.push_back(GisElement::pair(u, v));
      }
    }
  }
  return out;
}

inline std::string to_string(const Graph& g, const GisElement& a) {
  if (a.is_zero()) {
    return "0";
  }
  return to_string(g, a.left()) + " | " + to_string(g, a.right());
}

}  // namespace gis

#endif  // GIS_ELEMENT_HPP
