#pragma once

// Geometric realization: cell counts, the 1- and 2-skeleton, and H_0 by
// union-find.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lbo/complex.hpp"
#include "lbo/error.hpp"
#include "lbo/magma.hpp"

namespace lbo {

/// One k-cell per basis tuple of C_k.
inline std::vector<std::uint64_t> cell_counts(const MulTable& t, std::size_t n_max) {
  std::vector<std::uint64_t> out;
  std::uint64_t c = 1;
  for (std::size_t k = 0; k <= n_max; ++k) {
    c *= t.order();
    out.push_back(c);
  }
  return out;
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[std::max(a, b)] = std::min(a, b);
    --classes_;
  }
  std::size_t classes() const noexcept { return classes_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t classes_;
};

// Classes of the equivalence generated by lhs(x, y) ~ rhs(x, y).
template <class L, class R>
UnionFind classes_of(const MulTable& t, L lhs, R rhs) {
  UnionFind uf(t.order());
  for (Element x = 0; x < t.order(); ++x)
    for (Element y = 0; y < t.order(); ++y) uf.unite(lhs(x, y), rhs(x, y));
  return uf;
}

inline bool commutator_method_applies(const MulTable& t) {
  return is_proto_unital(t) || (is_idempotent(t) && is_associative(t));
}

}  // namespace detail

/// Rank of H_0: classes of x*y*x ~ y*x*y.
inline std::size_t h0_general(const MulTable& t, bool force = false) {
  require_eligible(Theory::LboCyclic, t, force);
  return detail::classes_of(
             t, [&](Element x, Element y) { return t(t(x, y), x); },
             [&](Element x, Element y) { return t(t(y, x), y); })
      .classes();
}

/// Classes of x*y ~ y*x, with no precondition.
inline std::size_t commutator_class_count(const MulTable& t) {
  return detail::classes_of(
             t, [&](Element x, Element y) { return t(x, y); },
             [&](Element x, Element y) { return t(y, x); })
      .classes();
}

/// Rank of H_0 by the commutator classes; valid for proto-unital shelves
/// and idempotent semigroups only.
inline std::size_t h0_commutator(const MulTable& t) {
  if (!detail::commutator_method_applies(t)) {
    throw IneligibleTable("the commutator method for H_0 needs a proto-unital shelf or an "
                          "idempotent semigroup; " + t.to_brace() + " is neither");
  }
  if (is_commutative(t)) return t.order();
  return commutator_class_count(t);
}

/// For every pair: a*b = b*a iff a*b*a = b*a*b.
inline VerificationReport verify_braid_commutativity(const MulTable& t, bool force = false) {
  if (!force && !detail::commutator_method_applies(t)) {
    throw IneligibleTable("braid/commutativity equivalence is only claimed for proto-unital "
                          "shelves and idempotent semigroups");
  }
  VerificationReport rep;
  rep.name = "a*b = b*a <=> a*b*a = b*a*b";
  for (Element a = 0; a < t.order(); ++a)
    for (Element b = 0; b < t.order(); ++b) {
      const bool commute = t(a, b) == t(b, a);
      const bool braid = t(t(a, b), a) == t(t(b, a), b);
      rep.record(commute == braid, {commute ? "commute without braid" : "braid without commute",
                                    a, b, Tuple{a, b}});
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Skeleton

struct SkeletonEdge {
  Tuple cell;          // (x0, x1)
  Element source = 0;  // d_1 image, x1*x0*x1
  Element target = 0;  // d_0 image, x0*x1*x0
  bool loop = false;
};

struct SkeletonFace {
  Tuple cell;                     // (x0, x1, x2)
  std::array<Tuple, 3> boundary;  // d_0, d_1, d_2 images
  static constexpr std::array<int, 3> kSigns{1, -1, 1};
};

struct SkeletonExport {
  std::vector<Element> vertices;
  std::vector<SkeletonEdge> edges;
  std::vector<SkeletonFace> faces;
};

/// Vertices, edges and 2-cells of the cyclic lbo realization.
inline SkeletonExport build_skeleton(const MulTable& t, bool with_faces = true) {
  SkeletonExport s;
  const auto n = static_cast<Element>(t.order());
  for (Element v = 0; v < n; ++v) s.vertices.push_back(v);
  for (Element x0 = 0; x0 < n; ++x0)
    for (Element x1 = 0; x1 < n; ++x1) {
      SkeletonEdge e{{x0, x1}, t(t(x1, x0), x1), t(t(x0, x1), x0), false};
      e.loop = e.source == e.target;
      s.edges.push_back(std::move(e));
    }
  if (!with_faces) return s;
  for_each_tuple(n, 3, [&](const Tuple& x) {
    SkeletonFace f;
    f.cell = x;
    for (std::size_t i = 0; i < 3; ++i)
      f.boundary[i] = detail::face_terms(Theory::LboCyclic, t, i, x).front().tuple;
    s.faces.push_back(std::move(f));
  });
  return s;
}

/// Vertex-by-edge incidence matrix (+1 at the target, -1 at the source).
inline IntMatrix incidence_matrix(const SkeletonExport& s) {
  IntMatrix m(s.vertices.size(), s.edges.size());
  for (std::size_t k = 0; k < s.edges.size(); ++k) {
    m(s.edges[k].target, k) += 1;
    m(s.edges[k].source, k) -= 1;
  }
  return m;
}

/// Connected components of the 1-skeleton, by breadth-first search.
inline std::size_t component_count(const SkeletonExport& s) {
  std::vector<std::vector<Element>> adj(s.vertices.size());
  for (const auto& e : s.edges) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::vector<char> seen(s.vertices.size(), 0);
  std::size_t comps = 0;
  for (Element v : s.vertices) {
    if (seen[v]) continue;
    ++comps;
    std::queue<Element> q;
    q.push(v);
    seen[v] = 1;
    while (!q.empty()) {
      const Element u = q.front();
      q.pop();
      for (Element w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  return comps;
}

inline std::string to_dot(const SkeletonExport& s) {
  std::ostringstream os;
  os << "digraph skeleton {\n";
  for (Element v : s.vertices) os << "  " << v << ";\n";
  for (const auto& e : s.edges) {
    os << "  " << e.source << " -> " << e.target << " [label=\"" << to_string(e.cell) << "\"";
    if (e.loop) os << ", loop=true";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

inline nlohmann::ordered_json to_cells_json(const SkeletonExport& s) {
  nlohmann::ordered_json j;
  j["vertices"] = s.vertices;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : s.edges) {
    j["edges"].push_back(
        {{"cell", e.cell}, {"source", e.source}, {"target", e.target}, {"loop", e.loop}});
  }
  j["faces"] = nlohmann::ordered_json::array();
  for (const auto& f : s.faces) {
    nlohmann::ordered_json b = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < 3; ++i)
      b.push_back({{"edge", f.boundary[i]}, {"sign", SkeletonFace::kSigns[i]}});
    j["faces"].push_back({{"cell", f.cell}, {"boundary", b}});
  }
  return j;
}

/// Formats: `graph` (DOT, vertices and edges) and `cells` (JSON with 2-cells).
inline std::string export_skeleton(const MulTable& t, std::string_view format) {
  if (format == "graph") return to_dot(build_skeleton(t, false));
  if (format == "cells") return to_cells_json(build_skeleton(t)).dump(2) + "\n";
  throw UnknownFormat("unknown skeleton format '" + std::string(format) +
                      "' (expected graph or cells)");
}

}  // namespace lbo
