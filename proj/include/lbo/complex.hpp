#pragma once

// Face maps, degeneracies, formal chains and boundary matrices for the lbo
// complexes and the four comparison theories, plus exhaustive checks of the
// simplicial identities.

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lbo/error.hpp"
#include "lbo/magma.hpp"
#include "lbo/matrix.hpp"

namespace lbo {

/// Basis element of C_n = Z X^{n+1}.
using Tuple = std::vector<Element>;

inline std::string to_string(std::span<const Element> x) {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(x[k]);
  }
  return s + ')';
}

/// Finite integer combination of tuples of one common length.
class Chain {
 public:
  explicit Chain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  const std::map<Tuple, std::int64_t>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::int64_t coefficient(const Tuple& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? 0 : it->second;
  }

  Chain& add(const Tuple& x, std::int64_t coeff) {
    if (x.size() != degree_ + 1) {
      throw DegreeMismatch("tuple " + lbo::to_string(x) + " does not belong to degree " +
                           std::to_string(degree_));
    }
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(x, coeff);
    if (!inserted) {
      it->second = detail::checked_add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  Chain& operator+=(const Chain& o) {
    require_same_degree(o);
    for (const auto& [x, c] : o.terms_) add(x, c);
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    require_same_degree(o);
    for (const auto& [x, c] : o.terms_) add(x, -c);
    return *this;
  }
  Chain operator-() const {
    Chain r(degree_);
    for (const auto& [x, c] : terms_) r.terms_.emplace(x, -c);
    return r;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend bool operator==(const Chain&, const Chain&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [x, c] : terms_) {
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const auto mag = c < 0 ? -c : c;
      if (mag != 1) s += std::to_string(mag);
      s += lbo::to_string(x);
      first = false;
    }
    return s;
  }

 private:
  void require_same_degree(const Chain& o) const {
    if (o.degree_ != degree_) throw DegreeMismatch("chains of different degree");
  }
  std::size_t degree_;
  std::map<Tuple, std::int64_t> terms_;
};

inline Chain basis_chain(const Tuple& x) {
  if (x.empty()) throw DegreeMismatch("empty tuple");
  Chain c(x.size() - 1);
  c.add(x, 1);
  return c;
}

// ---------------------------------------------------------------------------

enum class Theory { LboCyclic, LboNonCyclic, Group, Hochschild, OneTerm, Rack };

inline constexpr Theory kAllTheories[] = {Theory::LboCyclic, Theory::LboNonCyclic,
                                          Theory::Group,     Theory::Hochschild,
                                          Theory::OneTerm,   Theory::Rack};

inline std::string_view to_string(Theory th) {
  switch (th) {
    case Theory::LboCyclic: return "lbo";
    case Theory::LboNonCyclic: return "lbo-nc";
    case Theory::Group: return "group";
    case Theory::Hochschild: return "hochschild";
    case Theory::OneTerm: return "one-term";
    case Theory::Rack: return "rack";
  }
  return "?";
}

inline Theory parse_theory(std::string_view s) {
  for (Theory th : kAllTheories)
    if (to_string(th) == s) return th;
  throw ParseError("unknown theory '" + std::string(s) +
                   "' (expected lbo, lbo-nc, group, hochschild, one-term or rack)");
}

inline bool is_eligible(Theory th, const MulTable& t) {
  switch (th) {
    case Theory::LboCyclic:
    case Theory::LboNonCyclic: return is_associative(t) && satisfies_abbc(t);
    case Theory::Group:
    case Theory::Hochschild: return is_associative(t);
    case Theory::OneTerm:
    case Theory::Rack: return is_right_self_distributive(t);
  }
  return false;
}

inline std::string_view eligibility_requirement(Theory th) {
  switch (th) {
    case Theory::LboCyclic:
    case Theory::LboNonCyclic: return "an associative table satisfying a*b*b*c = a*b*c";
    case Theory::Group:
    case Theory::Hochschild: return "an associative table";
    case Theory::OneTerm:
    case Theory::Rack: return "a right self-distributive table";
  }
  return "?";
}

inline void require_eligible(Theory th, const MulTable& t, bool force) {
  if (force || is_eligible(th, t)) return;
  throw IneligibleTable(std::string(to_string(th)) + " homology requires " +
                        std::string(eligibility_requirement(th)) + "; " + t.to_brace() +
                        " is not (use --force to override)");
}

/// Number of face maps out of C_n.
inline std::size_t face_count(Theory th, std::size_t n) {
  return th == Theory::Group ? n + 2 : n + 1;
}

/// Signed monomial of a boundary before cancellation.
struct Monomial {
  std::int64_t sign;
  Tuple tuple;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

namespace detail {

// Terms of face i applied to x, for a table already known to be acceptable.
// Every theory's face is a single tuple except the rack face, which is a
// difference of two tuples (and the rack d_0 is zero).
inline std::vector<Monomial> face_terms(Theory th, const MulTable& t, std::size_t i,
                                        std::span<const Element> x) {
  const std::size_t n = x.size() - 1;
  auto mul = [&t](Element a, Element b) { return t(a, b); };
  std::vector<Monomial> out;
  Tuple y;
  y.reserve(n + 1);

  // (x_0, ..., x_{i-1}*x_i, x_i*x_{i+1}, ..., x_n)
  auto middle = [&](std::size_t i) {
    for (std::size_t k = 0; k + 1 < i; ++k) y.push_back(x[k]);
    y.push_back(mul(x[i - 1], x[i]));
    y.push_back(mul(x[i], x[i + 1]));
    for (std::size_t k = i + 2; k <= n; ++k) y.push_back(x[k]);
  };
  // (x_0, ..., x_i*x_{i+1}, ..., x_n)
  auto merge = [&](std::size_t i) {
    for (std::size_t k = 0; k < i; ++k) y.push_back(x[k]);
    y.push_back(mul(x[i], x[i + 1]));
    for (std::size_t k = i + 2; k <= n; ++k) y.push_back(x[k]);
  };
  // (x_0*x_i, ..., x_{i-1}*x_i, x_{i+1}, ..., x_n)
  auto act = [&](std::size_t i) {
    for (std::size_t k = 0; k < i; ++k) y.push_back(mul(x[k], x[i]));
    for (std::size_t k = i + 1; k <= n; ++k) y.push_back(x[k]);
  };
  auto drop = [&](std::size_t i) {
    for (std::size_t k = 0; k <= n; ++k)
      if (k != i) y.push_back(x[k]);
  };

  switch (th) {
    case Theory::LboCyclic:
      if (n == 1) {
        y.push_back(i == 0 ? mul(mul(x[0], x[1]), x[0]) : mul(mul(x[1], x[0]), x[1]));
      } else if (i == 0) {
        y.push_back(mul(x[0], x[1]));
        for (std::size_t k = 2; k < n; ++k) y.push_back(x[k]);
        y.push_back(mul(x[n], x[0]));
      } else if (i == n) {
        y.push_back(mul(x[n], x[0]));
        for (std::size_t k = 1; k + 1 < n; ++k) y.push_back(x[k]);
        y.push_back(mul(x[n - 1], x[n]));
      } else {
        middle(i);
      }
      break;
    case Theory::LboNonCyclic:
      if (n == 1) {
        y.push_back(mul(x[0], x[1]));
      } else if (i == 0) {
        merge(0);
      } else if (i == n) {
        merge(n - 1);
      } else {
        middle(i);
      }
      break;
    case Theory::Group:
      if (i == 0) drop(0);
      else if (i == n + 1) drop(n);
      else merge(i - 1);
      break;
    case Theory::Hochschild:
      if (i < n) {
        merge(i);
      } else {
        y.push_back(mul(x[n], x[0]));
        for (std::size_t k = 1; k < n; ++k) y.push_back(x[k]);
      }
      break;
    case Theory::OneTerm:
      act(i);
      break;
    case Theory::Rack:
      if (i == 0) return out;
      drop(i);
      out.push_back({1, y});
      y.clear();
      act(i);
      out.push_back({-1, std::move(y)});
      return out;
  }
  out.push_back({1, std::move(y)});
  return out;
}

inline void check_tuple(const MulTable& t, std::span<const Element> x) {
  if (x.empty()) throw DegreeMismatch("empty tuple");
  for (Element v : x)
    if (v >= t.order()) throw RangeError("tuple entry " + std::to_string(v) + " out of range");
}

}  // namespace detail

/// Face d_i : C_n -> C_{n-1} of the given theory, as a chain.
inline Chain face(Theory th, const MulTable& t, std::size_t i, const Tuple& x,
                  bool force = false) {
  require_eligible(th, t, force);
  detail::check_tuple(t, x);
  const std::size_t n = x.size() - 1;
  if (n == 0) throw DegreeMismatch("C_0 has no faces");
  if (i >= face_count(th, n)) {
    throw DegreeMismatch("face index " + std::to_string(i) + " out of range in degree " +
                         std::to_string(n));
  }
  Chain c(n - 1);
  for (auto& m : detail::face_terms(th, t, i, x)) c.add(m.tuple, m.sign);
  return c;
}

namespace detail {
inline Tuple single_face(Theory th, const MulTable& t, std::size_t n, std::size_t i,
                         const Tuple& x, bool force) {
  if (x.size() != n + 1) {
    throw DegreeMismatch("expected a tuple of length " + std::to_string(n + 1) + ", got " +
                         std::to_string(x.size()));
  }
  if (n < 1) throw DegreeMismatch("face maps start in degree 1");
  if (i > n) throw DegreeMismatch("face index exceeds degree");
  require_eligible(th, t, force);
  check_tuple(t, x);
  return std::move(face_terms(th, t, i, x).front().tuple);
}
}  // namespace detail

/// Cyclic lbo face d_i on a tuple of degree n.
inline Tuple face_lbo(const MulTable& t, std::size_t n, std::size_t i, const Tuple& x,
                      bool force = false) {
  return detail::single_face(Theory::LboCyclic, t, n, i, x, force);
}

/// Non-cyclic lbo face d_i on a tuple of degree n.
inline Tuple face_lbo_nc(const MulTable& t, std::size_t n, std::size_t i, const Tuple& x,
                         bool force = false) {
  return detail::single_face(Theory::LboNonCyclic, t, n, i, x, force);
}

/// Monomials of the boundary of x in the order the definition lists them,
/// before any cancellation.
inline std::vector<Monomial> boundary_terms(Theory th, const MulTable& t, const Tuple& x,
                                            bool force = false) {
  require_eligible(th, t, force);
  detail::check_tuple(t, x);
  const std::size_t n = x.size() - 1;
  if (n == 0) throw DegreeMismatch("boundary terms start in degree 1");
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < face_count(th, n); ++i) {
    const std::int64_t sign = i % 2 ? -1 : 1;
    for (auto& m : detail::face_terms(th, t, i, x)) out.push_back({sign * m.sign, std::move(m.tuple)});
  }
  return out;
}

inline Chain boundary(Theory th, const MulTable& t, const Tuple& x, bool force = false) {
  auto terms = boundary_terms(th, t, x, force);
  Chain c(x.size() - 2);
  for (const auto& m : terms) c.add(m.tuple, m.sign);
  return c;
}

namespace detail {
inline Chain apply_face(Theory th, const MulTable& t, std::size_t i, const Chain& c) {
  Chain out(c.degree() - 1);
  for (const auto& [x, coeff] : c.terms())
    for (const auto& m : face_terms(th, t, i, x)) out.add(m.tuple, m.sign * coeff);
  return out;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Degeneracies

/// s_j(x_0, ..., x_n) = (x_0, ..., x_{j-1}, e, e, x_{j+1}, ..., x_n).
inline Tuple degeneracy(const MulTable& t, Element e, std::size_t j, const Tuple& x) {
  if (!is_zero(t, e)) throw NotAZero(std::to_string(e) + " is not a zero of " + t.to_brace());
  detail::check_tuple(t, x);
  if (j >= x.size()) throw DegreeMismatch("degeneracy index exceeds degree");
  Tuple y;
  y.reserve(x.size() + 1);
  y.insert(y.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j));
  y.push_back(e);
  y.push_back(e);
  y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(j) + 1, x.end());
  return y;
}

// ---------------------------------------------------------------------------
// Tuple bases and boundary matrices. Bases are lexicographic with x_0 most
// significant.

struct ComplexOptions {
  bool force = false;
  std::size_t max_columns = 4096;
};

inline std::size_t basis_size(std::size_t order, std::size_t length,
                              std::size_t cap = std::numeric_limits<std::size_t>::max()) {
  std::size_t s = 1;
  for (std::size_t k = 0; k < length; ++k) {
    if (s > cap / order) {
      throw ResourceLimit("basis of " + std::to_string(order) + "^" + std::to_string(length) +
                          " tuples exceeds the limit of " + std::to_string(cap));
    }
    s *= order;
  }
  return s;
}

inline std::size_t tuple_index(std::span<const Element> x, std::size_t order) {
  std::size_t idx = 0;
  for (Element v : x) idx = idx * order + v;
  return idx;
}

inline Tuple tuple_at(std::size_t index, std::size_t length, std::size_t order) {
  Tuple x(length);
  for (std::size_t k = length; k-- > 0;) {
    x[k] = static_cast<Element>(index % order);
    index /= order;
  }
  return x;
}

/// Visits every tuple of the given length in basis order.
template <class F>
void for_each_tuple(std::size_t order, std::size_t length, F&& f) {
  Tuple x(length, 0);
  while (true) {
    f(static_cast<const Tuple&>(x));
    std::size_t k = length;
    while (k > 0) {
      if (++x[k - 1] < order) break;
      x[k - 1] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

/// Matrix of the boundary C_n -> C_{n-1}: column = source tuple, row =
/// target tuple. For n = 0 this is the zero map into the zero module.
inline IntMatrix boundary_matrix(Theory th, const MulTable& t, std::size_t n,
                                 const ComplexOptions& opts = {}) {
  require_eligible(th, t, opts.force);
  const std::size_t order = t.order();
  const std::size_t cols = basis_size(order, n + 1, opts.max_columns);
  if (n == 0) return IntMatrix(0, cols);
  const std::size_t rows = basis_size(order, n);
  IntMatrix m(rows, cols);
  std::size_t col = 0;
  for_each_tuple(order, n + 1, [&](const Tuple& x) {
    for (std::size_t i = 0; i < face_count(th, n); ++i) {
      const std::int64_t sign = i % 2 ? -1 : 1;
      for (const auto& mono : detail::face_terms(th, t, i, x))
        m(tuple_index(mono.tuple, order), col) += sign * mono.sign;
    }
    ++col;
  });
  return m;
}

// ---------------------------------------------------------------------------
// Verification

struct Violation {
  std::string rule;
  std::size_t i = 0;
  std::size_t j = 0;
  Tuple tuple;

  std::string to_string() const {
    return rule + " fails at i=" + std::to_string(i) + ", j=" + std::to_string(j) + " on " +
           lbo::to_string(tuple);
  }
};

struct VerificationReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // the first kMaxListed
  std::vector<std::string> notes;     // informational only

  static constexpr std::size_t kMaxListed = 32;

  bool passed() const noexcept { return violation_count == 0; }

  void record(bool ok, Violation v) {
    ++checks;
    if (ok) return;
    ++violation_count;
    if (violations.size() < kMaxListed) violations.push_back(std::move(v));
  }
};

/// d_i d_j = d_{j-1} d_i for every i < j on every basis tuple of C_{n+1},
/// n = 1..n_max.
inline VerificationReport verify_presimplicial(Theory th, const MulTable& t, std::size_t n_max,
                                               bool force = false) {
  require_eligible(th, t, force);
  VerificationReport rep;
  rep.name = "pre-simplicial identities (" + std::string(to_string(th)) + ")";
  for (std::size_t n = 1; n <= n_max; ++n) {
    for_each_tuple(t.order(), n + 2, [&](const Tuple& x) {
      const Chain cx = basis_chain(x);
      const std::size_t faces = face_count(th, n + 1);
      std::vector<Chain> first;
      first.reserve(faces);
      for (std::size_t k = 0; k < faces; ++k) first.push_back(detail::apply_face(th, t, k, cx));
      for (std::size_t j = 1; j < faces; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          const Chain lhs = detail::apply_face(th, t, i, first[j]);
          const Chain rhs = detail::apply_face(th, t, j - 1, first[i]);
          rep.record(lhs == rhs, {"d_i d_j = d_{j-1} d_i", i, j, x});
        }
    });
  }
  return rep;
}

/// Every entry of boundary_n * boundary_{n+1} vanishes, n = 1..n_max.
/// (The n = 0 composite is zero by construction.)
inline VerificationReport verify_boundary_squared(Theory th, const MulTable& t,
                                                  std::size_t n_max,
                                                  const ComplexOptions& opts = {}) {
  require_eligible(th, t, opts.force);
  VerificationReport rep;
  rep.name = "boundary squared (" + std::string(to_string(th)) + ")";
  for (std::size_t n = 1; n <= n_max; ++n) {
    const IntMatrix prod =
        multiply(boundary_matrix(th, t, n, opts), boundary_matrix(th, t, n + 1, opts));
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c)
        rep.record(prod(r, c) == 0,
                   {"d_" + std::to_string(n) + " d_" + std::to_string(n + 1) + " = 0 (row " +
                        to_string(tuple_at(r, n, t.order())) + ")",
                    n, n + 1, tuple_at(c, n + 2, t.order())});
  }
  return rep;
}

struct WeakSimplicialReport {
  VerificationReport axioms;   // A2 and A3
  bool axiom4_holds = true;    // informational
  std::string axiom4_witness;  // first failure of axiom 4, if any
};

/// Degeneracy axioms s_i s_j = s_{j+1} s_i (i <= j) and
/// d_i s_j = s_{j-1} d_i (i < j), d_i s_j = s_j d_{i-1} (i > j+1), checked
/// exhaustively up to degree n_max. Axiom d_i s_i = d_{i+1} s_i = id is only
/// reported.
inline WeakSimplicialReport verify_very_weak_simplicial(const MulTable& t, Element e,
                                                        std::size_t n_max,
                                                        Theory th = Theory::LboCyclic,
                                                        bool force = false) {
  if (!is_zero(t, e)) throw NotAZero(std::to_string(e) + " is not a zero of " + t.to_brace());
  require_eligible(th, t, force);
  WeakSimplicialReport out;
  auto& rep = out.axioms;
  rep.name = "very weak simplicial axioms (" + std::string(to_string(th)) + ", e=" +
             std::to_string(e) + ")";
  auto s = [&](std::size_t j, const Tuple& x) { return degeneracy(t, e, j, x); };
  auto d = [&](std::size_t i, const Tuple& x) {
    return std::move(detail::face_terms(th, t, i, x).front().tuple);
  };

  // A2 on C_{n-1}, n = 1..n_max.
  for (std::size_t n = 1; n <= n_max; ++n)
    for_each_tuple(t.order(), n, [&](const Tuple& x) {
      for (std::size_t j = 0; j + 1 <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          rep.record(s(i, s(j, x)) == s(j + 1, s(i, x)), {"s_i s_j = s_{j+1} s_i", i, j, x});
    });

  // A3 on C_{n-1}, n = 2..n_max.
  for (std::size_t n = 2; n <= n_max; ++n)
    for_each_tuple(t.order(), n, [&](const Tuple& x) {
      for (std::size_t j = 0; j + 1 <= n; ++j) {
        const Tuple sx = s(j, x);
        for (std::size_t i = 0; i <= n; ++i) {
          if (i < j) {
            rep.record(d(i, sx) == s(j - 1, d(i, x)), {"d_i s_j = s_{j-1} d_i", i, j, x});
          } else if (i > j + 1) {
            rep.record(d(i, sx) == s(j, d(i - 1, x)), {"d_i s_j = s_j d_{i-1}", i, j, x});
          }
        }
      }
    });

  // Axiom 4, informational.
  for (std::size_t n = 0; n + 1 <= n_max && out.axiom4_holds; ++n)
    for_each_tuple(t.order(), n + 1, [&](const Tuple& x) {
      if (!out.axiom4_holds) return;
      for (std::size_t i = 0; i <= n; ++i) {
        const Tuple sx = s(i, x);
        if (d(i, sx) != x || d(i + 1, sx) != x) {
          out.axiom4_holds = false;
          out.axiom4_witness = "d_i s_i = d_{i+1} s_i = id fails at i=" + std::to_string(i) +
                               " on " + to_string(x);
          return;
        }
      }
    });
  rep.notes.push_back(out.axiom4_holds ? "axiom 4 (d_i s_i = d_{i+1} s_i = id) also holds"
                                       : "axiom 4 does not hold: " + out.axiom4_witness);
  return out;
}

}  // namespace lbo
