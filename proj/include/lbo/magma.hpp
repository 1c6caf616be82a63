#pragma once

// Finite magmas as multiplication tables: axiom predicates, classification,
// isomorphism and exhaustive enumeration of small examples.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lbo/error.hpp"

namespace lbo {

using Element = std::uint32_t;

/// Multiplication table of a finite magma on the elements 0..n-1.
/// Entry (a, b) is a*b. Immutable once constructed.
class MulTable {
 public:
  /// Validates shape and range. Throws ParseError for an empty or ragged
  /// table, RangeError for entries outside 0..n-1.
  explicit MulTable(const std::vector<std::vector<long long>>& rows) {
    n_ = rows.size();
    if (n_ == 0) throw ParseError("multiplication table is empty");
    cells_.reserve(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      if (rows[a].size() != n_) {
        throw ParseError("row " + std::to_string(a) + " has " +
                         std::to_string(rows[a].size()) + " entries, expected " +
                         std::to_string(n_));
      }
      for (long long v : rows[a]) {
        if (v < 0 || static_cast<unsigned long long>(v) >= n_) {
          throw RangeError("entry " + std::to_string(v) + " in row " +
                           std::to_string(a) + " is out of range for order " +
                           std::to_string(n_));
        }
        cells_.push_back(static_cast<Element>(v));
      }
    }
  }

  static MulTable from_flat(std::size_t n, std::vector<Element> cells) {
    MulTable t;
    if (n == 0 || cells.size() != n * n) throw ParseError("flat table has wrong size");
    for (Element v : cells) {
      if (v >= n) throw RangeError("entry out of range");
    }
    t.n_ = n;
    t.cells_ = std::move(cells);
    return t;
  }

  std::size_t order() const noexcept { return n_; }

  Element operator()(Element a, Element b) const noexcept { return cells_[a * n_ + b]; }
  Element apply(Element a, Element b) const noexcept { return (*this)(a, b); }

  std::span<const Element> row(Element a) const noexcept {
    return {cells_.data() + a * n_, n_};
  }
  const std::vector<Element>& cells() const noexcept { return cells_; }

  /// Brace notation, e.g. {{0,0},{0,1}}.
  std::string to_brace() const {
    std::string s = "{";
    for (std::size_t a = 0; a < n_; ++a) {
      if (a) s += ',';
      s += '{';
      for (std::size_t b = 0; b < n_; ++b) {
        if (b) s += ',';
        s += std::to_string(cells_[a * n_ + b]);
      }
      s += '}';
    }
    return s + '}';
  }

  friend bool operator==(const MulTable&, const MulTable&) = default;
  friend auto operator<=>(const MulTable& x, const MulTable& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.cells_ <=> y.cells_;
  }

 private:
  MulTable() = default;
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

/// Accepts brace notation `{{0,1},{1,0}}` or JSON nested arrays
/// `[[0,1],[1,0]]`; whitespace is ignored.
inline MulTable parse_table(std::string_view text) {
  std::string s(text);
  const bool braces = s.find_first_of("{}") != std::string::npos;
  const bool brackets = s.find_first_of("[]") != std::string::npos;
  if (braces && brackets) throw ParseError("mixed brace and bracket notation");
  if (braces) {
    std::replace(s.begin(), s.end(), '{', '[');
    std::replace(s.begin(), s.end(), '}', ']');
  }

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed table: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("table must be a list of rows");
  std::vector<std::vector<long long>> rows;
  for (const auto& r : doc) {
    if (!r.is_array()) throw ParseError("table row must be a list");
    auto& out = rows.emplace_back();
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw ParseError("table entries must be integers");
      out.push_back(v.get<long long>());
    }
  }
  return MulTable(rows);
}

// ---------------------------------------------------------------------------
// Axiom predicates. Products a*b*c associate to the left.

inline bool is_associative(const MulTable& t) {
  const auto n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

/// (a*b)*c = (a*c)*(b*c)
inline bool is_right_self_distributive(const MulTable& t) {
  const auto n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(t(a, c), t(b, c))) return false;
  return true;
}

inline bool is_idempotent(const MulTable& t) {
  for (Element a = 0; a < t.order(); ++a)
    if (t(a, a) != a) return false;
  return true;
}

inline bool is_commutative(const MulTable& t) {
  for (Element a = 0; a < t.order(); ++a)
    for (Element b = a + 1; b < t.order(); ++b)
      if (t(a, b) != t(b, a)) return false;
  return true;
}

/// a*b*b*c = a*b*c
inline bool satisfies_abbc(const MulTable& t) {
  const auto n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = t(a, b);
      const Element abb = t(ab, b);
      for (Element c = 0; c < n; ++c)
        if (t(abb, c) != t(ab, c)) return false;
    }
  return true;
}

/// Shelf with a*b = b*(a*b) and a*b = (a*b)*b for all a, b.
inline bool is_proto_unital(const MulTable& t) {
  const auto n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = t(a, b);
      if (t(b, ab) != ab || t(ab, b) != ab) return false;
    }
  return is_right_self_distributive(t);
}

inline bool is_pre_unital(const MulTable& t) { return is_idempotent(t) && is_proto_unital(t); }

inline std::vector<Element> find_units(const MulTable& t) {
  std::vector<Element> out;
  for (Element e = 0; e < t.order(); ++e) {
    bool ok = true;
    for (Element x = 0; x < t.order() && ok; ++x) ok = t(e, x) == x && t(x, e) == x;
    if (ok) out.push_back(e);
  }
  return out;
}

inline bool is_unital_shelf(const MulTable& t) {
  return !find_units(t).empty() && is_right_self_distributive(t);
}

/// e*x = e for all x.
inline std::vector<Element> find_left_zeros(const MulTable& t) {
  std::vector<Element> out;
  for (Element e = 0; e < t.order(); ++e) {
    auto r = t.row(e);
    if (std::all_of(r.begin(), r.end(), [e](Element v) { return v == e; })) out.push_back(e);
  }
  return out;
}

/// x*e = e for all x.
inline std::vector<Element> find_right_zeros(const MulTable& t) {
  std::vector<Element> out;
  for (Element e = 0; e < t.order(); ++e) {
    bool ok = true;
    for (Element x = 0; x < t.order() && ok; ++x) ok = t(x, e) == e;
    if (ok) out.push_back(e);
  }
  return out;
}

inline std::vector<Element> find_zeros(const MulTable& t) {
  auto left = find_left_zeros(t);
  auto right = find_right_zeros(t);
  std::vector<Element> out;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::back_inserter(out));
  return out;
}

inline bool is_zero(const MulTable& t, Element e) {
  auto z = find_zeros(t);
  return std::find(z.begin(), z.end(), e) != z.end();
}

/// Adds a new element z = n with z*x = x*z = z.
inline MulTable adjoin_zero(const MulTable& t) {
  const std::size_t n = t.order();
  const auto z = static_cast<Element>(n);
  std::vector<Element> cells((n + 1) * (n + 1), z);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) cells[a * (n + 1) + b] = t(a, b);
  return MulTable::from_flat(n + 1, std::move(cells));
}

/// Opposite magma: a *op b = b * a.
inline MulTable opposite(const MulTable& t) {
  const std::size_t n = t.order();
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) cells[a * n + b] = t(b, a);
  return MulTable::from_flat(n, std::move(cells));
}

// ---------------------------------------------------------------------------

struct ClassReport {
  bool associative = false;
  bool right_self_distributive = false;
  bool idempotent = false;
  bool commutative = false;
  bool abbc = false;
  bool proto_unital = false;
  bool pre_unital = false;
  bool unital = false;
  bool shelf = false;
  bool spindle = false;
  bool rack = false;
  bool homology_eligible = false;
  std::vector<Element> units;
  std::vector<Element> zeros;
  std::vector<Element> left_zeros;
  std::vector<Element> right_zeros;
};

namespace detail {
inline bool right_translations_bijective(const MulTable& t) {
  const std::size_t n = t.order();
  for (Element b = 0; b < n; ++b) {
    std::vector<bool> hit(n, false);
    for (Element a = 0; a < n; ++a) {
      if (hit[t(a, b)]) return false;
      hit[t(a, b)] = true;
    }
  }
  return true;
}
}  // namespace detail

inline ClassReport classify(const MulTable& t) {
  ClassReport r;
  r.associative = is_associative(t);
  r.right_self_distributive = is_right_self_distributive(t);
  r.idempotent = is_idempotent(t);
  r.commutative = is_commutative(t);
  r.abbc = satisfies_abbc(t);
  r.proto_unital = is_proto_unital(t);
  r.pre_unital = r.proto_unital && r.idempotent;
  r.units = find_units(t);
  r.unital = r.right_self_distributive && !r.units.empty();
  r.shelf = r.right_self_distributive;
  r.spindle = r.shelf && r.idempotent;
  r.rack = r.shelf && detail::right_translations_bijective(t);
  r.homology_eligible = r.associative && r.abbc;
  r.zeros = find_zeros(t);
  r.left_zeros = find_left_zeros(t);
  r.right_zeros = find_right_zeros(t);

  auto require = [](bool cond, const char* what) {
    if (!cond) throw InternalConsistencyError(what);
  };
  require(!r.unital || r.pre_unital, "unital shelf must be pre-unital");
  require(!r.pre_unital || r.proto_unital, "pre-unital shelf must be proto-unital");
  require(!r.proto_unital || r.associative, "proto-unital shelf must be associative");
  require(!(r.idempotent && r.associative) || r.abbc, "idempotent semigroup must satisfy abbc");
  require(!(r.right_self_distributive && r.associative) || r.abbc,
          "associative shelf must satisfy abbc");
  return r;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

// Extends a partial bijection sigma (kUnset where undefined) on 0..next-1 to
// a full isomorphism t1 -> t2. Every product of two mapped elements is
// checked at each step.
inline bool extend_isomorphism(const MulTable& t1, const MulTable& t2,
                               std::vector<Element>& sigma, std::vector<bool>& used,
                               Element next) {
  constexpr Element kUnset = ~Element{0};
  const auto n = static_cast<Element>(t1.order());
  if (next == n) return true;
  for (Element img = 0; img < n; ++img) {
    if (used[img]) continue;
    sigma[next] = img;
    used[img] = true;
    bool ok = true;
    for (Element x = 0; x <= next && ok; ++x) {
      for (Element y = 0; y <= next; ++y) {
        const Element p = t1(x, y);
        const Element q = t2(sigma[x], sigma[y]);
        // An unmapped product needs a still-free image.
        if (sigma[p] == kUnset ? used[q] : sigma[p] != q) {
          ok = false;
          break;
        }
      }
    }
    if (ok && extend_isomorphism(t1, t2, sigma, used, next + 1)) return true;
    sigma[next] = kUnset;
    used[img] = false;
  }
  return false;
}

}  // namespace detail

/// True iff some permutation s of the elements has s(a*b) = s(a)*s(b).
/// Exhaustive search over permutations with early rejection.
inline bool are_isomorphic(const MulTable& t1, const MulTable& t2) {
  if (t1.order() != t2.order()) {
    throw OrderMismatch("tables of order " + std::to_string(t1.order()) + " and " +
                        std::to_string(t2.order()));
  }
  if (t1.order() > 12) throw Unsupported("isomorphism search is capped at order 12");
  const std::size_t n = t1.order();
  // Cheap invariant: sorted idempotent/zero counts must agree.
  auto profile = [](const MulTable& t) {
    std::vector<std::size_t> v{static_cast<std::size_t>(0)};
    for (Element a = 0; a < t.order(); ++a) v[0] += t(a, a) == a;
    v.push_back(find_zeros(t).size());
    v.push_back(find_left_zeros(t).size());
    v.push_back(find_right_zeros(t).size());
    return v;
  };
  if (profile(t1) != profile(t2)) return false;
  std::vector<Element> sigma(n, ~Element{0});
  std::vector<bool> used(n, false);
  return detail::extend_isomorphism(t1, t2, sigma, used, 0);
}

/// Table transported along the permutation p: result(p[a], p[b]) = p[a*b].
inline MulTable relabel(const MulTable& t, std::span<const Element> p) {
  const std::size_t n = t.order();
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) cells[p[a] * n + p[b]] = p[t(a, b)];
  return MulTable::from_flat(n, std::move(cells));
}

/// Lexicographically smallest relabeling (row-major) over all n! permutations.
inline MulTable smallest_representative(const MulTable& t) {
  if (t.order() > 8) throw Unsupported("canonical representative capped at order 8");
  std::vector<Element> p(t.order());
  std::iota(p.begin(), p.end(), Element{0});
  MulTable best = t;
  do {
    MulTable cand = relabel(t, p);
    if (cand.cells() < best.cells()) best = std::move(cand);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Enumeration

enum class Family { AssocShelf, IdempotentSemigroup, AbbcSemigroup, ProtoUnital };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::AssocShelf: return "assoc-shelf";
    case Family::IdempotentSemigroup: return "idem-sg";
    case Family::AbbcSemigroup: return "abbc-sg";
    case Family::ProtoUnital: return "proto-unital";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : {Family::AssocShelf, Family::IdempotentSemigroup, Family::AbbcSemigroup,
                   Family::ProtoUnital})
    if (to_string(f) == s) return f;
  throw ParseError("unknown family '" + std::string(s) +
                   "' (expected assoc-shelf, idem-sg, abbc-sg or proto-unital)");
}

inline bool in_family(const MulTable& t, Family f) {
  switch (f) {
    case Family::AssocShelf: return is_associative(t) && is_right_self_distributive(t);
    case Family::IdempotentSemigroup: return is_associative(t) && is_idempotent(t);
    case Family::AbbcSemigroup: return is_associative(t) && satisfies_abbc(t);
    case Family::ProtoUnital: return is_proto_unital(t);
  }
  return false;
}

namespace detail {

class TableSearch {
 public:
  TableSearch(std::size_t n, Family f) : n_(n), family_(f), cells_(n * n, kFree) {}

  std::vector<MulTable> run() {
    if (family_ == Family::IdempotentSemigroup) {
      for (std::size_t a = 0; a < n_; ++a) cells_[a * n_ + a] = static_cast<int>(a);
    }
    fill(0);
    return std::move(found_);
  }

 private:
  static constexpr int kFree = -1;

  int at(int a, int b) const { return cells_[a * n_ + b]; }

  // Every axiom instance whose entries are all assigned must hold.
  bool consistent() const {
    const int n = static_cast<int>(n_);
    const bool assoc = true;
    const bool rsd = family_ == Family::AssocShelf || family_ == Family::ProtoUnital;
    const bool abbc = family_ == Family::AbbcSemigroup;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = at(a, b);
        if (ab == kFree) continue;
        if (family_ == Family::ProtoUnital) {
          const int bab = at(b, ab), abb = at(ab, b);
          if ((bab != kFree && bab != ab) || (abb != kFree && abb != ab)) return false;
        }
        for (int c = 0; c < n; ++c) {
          const int ab_c = at(ab, c);
          if (ab_c == kFree) continue;
          if (assoc) {
            const int bc = at(b, c);
            if (bc != kFree) {
              const int a_bc = at(a, bc);
              if (a_bc != kFree && a_bc != ab_c) return false;
            }
          }
          if (rsd) {
            const int ac = at(a, c), bc = at(b, c);
            if (ac != kFree && bc != kFree) {
              const int rhs = at(ac, bc);
              if (rhs != kFree && rhs != ab_c) return false;
            }
          }
          if (abbc) {
            const int abb = at(ab, b);
            if (abb != kFree) {
              const int abb_c = at(abb, c);
              if (abb_c != kFree && abb_c != ab_c) return false;
            }
          }
        }
      }
    return true;
  }

  void fill(std::size_t cell) {
    while (cell < cells_.size() && cells_[cell] != kFree) ++cell;
    if (cell == cells_.size()) {
      std::vector<Element> flat(cells_.begin(), cells_.end());
      auto t = MulTable::from_flat(n_, std::move(flat));
      if (in_family(t, family_)) found_.push_back(std::move(t));
      return;
    }
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      cells_[cell] = v;
      if (consistent()) fill(cell + 1);
    }
    cells_[cell] = kFree;
  }

  std::size_t n_;
  Family family_;
  std::vector<int> cells_;
  std::vector<MulTable> found_;
};

}  // namespace detail

/// All tables of the given order in the family, in row-major lexicographic
/// order. With up_to_iso, one table per isomorphism class: the smallest
/// representative, and the list is sorted.
inline std::vector<MulTable> enumerate(std::size_t order, Family family, bool up_to_iso) {
  if (order == 0) throw Unsupported("order must be positive");
  if (order > 4) throw Unsupported("exhaustive enumeration is limited to order <= 4");
  auto all = detail::TableSearch(order, family).run();
  if (!up_to_iso) return all;
  std::vector<MulTable> reps;
  reps.reserve(all.size());
  for (const auto& t : all) reps.push_back(smallest_representative(t));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

}  // namespace lbo
