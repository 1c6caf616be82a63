#pragma once

// Kauffman diagrams, the Jones monoid J_n, partitions and the idempotent
// sub-monoids JSMP_n.
//
// The 2n boundary points are labelled in circular order: top points t1..tn
// left to right, then bottom points bn..b1 right to left. Position c-1 is
// t_c and position 2n-c is b_c, so a diagram is planar exactly when its
// chords are non-crossing on the circle.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lbo/error.hpp"
#include "lbo/magma.hpp"

namespace lbo {

inline constexpr std::size_t kMaxStrands = 12;

class TLDiagram {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  TLDiagram() = default;

  /// From chords given as circular positions. Validates that every point is
  /// used exactly once and that no two chords cross.
  static TLDiagram from_pairs(std::size_t n, const std::vector<Pair>& pairs) {
    if (n == 0) throw RangeError("a diagram needs at least one strand");
    if (n > 127) throw ResourceLimit("too many strands");
    if (pairs.size() != n) throw ParseError("expected " + std::to_string(n) + " chords");
    TLDiagram d;
    d.n_ = n;
    d.match_.assign(2 * n, kFree);
    for (auto [p, q] : pairs) {
      if (p >= 2 * n || q >= 2 * n) throw RangeError("boundary point out of range");
      if (p == q || d.match_[p] != kFree || d.match_[q] != kFree) {
        throw ParseError("chords must pair distinct points, each point once");
      }
      d.match_[p] = static_cast<std::uint8_t>(q);
      d.match_[q] = static_cast<std::uint8_t>(p);
    }
    const auto ps = d.pairs();
    for (std::size_t x = 0; x < ps.size(); ++x)
      for (std::size_t y = x + 1; y < ps.size(); ++y) {
        auto [a, b] = ps[x];
        auto [c, e] = ps[y];
        if ((a < c && c < b && b < e) || (c < a && a < e && e < b)) {
          throw ParseError("chords " + d.label(a) + "-" + d.label(b) + " and " + d.label(c) +
                           "-" + d.label(e) + " cross");
        }
      }
    return d;
  }

  static TLDiagram identity(std::size_t n) {
    std::vector<Pair> p;
    for (std::size_t c = 1; c <= n; ++c) p.emplace_back(top(c), bottom(n, c));
    return from_pairs(n, p);
  }

  /// Generator e_i: t_i-t_{i+1}, b_i-b_{i+1}, all other strands vertical.
  static TLDiagram hook(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw RangeError("hook index must lie in 1..n-1");
    std::vector<Pair> p{{top(i), top(i + 1)}, {bottom(n, i + 1), bottom(n, i)}};
    for (std::size_t c = 1; c <= n; ++c)
      if (c != i && c != i + 1) p.emplace_back(top(c), bottom(n, c));
    return from_pairs(n, p);
  }

  static constexpr std::size_t top(std::size_t c) { return c - 1; }
  static constexpr std::size_t bottom(std::size_t n, std::size_t c) { return 2 * n - c; }

  std::size_t strands() const noexcept { return n_; }
  std::size_t partner(std::size_t p) const { return match_.at(p); }
  bool is_top(std::size_t p) const noexcept { return p < n_; }
  /// 1-based column of a position.
  std::size_t column(std::size_t p) const noexcept { return p < n_ ? p + 1 : 2 * n_ - p; }

  /// Chords (p, q) with p < q, sorted by p.
  std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    for (std::size_t p = 0; p < match_.size(); ++p)
      if (p < match_[p]) out.emplace_back(p, match_[p]);
    return out;
  }

  std::size_t through_strands() const {
    std::size_t k = 0;
    for (std::size_t c = 1; c <= n_; ++c) k += !is_top(match_[top(c)]);
    return k;
  }

  /// Left-right reflection.
  TLDiagram mirrored() const {
    auto flip = [this](std::size_t p) {
      const std::size_t c = n_ + 1 - column(p);
      return is_top(p) ? top(c) : bottom(n_, c);
    };
    std::vector<Pair> p;
    for (auto [a, b] : pairs()) p.emplace_back(flip(a), flip(b));
    return from_pairs(n_, p);
  }

  /// Top-bottom reflection (the monoid anti-involution).
  TLDiagram flipped() const {
    auto flip = [this](std::size_t p) {
      return is_top(p) ? bottom(n_, column(p)) : top(column(p));
    };
    std::vector<Pair> p;
    for (auto [a, b] : pairs()) p.emplace_back(flip(a), flip(b));
    return from_pairs(n_, p);
  }

  std::string label(std::size_t p) const {
    return (is_top(p) ? "t" : "b") + std::to_string(column(p));
  }

  /// `3; t1-t2, t3-b3, b2-b1`
  std::string to_string() const {
    std::string s = std::to_string(n_) + ";";
    bool first = true;
    for (auto [a, b] : pairs()) {
      s += first ? " " : ", ";
      s += label(a) + "-" + label(b);
      first = false;
    }
    return s;
  }

  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;
  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;

 private:
  static constexpr std::uint8_t kFree = 0xff;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> match_;
};

inline TLDiagram parse_diagram(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("diagram must look like 'n; t1-b1, ...'");
  std::size_t n = 0;
  try {
    n = std::stoul(std::string(text.substr(0, semi)));
  } catch (const std::exception&) {
    throw ParseError("bad strand count in '" + std::string(text) + "'");
  }
  if (n == 0 || n > 127) throw RangeError("strand count out of range");

  std::string body;
  for (char ch : text.substr(semi + 1))
    if (!std::isspace(static_cast<unsigned char>(ch))) body += ch;

  auto point = [&](const std::string& tok) -> std::size_t {
    if (tok.size() < 2 || (tok[0] != 't' && tok[0] != 'b') ||
        !std::all_of(tok.begin() + 1, tok.end(), ::isdigit)) {
      throw ParseError("bad boundary label '" + tok + "'");
    }
    const std::size_t c = std::stoul(tok.substr(1));
    if (c < 1 || c > n) throw RangeError("label '" + tok + "' out of range");
    return tok[0] == 't' ? TLDiagram::top(c) : TLDiagram::bottom(n, c);
  };

  std::vector<TLDiagram::Pair> pairs;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t end = std::min(body.find(',', pos), body.size());
    const std::string chord = body.substr(pos, end - pos);
    const auto dash = chord.find('-');
    if (dash == std::string::npos) throw ParseError("bad chord '" + chord + "'");
    pairs.emplace_back(point(chord.substr(0, dash)), point(chord.substr(dash + 1)));
    pos = end + 1;
  }
  return TLDiagram::from_pairs(n, pairs);
}

// ---------------------------------------------------------------------------

inline std::uint64_t catalan(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c[n];
}

namespace detail {
// Non-crossing perfect matchings of positions lo..hi-1: lo pairs with some
// k, the arcs inside (lo, k) and outside (k, hi) are independent.
inline void matchings_from(std::vector<std::pair<std::size_t, std::size_t>> ranges,
                           std::vector<TLDiagram::Pair>& cur,
                           std::vector<std::vector<TLDiagram::Pair>>& out) {
  while (!ranges.empty() && ranges.back().first >= ranges.back().second) ranges.pop_back();
  if (ranges.empty()) {
    out.push_back(cur);
    return;
  }
  auto [lo, hi] = ranges.back();
  ranges.pop_back();
  for (std::size_t k = lo + 1; k < hi; k += 2) {
    cur.emplace_back(lo, k);
    auto next = ranges;
    next.emplace_back(k + 1, hi);
    next.emplace_back(lo + 1, k);
    matchings_from(std::move(next), cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All Catalan(n) diagrams of J_n in a fixed order.
inline std::vector<TLDiagram> enumerate_diagrams(std::size_t n, std::size_t cap = kMaxStrands) {
  if (n == 0) throw RangeError("n must be at least 1");
  if (n > cap) {
    throw ResourceLimit("J_" + std::to_string(n) + " exceeds the strand cap " +
                        std::to_string(cap));
  }
  std::vector<std::vector<TLDiagram::Pair>> raw;
  std::vector<TLDiagram::Pair> cur;
  detail::matchings_from({{0, 2 * n}}, cur, raw);
  std::vector<TLDiagram> out;
  out.reserve(raw.size());
  for (const auto& p : raw) out.push_back(TLDiagram::from_pairs(n, p));
  std::sort(out.begin(), out.end());
  return out;
}

struct Composite {
  TLDiagram diagram;
  std::size_t loops = 0;
};

/// Stacks a over b (the bottom of a glued to the top of b) and traces the
/// strands. Closed loops in the middle are counted and removed.
inline Composite compose(const TLDiagram& a, const TLDiagram& b) {
  const std::size_t n = a.strands();
  if (b.strands() != n) {
    throw StrandMismatch("cannot compose diagrams with " + std::to_string(n) + " and " +
                         std::to_string(b.strands()) + " strands");
  }
  // Middle points are the columns 1..n; visited marks them.
  std::vector<char> middle_seen(n + 1, 0);
  std::vector<TLDiagram::Pair> out;

  // Walk from an outer endpoint (in_a tells which diagram it belongs to)
  // until the strand leaves through the other outer boundary or returns.
  auto walk = [&](bool in_a, std::size_t p) -> std::size_t {
    while (true) {
      const TLDiagram& d = in_a ? a : b;
      const std::size_t q = d.partner(p);
      const bool outer = in_a ? d.is_top(q) : !d.is_top(q);
      if (outer) return in_a ? q : TLDiagram::bottom(n, d.column(q));
      const std::size_t c = d.column(q);
      middle_seen[c] = 1;
      in_a = !in_a;
      p = in_a ? TLDiagram::bottom(n, c) : TLDiagram::top(c);
    }
  };

  std::vector<char> done(2 * n, 0);
  for (std::size_t c = 1; c <= n; ++c) {
    for (bool upper : {true, false}) {
      const std::size_t p = upper ? TLDiagram::top(c) : TLDiagram::bottom(n, c);
      if (done[p]) continue;
      const std::size_t q = walk(upper, p);
      done[p] = done[q] = 1;
      out.emplace_back(p, q);
    }
  }

  // Any unvisited middle column lies on a closed loop.
  std::size_t loops = 0;
  for (std::size_t c = 1; c <= n; ++c) {
    if (middle_seen[c]) continue;
    ++loops;
    std::size_t col = c;
    bool in_a = true;
    do {
      const TLDiagram& d = in_a ? a : b;
      const std::size_t p = in_a ? TLDiagram::bottom(n, col) : TLDiagram::top(col);
      col = d.column(d.partner(p));
      middle_seen[col] = 1;
      in_a = !in_a;
    } while (!(in_a && col == c));
  }
  return {TLDiagram::from_pairs(n, out), loops};
}

/// Jones-monoid product: composition with loops discarded.
inline TLDiagram operator*(const TLDiagram& a, const TLDiagram& b) { return compose(a, b).diagram; }

inline bool is_idempotent_diagram(const TLDiagram& d) { return d * d == d; }

inline std::size_t count_idempotents(std::size_t n, std::size_t cap = kMaxStrands) {
  std::size_t k = 0;
  for (const auto& d : enumerate_diagrams(n, cap)) k += is_idempotent_diagram(d);
  return k;
}

// ---------------------------------------------------------------------------
// Partitions

/// Ordered parts (a_1, ..., a_k) of the strand count.
using Partition = std::vector<std::size_t>;

inline std::size_t partition_total(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), std::size_t{0});
}

inline std::string to_string(const Partition& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "+" : "") + std::to_string(p[k]);
  return s;
}

/// `2+1+2+5`, spaces allowed.
inline Partition parse_partition(std::string_view text) {
  Partition p;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("bad partition '" + std::string(text) + "'");
    const std::size_t v = std::stoul(cur);
    if (v == 0) throw ParseError("partition parts must be positive");
    p.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '+') flush();
    else if (std::isdigit(static_cast<unsigned char>(ch)) && cur.size() < 6) cur += ch;
    else throw ParseError("bad partition '" + std::string(text) + "'");
  }
  flush();
  return p;
}

/// True when no strand joins two different blocks; block j holds columns
/// c_{j-1}+1 .. c_j for the prefix sums c.
inline bool admits_partition(const TLDiagram& d, const Partition& p) {
  if (partition_total(p) != d.strands()) {
    throw PartitionMismatch("partition " + to_string(p) + " does not sum to " +
                            std::to_string(d.strands()));
  }
  std::vector<std::size_t> block(d.strands() + 1);
  std::size_t c = 1;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t k = 0; k < p[j]; ++k) block[c++] = j;
  for (auto [a, b] : d.pairs())
    if (block[d.column(a)] != block[d.column(b)]) return false;
  return true;
}

struct Jsmp {
  Partition partition;
  std::vector<TLDiagram> elements;
  bool verified = false;  // closure and idempotence were checked
};

/// Diagrams of J_n admitting the partition. For parts up to 3 the result is
/// checked to be closed and idempotent; larger parts need allow_large_parts.
inline Jsmp jsmp(std::size_t n, const Partition& p, bool allow_large_parts = false,
                 std::size_t cap = kMaxStrands) {
  if (partition_total(p) != n) {
    throw PartitionMismatch("partition " + to_string(p) + " does not sum to " +
                            std::to_string(n));
  }
  const bool small = std::all_of(p.begin(), p.end(), [](std::size_t a) { return a <= 3; });
  if (!small && !allow_large_parts) {
    throw InvalidPartition("partition " + to_string(p) +
                           " has a part larger than 3; the sub-monoid need not be idempotent");
  }
  Jsmp out{p, {}, false};
  for (auto& d : enumerate_diagrams(n, cap))
    if (admits_partition(d, p)) out.elements.push_back(std::move(d));
  if (!small) return out;

  for (const auto& x : out.elements) {
    if (!is_idempotent_diagram(x)) {
      throw InternalConsistencyError("JSMP element " + x.to_string() + " is not idempotent");
    }
    for (const auto& y : out.elements)
      if (!admits_partition(x * y, p)) {
        throw InternalConsistencyError("JSMP is not closed at " + x.to_string() + " * " +
                                       y.to_string());
      }
  }
  out.verified = true;
  return out;
}

/// Multiplication table of a set of diagrams in the given order.
inline MulTable to_mul_table(const std::vector<TLDiagram>& s) {
  if (s.empty()) throw NotClosed("empty diagram set");
  std::map<TLDiagram, Element> index;
  for (std::size_t k = 0; k < s.size(); ++k) index.emplace(s[k], static_cast<Element>(k));
  std::vector<Element> cells;
  cells.reserve(s.size() * s.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      auto it = index.find(s[a] * s[b]);
      if (it == index.end()) {
        throw NotClosed("product of elements " + std::to_string(a) + " and " + std::to_string(b) +
                        " (" + s[a].to_string() + " * " + s[b].to_string() +
                        ") leaves the set");
      }
      cells.push_back(it->second);
    }
  return MulTable::from_flat(s.size(), std::move(cells));
}

/// Ordered partitions of n with every part at most max_part.
inline std::vector<Partition> compositions(std::size_t n, std::size_t max_part) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, std::size_t left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t a = 1; a <= std::min(left, max_part); ++a) {
      cur.push_back(a);
      self(self, left - a);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

// ---------------------------------------------------------------------------
// Integer partitions (unordered)

/// n_k = (n-k)_k + (n-1)_{k-1}, with n_1 = 1 for n >= 1 and n_k = 0 for
/// n < k.
inline std::uint64_t partition_recurrence(std::size_t n, std::size_t k) {
  if (k == 0 || n < k) return 0;
  if (k == 1) return 1;
  std::vector<std::vector<std::uint64_t>> v(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t m = 1; m <= n; ++m) {
    v[m][1] = 1;
    for (std::size_t j = 2; j <= std::min(m, k); ++j) v[m][j] = v[m - j][j] + v[m - 1][j - 1];
  }
  return v[n][k];
}

namespace detail {
template <class Pred>
std::uint64_t count_partitions(std::size_t n, Pred keep) {
  std::uint64_t count = 0;
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t left, std::size_t max) -> void {
    if (left == 0) {
      count += keep(parts);
      return;
    }
    for (std::size_t a = std::min(left, max); a >= 1; --a) {
      parts.push_back(a);
      self(self, left - a, a);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return count;
}
}  // namespace detail

/// Partitions of n into exactly k parts, by enumeration.
inline std::uint64_t partitions_with_parts(std::size_t n, std::size_t k) {
  return detail::count_partitions(n, [k](const auto& p) { return p.size() == k; });
}

/// Partitions of n whose largest part is exactly k, by enumeration.
inline std::uint64_t partitions_with_largest(std::size_t n, std::size_t k) {
  return detail::count_partitions(n, [k](const auto& p) { return p.front() == k; });
}

/// Partitions of n with every part at most k, by enumeration.
inline std::uint64_t partitions_parts_at_most(std::size_t n, std::size_t k) {
  return detail::count_partitions(n, [k](const auto& p) { return p.front() <= k; });
}

struct PartitionSequences {
  std::vector<std::uint64_t> recurrence;          // n_3 as stated, n = 1..m
  std::vector<std::uint64_t> exactly_three;       // brute force, exactly 3 parts
  std::vector<std::uint64_t> largest_three;       // brute force, largest part 3
  std::vector<std::uint64_t> parts_at_most_three; // brute force, parts <= 3
  std::vector<std::uint64_t> recurrence_shifted;  // n_3 evaluated at n + 3
};

inline PartitionSequences partition_sequences(std::size_t m) {
  PartitionSequences s;
  for (std::size_t n = 1; n <= m; ++n) {
    s.recurrence.push_back(partition_recurrence(n, 3));
    s.exactly_three.push_back(partitions_with_parts(n, 3));
    s.largest_three.push_back(partitions_with_largest(n, 3));
    s.parts_at_most_three.push_back(partitions_parts_at_most(n, 3));
    s.recurrence_shifted.push_back(partition_recurrence(n + 3, 3));
  }
  return s;
}

}  // namespace lbo
