#pragma once

// Exact integer linear algebra: Smith normal form, rational rank, and
// homology groups assembled from consecutive boundary matrices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lbo/complex.hpp"
#include "lbo/error.hpp"
#include "lbo/matrix.hpp"

namespace lbo {

struct SmithForm {
  std::vector<BigInt> diagonal;  // invariant factors d_1 | d_2 | ... , all positive
  std::size_t rank = 0;
  bool promoted = false;         // true when 64-bit arithmetic overflowed

  /// Invariant factors greater than one.
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> out;
    for (const auto& d : diagonal)
      if (d > 1) out.push_back(d);
    return out;
  }
};

namespace detail {

template <class T>
struct Work {
  std::size_t rows, cols;
  std::vector<std::vector<T>> a;
};

template <class T>
Work<T> load(const IntMatrix& m) {
  Work<T> w{m.rows(), m.cols(), {}};
  w.a.assign(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) w.a[r][c] = T(m(r, c));
  return w;
}

// Diagonalizes by unimodular row/column operations. Pivot: smallest nonzero
// magnitude among the unused rows and columns, ties to the lowest (row, col).
// The returned diagonal is not yet a divisibility chain.
template <class T>
std::vector<BigInt> diagonalize(Work<T> w) {
  std::vector<BigInt> diag;
  std::vector<char> row_used(w.rows, 0), col_used(w.cols, 0);
  std::vector<std::size_t> live_rows, live_cols;
  auto& a = w.a;

  while (true) {
    // Pivot search.
    std::size_t pr = 0, pc = 0;
    T best = 0;
    bool found = false;
    for (std::size_t r = 0; r < w.rows && !(found && best == 1); ++r) {
      if (row_used[r]) continue;
      const auto& row = a[r];
      for (std::size_t c = 0; c < w.cols; ++c) {
        if (col_used[c] || row[c] == 0) continue;
        T mag = abs_value(row[c]);
        if (!found || mag < best) {
          best = mag;
          pr = r;
          pc = c;
          found = true;
          if (best == 1) break;
        }
      }
    }
    if (!found) break;

    // Euclidean reduction of pivot row and column until both are clear.
    while (true) {
      const T p = a[pr][pc];
      bool remainder = false;

      live_cols.clear();
      for (std::size_t c = 0; c < w.cols; ++c)
        if (!col_used[c] && c != pc && a[pr][c] != 0) live_cols.push_back(c);

      for (std::size_t r = 0; r < w.rows; ++r) {
        if (row_used[r] || r == pr || a[r][pc] == 0) continue;
        const T q = a[r][pc] / p;
        if (q != 0) {
          auto& row = a[r];
          const auto& prow = a[pr];
          row[pc] = mul_sub(row[pc], q, p);
          for (std::size_t c : live_cols) row[c] = mul_sub(row[c], q, prow[c]);
        }
        if (a[r][pc] != 0) remainder = true;
      }

      live_rows.clear();
      for (std::size_t r = 0; r < w.rows; ++r)
        if (!row_used[r] && r != pr && a[r][pc] != 0) live_rows.push_back(r);

      for (std::size_t c : live_cols) {
        const T q = a[pr][c] / p;
        if (q != 0) {
          a[pr][c] = mul_sub(a[pr][c], q, p);
          for (std::size_t r : live_rows) a[r][c] = mul_sub(a[r][c], q, a[r][pc]);
        }
        if (a[pr][c] != 0) remainder = true;
      }

      if (!remainder) break;

      // Move to the smallest remainder in the pivot row or column.
      T m = abs_value(p);
      std::size_t nr = pr, nc = pc;
      for (std::size_t r = 0; r < w.rows; ++r)
        if (!row_used[r] && r != pr && a[r][pc] != 0 && abs_value(a[r][pc]) < m) {
          m = abs_value(a[r][pc]);
          nr = r;
          nc = pc;
        }
      for (std::size_t c = 0; c < w.cols; ++c)
        if (!col_used[c] && c != pc && a[pr][c] != 0 && abs_value(a[pr][c]) < m) {
          m = abs_value(a[pr][c]);
          nr = pr;
          nc = c;
        }
      pr = nr;
      pc = nc;
    }

    diag.emplace_back(BigInt(abs_value(a[pr][pc])));
    row_used[pr] = 1;
    col_used[pc] = 1;
  }
  return diag;
}

// diag(a, b) ~ diag(gcd, lcm); pairwise sweeps give the invariant factors.
inline void normalize_invariant_factors(std::vector<BigInt>& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      BigInt g = gcd(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
}

}  // namespace detail

/// Smith normal form of an integer matrix: invariant factors and rank.
/// Runs on checked 64-bit integers and repeats on unbounded integers if any
/// intermediate value would overflow.
inline SmithForm smith_normal_form(const IntMatrix& m, std::size_t max_dimension = 1u << 14) {
  if (m.rows() > max_dimension || m.cols() > max_dimension) {
    throw ResourceLimit("matrix of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " exceeds the SNF dimension cap " + std::to_string(max_dimension));
  }
  SmithForm out;
  try {
    out.diagonal = detail::diagonalize(detail::load<std::int64_t>(m));
  } catch (const Overflow&) {
    out.diagonal = detail::diagonalize(detail::load<BigInt>(m));
    out.promoted = true;
  }
  detail::normalize_invariant_factors(out.diagonal);
  out.rank = out.diagonal.size();
  return out;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination on
/// unbounded integers. Independent of the SNF code path.
inline std::size_t rank_rational(const IntMatrix& m, std::size_t max_dimension = 1u << 12) {
  if (m.rows() > max_dimension || m.cols() > max_dimension) {
    throw ResourceLimit("matrix exceeds the rational-rank dimension cap");
  }
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);

  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t k = c + 1; k < m.cols(); ++k)
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------

/// Finitely generated abelian group Z^betti (+) Z/t_1 (+) ... with
/// t_1 | t_2 | ... and every t_i > 1.
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  bool is_free() const noexcept { return torsion.empty(); }
  bool is_trivial() const noexcept { return betti == 0 && torsion.empty(); }

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

  /// `0`, `Z`, `Z^3`, `Z^2 (+) Z/2 (+) Z/6`.
  std::string to_string() const {
    std::vector<std::string> parts;
    if (betti == 1) parts.emplace_back("Z");
    else if (betti > 1) parts.push_back("Z^" + std::to_string(betti));
    for (const auto& d : torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) s += " (+) " + parts[k];
    return s;
  }
};

/// Inverse of HomologyGroup::to_string; also accepts `Z^1` and `Z^0`.
inline HomologyGroup parse_group(std::string_view text) {
  HomologyGroup g;
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s == "0") return g;
  std::size_t pos = 0;
  auto fail = [&]() -> HomologyGroup { throw ParseError("bad group '" + std::string(text) + "'"); };
  while (pos < s.size()) {
    const std::size_t end = std::min(s.find("(+)", pos), s.size());
    const std::string part = s.substr(pos, end - pos);
    if (part == "Z") {
      g.betti += 1;
    } else if (part.rfind("Z^", 0) == 0 && part.size() > 2 &&
               std::all_of(part.begin() + 2, part.end(), ::isdigit)) {
      g.betti += std::stoul(part.substr(2));
    } else if (part.rfind("Z/", 0) == 0 && part.size() > 2 &&
               std::all_of(part.begin() + 2, part.end(), ::isdigit)) {
      BigInt d(part.substr(2));
      if (d < 2) return fail();
      g.torsion.push_back(d);
    } else {
      return fail();
    }
    pos = end == s.size() ? end : end + 3;
  }
  for (std::size_t k = 1; k < g.torsion.size(); ++k)
    if (g.torsion[k] % g.torsion[k - 1] != 0) return fail();
  return g;
}

inline void to_json(nlohmann::json& j, const HomologyGroup& g) {
  std::vector<std::string> tors;
  for (const auto& d : g.torsion) tors.push_back(d.str());
  j = nlohmann::json{{"betti", g.betti}, {"torsion", tors}, {"text", g.to_string()}};
}

inline void from_json(const nlohmann::json& j, HomologyGroup& g) {
  g.betti = j.at("betti").get<std::size_t>();
  g.torsion.clear();
  for (const auto& d : j.at("torsion")) g.torsion.emplace_back(d.get<std::string>());
}

// ---------------------------------------------------------------------------

namespace detail {
// Under --force the complex may not be one; refuse to report homology then.
inline void check_composite(Theory th, const MulTable& t, const IntMatrix& lower,
                            const IntMatrix& upper, std::size_t n, const ComplexOptions& opts) {
  if (!opts.force || is_eligible(th, t) || lower.rows() == 0) return;
  if (!multiply(lower, upper).is_zero()) {
    throw NotAChainComplex("boundary_" + std::to_string(n) + " * boundary_" +
                           std::to_string(n + 1) + " != 0 for " + std::string(to_string(th)) +
                           " on " + t.to_brace() + "; homology is undefined");
  }
}

inline HomologyGroup assemble(std::size_t dim, const SmithForm& lower, const SmithForm& upper) {
  HomologyGroup g;
  g.betti = dim - lower.rank - upper.rank;
  g.torsion = upper.torsion();
  return g;
}
}  // namespace detail

/// H_n for n = 0..n_max; every boundary matrix is built and reduced once.
inline std::vector<HomologyGroup> homology_range(Theory th, const MulTable& t, std::size_t n_max,
                                                 const ComplexOptions& opts = {}) {
  require_eligible(th, t, opts.force);
  // Fail fast on the largest matrix before doing any work.
  basis_size(t.order(), n_max + 2, opts.max_columns);

  std::vector<HomologyGroup> out;
  IntMatrix lower = boundary_matrix(th, t, 0, opts);
  SmithForm lower_snf;  // rank 0
  for (std::size_t n = 0; n <= n_max; ++n) {
    IntMatrix upper = boundary_matrix(th, t, n + 1, opts);
    detail::check_composite(th, t, lower, upper, n, opts);
    SmithForm upper_snf = smith_normal_form(upper);
    out.push_back(detail::assemble(basis_size(t.order(), n + 1), lower_snf, upper_snf));
    lower = std::move(upper);
    lower_snf = std::move(upper_snf);
  }
  return out;
}

/// Single degree: betti = dim C_n - rank d_n - rank d_{n+1}, torsion from
/// the invariant factors of d_{n+1}.
inline HomologyGroup homology(Theory th, const MulTable& t, std::size_t n,
                              const ComplexOptions& opts = {}) {
  require_eligible(th, t, opts.force);
  basis_size(t.order(), n + 2, opts.max_columns);
  const IntMatrix lower = boundary_matrix(th, t, n, opts);
  const IntMatrix upper = boundary_matrix(th, t, n + 1, opts);
  detail::check_composite(th, t, lower, upper, n, opts);
  const SmithForm lo = n == 0 ? SmithForm{} : smith_normal_form(lower);
  return detail::assemble(basis_size(t.order(), n + 1), lo, smith_normal_form(upper));
}

// ---------------------------------------------------------------------------

/// Collects every torsion coefficient seen across a batch of computations.
class TorsionScan {
 public:
  struct Finding {
    std::string source;
    std::size_t degree;
    std::vector<BigInt> factors;
  };

  void add(const std::string& source, const std::vector<HomologyGroup>& groups) {
    for (std::size_t n = 0; n < groups.size(); ++n) {
      ++scanned_;
      if (!groups[n].torsion.empty()) findings_.push_back({source, n, groups[n].torsion});
    }
  }

  /// Scans the cokernel of a raw matrix (e.g. a crafted test input).
  void add_matrix(const std::string& source, const IntMatrix& m, std::size_t degree = 0) {
    ++scanned_;
    auto tors = smith_normal_form(m).torsion();
    if (!tors.empty()) findings_.push_back({source, degree, std::move(tors)});
  }

  bool clean() const noexcept { return findings_.empty(); }
  std::size_t scanned() const noexcept { return scanned_; }
  const std::vector<Finding>& findings() const noexcept { return findings_; }

  std::string report() const {
    if (findings_.empty()) {
      return "torsion scan: no invariant factor > 1 in " + std::to_string(scanned_) + " groups\n";
    }
    std::string s = "TORSION FOUND in " + std::to_string(findings_.size()) + " of " +
                    std::to_string(scanned_) + " groups:\n";
    for (const auto& f : findings_) {
      HomologyGroup g;
      g.torsion = f.factors;
      s += "  " + f.source + " degree " + std::to_string(f.degree) + ": " + g.to_string() + "\n";
    }
    return s;
  }

 private:
  std::size_t scanned_ = 0;
  std::vector<Finding> findings_;
};

}  // namespace lbo
