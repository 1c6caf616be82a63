#pragma once

// Regeneration of the reference homology tables and comparison against the
// bundled golden transcriptions in data/golden.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lbo/complex.hpp"
#include "lbo/error.hpp"
#include "lbo/jones.hpp"
#include "lbo/magma.hpp"
#include "lbo/snf.hpp"

#ifndef LBO_GOLDEN_DIR
#define LBO_GOLDEN_DIR "data/golden"
#endif

namespace lbo {

/// Explicit argument, then $LBO_GOLDEN_DIR, then the compiled-in default.
inline std::filesystem::path golden_dir(const std::string& override_dir = {}) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("LBO_GOLDEN_DIR"); env && *env) return env;
  return LBO_GOLDEN_DIR;
}

struct HomologyRow {
  bool marker = false;  // family overlap flag
  MulTable table{std::vector<std::vector<long long>>{{0}}};
  std::vector<HomologyGroup> groups;  // H_0..H_3
};

struct CountRow {
  std::size_t n = 0;
  std::uint64_t count = 0;
};

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t bar = line.find('|', pos);
    std::string f = line.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
    if (bar == std::string::npos) return out;
    pos = bar + 1;
  }
}

inline std::vector<std::vector<std::string>> read_golden(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw GoldenFileMissing("golden file not found: " + p.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(split_fields(line));
  }
  return rows;
}

}  // namespace detail

inline std::filesystem::path golden_path(int which, const std::string& dir = {}) {
  return golden_dir(dir) / ("table" + std::to_string(which) + ".txt");
}

/// Rows of table 5, 6 or 7. Tables 5 and 6 carry a leading marker column.
inline std::vector<HomologyRow> load_homology_golden(int which, const std::string& dir = {}) {
  if (which < 5 || which > 7) throw Unsupported("no homology table " + std::to_string(which));
  const bool marked = which != 7;
  std::vector<HomologyRow> out;
  for (const auto& f : detail::read_golden(golden_path(which, dir))) {
    const std::size_t off = marked ? 1 : 0;
    if (f.size() != off + 5) throw ParseError("golden row has " + std::to_string(f.size()) + " fields");
    HomologyRow r;
    r.marker = marked && f[0] == "*";
    r.table = parse_table(f[off]);
    for (std::size_t k = 0; k < 4; ++k) r.groups.push_back(parse_group(f[off + 1 + k]));
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<CountRow> load_count_golden(const std::string& dir = {}) {
  std::vector<CountRow> out;
  for (const auto& f : detail::read_golden(golden_path(4, dir))) {
    if (f.size() != 2) throw ParseError("table 4 rows are 'n | count'");
    out.push_back({std::stoul(f[0]), std::stoull(f[1])});
  }
  return out;
}

// ---------------------------------------------------------------------------

inline constexpr std::size_t kTableDegree = 3;

/// Marker semantics: table 5 flags idempotent rows, table 6 flags
/// right-self-distributive rows.
inline bool table_marker(int which, const MulTable& t) {
  if (which == 5) return is_idempotent(t);
  if (which == 6) return is_right_self_distributive(t);
  return false;
}

inline HomologyRow compute_row(int which, const MulTable& t) {
  return {table_marker(which, t), t, homology_range(Theory::LboCyclic, t, kTableDegree)};
}

/// Table 4: idempotent counts in J_n.
inline std::vector<CountRow> regenerate_counts(std::size_t n_max = 9) {
  std::vector<CountRow> out;
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back({n, count_idempotents(n)});
  return out;
}

/// Table 5 comes from enumerating associative shelves of orders 2 and 3 up to
/// isomorphism. Tables 6 and 7 are selections, so their tables are read from
/// the golden file and only the homology is recomputed.
inline std::vector<HomologyRow> regenerate_homology(int which, const std::string& dir = {}) {
  std::vector<HomologyRow> out;
  if (which == 5) {
    for (std::size_t order : {2u, 3u})
      for (const auto& t : enumerate(order, Family::AssocShelf, true))
        out.push_back(compute_row(5, t));
    return out;
  }
  for (const auto& g : load_homology_golden(which, dir)) out.push_back(compute_row(which, g.table));
  return out;
}

/// Checks the selected tables belong to their family.
inline std::vector<std::string> family_violations(int which, const std::vector<HomologyRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    const auto& t = r.table;
    bool ok = true;
    if (which == 5) ok = in_family(t, Family::AssocShelf);
    if (which == 6) ok = in_family(t, Family::IdempotentSemigroup);
    if (which == 7) {
      ok = in_family(t, Family::AbbcSemigroup) && !is_idempotent(t) &&
           !is_right_self_distributive(t);
    }
    if (!ok) out.push_back(t.to_brace() + " is outside the family of table " + std::to_string(which));
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::string render_row(int which, const HomologyRow& r) {
  std::string s;
  if (which != 7) s += r.marker ? "* | " : "- | ";
  s += r.table.to_brace();
  for (const auto& g : r.groups) s += " | " + g.to_string();
  return s;
}

inline std::string render_homology_table(int which, const std::vector<HomologyRow>& rows) {
  std::string s;
  for (const auto& r : rows) s += render_row(which, r) + "\n";
  return s;
}

inline std::string render_count_table(const std::vector<CountRow>& rows) {
  std::string s;
  for (const auto& r : rows) s += std::to_string(r.n) + " | " + std::to_string(r.count) + "\n";
  return s;
}

struct TableDiff {
  int which = 0;
  std::vector<std::string> mismatches;  // numeric or row-set differences
  std::vector<std::string> notes;       // marker disagreements and similar
  std::size_t rows_compared = 0;

  bool identical() const noexcept { return mismatches.empty(); }

  std::string report() const {
    std::string s;
    for (const auto& m : mismatches) s += "MISMATCH " + m + "\n";
    for (const auto& n : notes) s += "note: " + n + "\n";
    s += "table " + std::to_string(which) + ": " +
         (identical() ? "match (" + std::to_string(rows_compared) + " rows)"
                      : std::to_string(mismatches.size()) + " mismatch(es) in " +
                            std::to_string(rows_compared) + " rows") +
         "\n";
    return s;
  }
};

inline TableDiff diff_homology(int which, const std::vector<HomologyRow>& golden,
                               const std::vector<HomologyRow>& actual) {
  TableDiff d;
  d.which = which;
  d.rows_compared = std::max(golden.size(), actual.size());
  for (std::size_t k = 0; k < std::max(golden.size(), actual.size()); ++k) {
    const std::string where = "row " + std::to_string(k + 1);
    if (k >= golden.size()) {
      d.mismatches.push_back(where + ": extra row " + actual[k].table.to_brace());
      continue;
    }
    if (k >= actual.size()) {
      d.mismatches.push_back(where + ": missing row " + golden[k].table.to_brace());
      continue;
    }
    const auto& g = golden[k];
    const auto& a = actual[k];
    if (!(g.table == a.table)) {
      d.mismatches.push_back(where + ": expected table " + g.table.to_brace() + ", got " +
                             a.table.to_brace());
      continue;
    }
    for (std::size_t n = 0; n < g.groups.size() && n < a.groups.size(); ++n)
      if (!(g.groups[n] == a.groups[n])) {
        d.mismatches.push_back(where + " " + g.table.to_brace() + ": H_" + std::to_string(n) +
                               " expected " + g.groups[n].to_string() + ", got " +
                               a.groups[n].to_string());
      }
    if (g.marker != a.marker) {
      d.notes.push_back(where + " " + g.table.to_brace() + ": marker transcribed as " +
                        (g.marker ? "set" : "unset") + ", predicates say " +
                        (a.marker ? "set" : "unset"));
    }
  }
  for (const auto& v : family_violations(which, actual)) d.notes.push_back(v);
  return d;
}

inline TableDiff diff_counts(const std::vector<CountRow>& golden, const std::vector<CountRow>& actual) {
  TableDiff d;
  d.which = 4;
  d.rows_compared = std::max(golden.size(), actual.size());
  for (std::size_t k = 0; k < d.rows_compared; ++k) {
    if (k >= golden.size() || k >= actual.size()) {
      d.mismatches.push_back("row count differs");
      break;
    }
    if (golden[k].n != actual[k].n || golden[k].count != actual[k].count) {
      d.mismatches.push_back("n=" + std::to_string(golden[k].n) + ": expected " +
                             std::to_string(golden[k].count) + ", got " +
                             std::to_string(actual[k].count));
    }
  }
  return d;
}

inline TorsionScan torsion_scan(int which, const std::vector<HomologyRow>& rows) {
  TorsionScan scan;
  for (const auto& r : rows) scan.add("table " + std::to_string(which) + " " + r.table.to_brace(), r.groups);
  return scan;
}

/// H_2 across the order-4 rows of table 6: zero everywhere but the listed
/// exceptions.
inline std::string h2_pattern_report(const std::vector<HomologyRow>& rows) {
  std::string s;
  std::size_t zero = 0, total = 0;
  for (const auto& r : rows) {
    if (r.table.order() != 4 || r.groups.size() < 3) continue;
    ++total;
    if (r.groups[2].is_trivial()) {
      ++zero;
    } else {
      s += "  H_2 = " + r.groups[2].to_string() + " for " + r.table.to_brace() + "\n";
    }
  }
  return "H_2 = 0 on " + std::to_string(zero) + " of " + std::to_string(total) +
         " order-4 idempotent semigroups\n" + s;
}

}  // namespace lbo
