#pragma once

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lbo/lbo.hpp"

namespace lbo::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct RunConfig {
  std::string format = "text";
  std::size_t max_columns = 4096;
  std::size_t max_strands = 10;
  bool force = false;
};

namespace detail {

using json = nlohmann::ordered_json;

inline std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != std::string(v).size() || x <= 0) throw std::invalid_argument(name);
    return static_cast<std::size_t>(x);
  } catch (const std::exception&) {
    throw ParseError(std::string(name) + " must be a positive integer, got '" + v + "'");
  }
}

inline MulTable read_table(const std::string& arg, std::istream& in) {
  if (arg != "-") return parse_table(arg);
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_table(text);
}

inline const char* yes(bool b) { return b ? "yes" : "no"; }

inline std::string list(const std::vector<Element>& v) {
  if (v.empty()) return "none";
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

inline json groups_json(const std::vector<HomologyGroup>& gs) {
  json a = json::array();
  for (const auto& g : gs) {
    nlohmann::json j = g;
    a.push_back(json::parse(j.dump()));
  }
  return a;
}

inline std::string groups_text(const std::vector<HomologyGroup>& gs) {
  std::string s;
  for (const auto& g : gs) s += (s.empty() ? "" : " | ") + g.to_string();
  return s;
}

inline void print_report(std::ostream& out, const VerificationReport& r) {
  out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks";
  if (!r.passed()) out << ", " << r.violation_count << " violations";
  out << "\n";
  for (const auto& v : r.violations) out << "  " << v.to_string() << "\n";
  for (const auto& n : r.notes) out << "  " << n << "\n";
}

inline json report_json(const VerificationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back(x.to_string());
  return {{"name", r.name},       {"passed", r.passed()},  {"checks", r.checks},
          {"violations", r.violation_count}, {"listed", v}, {"notes", r.notes}};
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline int cmd_check(const MulTable& t, const RunConfig& cfg, std::ostream& out) {
  const ClassReport r = classify(t);
  if (cfg.format == "json") {
    detail::json j{{"table", t.to_brace()},
                   {"order", t.order()},
                   {"associative", r.associative},
                   {"right_self_distributive", r.right_self_distributive},
                   {"idempotent", r.idempotent},
                   {"commutative", r.commutative},
                   {"abbc", r.abbc},
                   {"proto_unital", r.proto_unital},
                   {"pre_unital", r.pre_unital},
                   {"unital", r.unital},
                   {"shelf", r.shelf},
                   {"spindle", r.spindle},
                   {"rack", r.rack},
                   {"homology_eligible", r.homology_eligible},
                   {"units", r.units},
                   {"zeros", r.zeros},
                   {"left_zeros", r.left_zeros},
                   {"right_zeros", r.right_zeros}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  using detail::yes;
  out << "table: " << t.to_brace() << "\n"
      << "order: " << t.order() << "\n"
      << "associative: " << yes(r.associative) << "\n"
      << "right-self-distributive: " << yes(r.right_self_distributive) << "\n"
      << "idempotent: " << yes(r.idempotent) << "\n"
      << "commutative: " << yes(r.commutative) << "\n"
      << "abbc: " << yes(r.abbc) << "\n"
      << "proto-unital: " << yes(r.proto_unital) << "\n"
      << "pre-unital: " << yes(r.pre_unital) << "\n"
      << "unital: " << yes(r.unital) << "\n"
      << "shelf: " << yes(r.shelf) << "\n"
      << "spindle: " << yes(r.spindle) << "\n"
      << "rack: " << yes(r.rack) << "\n"
      << "homology-eligible: " << yes(r.homology_eligible) << "\n"
      << "units: " << detail::list(r.units) << "\n"
      << "zeros: " << detail::list(r.zeros) << "\n"
      << "left-zeros: " << detail::list(r.left_zeros) << "\n"
      << "right-zeros: " << detail::list(r.right_zeros) << "\n";
  return kOk;
}

inline int cmd_homology(const MulTable& t, Theory th, std::size_t max_dim, const RunConfig& cfg,
                        std::ostream& out) {
  const ComplexOptions opts{cfg.force, cfg.max_columns};
  const auto gs = homology_range(th, t, max_dim, opts);
  if (cfg.format == "json") {
    detail::json j{{"table", t.to_brace()},
                   {"theory", std::string(to_string(th))},
                   {"groups", detail::groups_json(gs)}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t n = 0; n < gs.size(); ++n) out << "H_" << n << " = " << gs[n].to_string() << "\n";
  return kOk;
}

inline int cmd_verify(const MulTable& t, std::size_t max_dim, const RunConfig& cfg,
                      std::ostream& out) {
  const ComplexOptions opts{cfg.force, cfg.max_columns};
  std::vector<VerificationReport> reports;
  std::vector<std::string> skipped;
  for (Theory th : {Theory::LboCyclic, Theory::LboNonCyclic}) {
    if (cfg.force || is_eligible(th, t)) reports.push_back(verify_presimplicial(th, t, max_dim, true));
  }
  for (Theory th : kAllTheories) {
    if (cfg.force || is_eligible(th, t)) {
      reports.push_back(verify_boundary_squared(th, t, max_dim, {true, opts.max_columns}));
    } else {
      skipped.push_back(std::string(to_string(th)) + " (needs " +
                        std::string(eligibility_requirement(th)) + ")");
    }
  }
  const auto zeros = find_zeros(t);
  if (!zeros.empty() && (cfg.force || is_eligible(Theory::LboCyclic, t))) {
    reports.push_back(
        verify_very_weak_simplicial(t, zeros.front(), max_dim, Theory::LboCyclic, true).axioms);
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (cfg.format == "json") {
    detail::json a = detail::json::array();
    for (const auto& r : reports) a.push_back(detail::report_json(r));
    out << detail::json{{"table", t.to_brace()}, {"passed", ok}, {"reports", a}, {"skipped", skipped}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& r : reports) detail::print_report(out, r);
    for (const auto& s : skipped) out << "SKIP " << s << "\n";
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kOk : kFailure;
}

inline int cmd_enumerate(std::size_t order, Family f, bool up_to_iso, bool with_homology,
                         const RunConfig& cfg, std::ostream& out) {
  const auto tables = enumerate(order, f, up_to_iso);
  const ComplexOptions opts{cfg.force, cfg.max_columns};
  detail::json a = detail::json::array();
  for (const auto& t : tables) {
    std::vector<HomologyGroup> gs;
    if (with_homology) gs = homology_range(Theory::LboCyclic, t, kTableDegree, opts);
    if (cfg.format == "json") {
      detail::json j{{"table", t.to_brace()}};
      if (with_homology) j["groups"] = detail::groups_json(gs);
      a.push_back(j);
    } else {
      out << t.to_brace();
      if (with_homology) out << " | " << detail::groups_text(gs);
      out << "\n";
    }
  }
  if (cfg.format == "json") out << a.dump(2) << "\n";
  return kOk;
}

inline int cmd_jones_count(std::size_t n, bool census, const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t v = census ? count_idempotents(n, cfg.max_strands)
                                 : enumerate_diagrams(n, cfg.max_strands).size();
  if (cfg.format == "json") {
    out << detail::json{{"n", n}, {census ? "idempotents" : "diagrams", v}}.dump(2) << "\n";
  } else {
    out << v << "\n";
  }
  return kOk;
}

inline int cmd_jones_jsmp(std::size_t n, const std::string& parts, bool with_homology,
                          bool allow_large, const RunConfig& cfg, std::ostream& out) {
  const Partition p = parse_partition(parts);
  const Jsmp s = jsmp(n, p, allow_large, cfg.max_strands);
  const MulTable t = to_mul_table(s.elements);
  std::vector<HomologyGroup> gs;
  if (with_homology) {
    gs = homology_range(Theory::LboCyclic, t, kTableDegree, {cfg.force, cfg.max_columns});
  }
  if (cfg.format == "json") {
    detail::json els = detail::json::array();
    for (const auto& d : s.elements) els.push_back(d.to_string());
    detail::json j{{"n", n},           {"partition", to_string(p)},       {"size", s.elements.size()},
                   {"verified", s.verified}, {"elements", els}, {"table", t.to_brace()}};
    if (with_homology) j["groups"] = detail::groups_json(gs);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "JSMP_" << n << " for " << to_string(p) << ": " << s.elements.size() << " elements"
      << (s.verified ? "" : " (closure and idempotence not verified)") << "\n";
  for (std::size_t k = 0; k < s.elements.size(); ++k) out << "  " << k << ": " << s.elements[k].to_string() << "\n";
  out << "table: " << t.to_brace() << "\n";
  for (std::size_t n2 = 0; n2 < gs.size(); ++n2) out << "H_" << n2 << " = " << gs[n2].to_string() << "\n";
  return kOk;
}

inline int cmd_jones_compose(const std::string& a, const std::string& b, const RunConfig& cfg,
                             std::ostream& out) {
  const Composite c = compose(parse_diagram(a), parse_diagram(b));
  if (cfg.format == "json") {
    out << detail::json{{"diagram", c.diagram.to_string()}, {"loops", c.loops}}.dump(2) << "\n";
  } else {
    out << c.diagram.to_string() << "\nloops: " << c.loops << "\n";
  }
  return kOk;
}

inline int cmd_tables(const std::string& which, bool diff, const std::string& dir,
                      const RunConfig& cfg, std::ostream& out) {
  std::vector<int> ids;
  if (which == "all") ids = {4, 5, 6, 7};
  else if (which == "4" || which == "5" || which == "6" || which == "7") ids = {std::stoi(which)};
  else throw ParseError("--which must be 4, 5, 6, 7 or all");

  bool ok = true;
  detail::json a = detail::json::array();
  for (int w : ids) {
    detail::json j{{"which", w}};
    if (w == 4) {
      const auto rows = regenerate_counts(std::min<std::size_t>(9, cfg.max_strands));
      if (cfg.format == "json") {
        detail::json r = detail::json::array();
        for (const auto& x : rows) r.push_back({{"n", x.n}, {"idempotents", x.count}});
        j["rows"] = r;
      } else {
        out << "table 4\n" << render_count_table(rows);
      }
      if (diff) {
        const TableDiff d = diff_counts(load_count_golden(dir), rows);
        ok = ok && d.identical();
        j["match"] = d.identical();
        j["mismatches"] = d.mismatches;
        if (cfg.format != "json") out << d.report();
      }
    } else {
      const auto rows = regenerate_homology(w, dir);
      const TorsionScan scan = torsion_scan(w, rows);
      if (cfg.format == "json") {
        detail::json r = detail::json::array();
        for (const auto& x : rows) {
          detail::json row{{"table", x.table.to_brace()}, {"groups", detail::groups_json(x.groups)}};
          if (w != 7) row["marker"] = x.marker;
          r.push_back(row);
        }
        j["rows"] = r;
        j["torsion_free"] = scan.clean();
      } else {
        out << "table " << w << "\n" << render_homology_table(w, rows) << scan.report();
        if (w == 6) out << h2_pattern_report(rows);
      }
      if (diff) {
        const TableDiff d = diff_homology(w, load_homology_golden(w, dir), rows);
        ok = ok && d.identical();
        j["match"] = d.identical();
        j["mismatches"] = d.mismatches;
        j["notes"] = d.notes;
        if (cfg.format != "json") out << d.report();
      }
    }
    a.push_back(j);
  }
  if (cfg.format == "json") out << (ids.size() == 1 ? a[0] : a).dump(2) << "\n";
  return ok ? kOk : kFailure;
}

inline int cmd_skeleton(const MulTable& t, const std::string& kind, std::ostream& out) {
  out << export_skeleton(t, kind);
  return kOk;
}

inline int cmd_matrix(const MulTable& t, Theory th, std::size_t degree, const RunConfig& cfg,
                      std::ostream& out) {
  write_triplets(out, boundary_matrix(th, t, degree, {cfg.force, cfg.max_columns}));
  return kOk;
}

// ---------------------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   std::istream& in) {
  CLI::App app{"lbo: homology of semigroups and shelves, and the Jones monoid"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  RunConfig cfg;
  std::optional<std::size_t> max_columns, max_strands;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-columns", max_columns, "Cap on boundary matrix columns ($LBO_MAX_COLUMNS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-strands", max_strands, "Cap on diagram strands ($LBO_MAX_STRANDS)")
      ->check(CLI::PositiveNumber);

  std::string table_arg, theory = "lbo", family = "assoc-shelf", which, golden, kind = "graph",
                         parts, diag_a, diag_b;
  std::size_t max_dim = 3, verify_dim = 4, order = 0, n = 0, degree = 1;
  bool up_to_iso = false, with_homology = false, diff = false, allow_large = false;
  const std::string table_help = "Table in brace or JSON notation, or - for stdin";

  auto* check = app.add_subcommand("check", "Classify a multiplication table");
  check->add_option("table", table_arg, table_help)->required();

  auto* hom = app.add_subcommand("homology", "Integral homology H_0..H_max-dim");
  hom->add_option("table", table_arg, table_help)->required();
  hom->add_option("--theory", theory, "lbo, lbo-nc, group, hochschild, one-term or rack")
      ->capture_default_str();
  hom->add_option("--max-dim", max_dim, "Highest degree")->capture_default_str();
  hom->add_flag("--force", cfg.force, "Skip the eligibility check");

  auto* ver = app.add_subcommand("verify", "Check the simplicial identities exhaustively");
  ver->add_option("table", table_arg, table_help)->required();
  ver->add_option("--max-dim", verify_dim, "Highest degree checked")->capture_default_str();
  ver->add_flag("--force", cfg.force, "Also check theories the table is not eligible for");

  auto* en = app.add_subcommand("enumerate", "List all tables of a family");
  en->add_option("--order", order, "Number of elements (1..4)")->required();
  en->add_option("--family", family, "assoc-shelf, idem-sg, abbc-sg or proto-unital")
      ->capture_default_str();
  en->add_flag("--up-to-iso", up_to_iso, "One smallest representative per isomorphism class");
  en->add_flag("--with-homology", with_homology, "Append lbo H_0..H_3");

  auto* jones = app.add_subcommand("jones", "Jones monoid computations");
  jones->require_subcommand(1);
  auto* jcount = jones->add_subcommand("count", "Number of diagrams in J_n");
  jcount->add_option("n", n)->required();
  auto* jcensus = jones->add_subcommand("census", "Number of idempotents in J_n");
  jcensus->add_option("n", n)->required();
  auto* jj = jones->add_subcommand("jsmp", "Sub-monoid of diagrams admitting a partition");
  jj->add_option("n", n)->required();
  jj->add_option("partition", parts, "Parts such as 2+1+2")->required();
  jj->add_flag("--homology", with_homology, "Compute lbo H_0..H_3 of the sub-monoid");
  jj->add_flag("--allow-large-parts", allow_large, "Permit parts larger than 3");
  auto* jc = jones->add_subcommand("compose", "Stack two diagrams");
  jc->add_option("first", diag_a, "Diagram such as '2; t1-t2, b2-b1'")->required();
  jc->add_option("second", diag_b)->required();

  auto* tab = app.add_subcommand("tables", "Regenerate the reference tables");
  tab->add_option("--which", which, "4, 5, 6, 7 or all")->required();
  tab->add_flag("--diff", diff, "Compare against the golden transcription");
  tab->add_option("--golden-dir", golden, "Directory holding table4.txt .. table7.txt");

  auto* sk = app.add_subcommand("skeleton", "Export the 1-skeleton or 2-cells");
  sk->add_option("table", table_arg, table_help)->required();
  sk->add_option("--export", kind, "graph or cells")->capture_default_str();

  auto* mat = app.add_subcommand("matrix", "Boundary matrix as row/col/value triplets");
  mat->add_option("table", table_arg, table_help)->required();
  mat->add_option("--theory", theory)->capture_default_str();
  mat->add_option("--degree", degree)->capture_default_str();
  mat->add_flag("--force", cfg.force, "Skip the eligibility check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.max_columns = max_columns ? *max_columns : detail::env_cap("LBO_MAX_COLUMNS", cfg.max_columns);
    cfg.max_strands = max_strands ? *max_strands : detail::env_cap("LBO_MAX_STRANDS", cfg.max_strands);

    if (*check) return cmd_check(detail::read_table(table_arg, in), cfg, out);
    if (*hom) return cmd_homology(detail::read_table(table_arg, in), parse_theory(theory), max_dim, cfg, out);
    if (*ver) return cmd_verify(detail::read_table(table_arg, in), verify_dim, cfg, out);
    if (*en) return cmd_enumerate(order, parse_family(family), up_to_iso, with_homology, cfg, out);
    if (*jcount) return cmd_jones_count(n, false, cfg, out);
    if (*jcensus) return cmd_jones_count(n, true, cfg, out);
    if (*jj) return cmd_jones_jsmp(n, parts, with_homology, allow_large, cfg, out);
    if (*jc) return cmd_jones_compose(diag_a, diag_b, cfg, out);
    if (*tab) return cmd_tables(which, diff, golden, cfg, out);
    if (*sk) return cmd_skeleton(detail::read_table(table_arg, in), kind, out);
    if (*mat) return cmd_matrix(detail::read_table(table_arg, in), parse_theory(theory), degree, cfg, out);
  } catch (const NotAChainComplex& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lbo::cli
