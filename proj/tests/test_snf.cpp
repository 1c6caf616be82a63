#include <algorithm>
#include <numeric>
#include <random>

#include <catch_amalgamated.hpp>

#include "json.hpp"
#include "lbo/snf.hpp"

using namespace lbo;

namespace {

IntMatrix diag(std::initializer_list<std::int64_t> d) {
  IntMatrix m(d.size(), d.size());
  std::size_t k = 0;
  for (auto v : d) {
    m(k, k) = v;
    ++k;
  }
  return m;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi,
                        double density = 0.5) {
  std::uniform_int_distribution<int> v(lo, hi);
  std::bernoulli_distribution keep(density);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m(i, j) = v(rng);
  return m;
}

// Product of the invariant factors equals the gcd of the maximal minors,
// which for a square nonsingular matrix is |det|; checked via Bareiss.
BigInt abs_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  BigInt d = a[n - 1][n - 1] * sign;
  return d < 0 ? BigInt(-d) : d;
}

BigInt entry_gcd(const IntMatrix& m) {
  BigInt g = 0;
  for (auto v : m.data()) g = gcd(g, BigInt(v < 0 ? -v : v));
  return g;
}

void check_chain(const SmithForm& f) {
  for (std::size_t k = 0; k < f.diagonal.size(); ++k) {
    CHECK(f.diagonal[k] > 0);
    if (k) CHECK(f.diagonal[k] % f.diagonal[k - 1] == 0);
  }
  CHECK(f.rank == f.diagonal.size());
}

}  // namespace

TEST_CASE("smith normal form on simple matrices") {
  auto id = smith_normal_form(identity_matrix(3));
  CHECK(id.rank == 3);
  CHECK(id.diagonal == std::vector<BigInt>{1, 1, 1});

  auto d = smith_normal_form(diag({2, 3}));
  CHECK(d.rank == 2);
  CHECK(d.diagonal == std::vector<BigInt>{1, 6});
  CHECK(d.torsion() == std::vector<BigInt>{6});

  auto z = smith_normal_form(IntMatrix(3, 4));
  CHECK(z.rank == 0);
  CHECK(z.diagonal.empty());

  auto e = smith_normal_form(IntMatrix(0, 5));
  CHECK(e.rank == 0);

  auto c = smith_normal_form(diag({4, 6, 0}));
  CHECK(c.diagonal == std::vector<BigInt>{2, 12});
}

TEST_CASE("invariant factors against determinant and gcd oracles") {
  std::mt19937 rng(2024);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 2 + k % 5;
    const auto m = random_matrix(rng, n, n, -9, 9, 0.8);
    const auto f = smith_normal_form(m);
    check_chain(f);
    const BigInt det = abs_det(m);
    if (det != 0) {
      REQUIRE(f.rank == n);
      BigInt prod = 1;
      for (const auto& v : f.diagonal) prod *= v;
      CHECK(prod == det);
    }
    if (!f.diagonal.empty()) CHECK(f.diagonal.front() == entry_gcd(m));
  }
}

TEST_CASE("SNF rank equals the rational rank") {
  std::mt19937 rng(31337);
  for (int k = 0; k < 80; ++k) {
    const auto m = random_matrix(rng, 1 + k % 9, 1 + (k * 7) % 11, -1, 1);
    const auto f = smith_normal_form(m);
    check_chain(f);
    CHECK(f.rank == rank_rational(m));
  }
  CHECK(rank_rational(identity_matrix(6)) == 6);
}

TEST_CASE("SNF is invariant under row and column permutations") {
  std::mt19937 rng(8);
  for (int k = 0; k < 40; ++k) {
    const std::size_t r = 3 + k % 4, c = 4 + k % 3;
    const auto m = random_matrix(rng, r, c, -4, 4, 0.6);
    std::vector<std::size_t> pr(r), pc(c);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    IntMatrix p(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) p(i, j) = m(pr[i], pc[j]);
    CHECK(smith_normal_form(p).diagonal == smith_normal_form(m).diagonal);
  }
}

TEST_CASE("overflow promotes to unbounded arithmetic") {
  IntMatrix m(2, 2);
  m(0, 0) = INT64_MAX;
  m(0, 1) = INT64_MAX - 1;
  m(1, 0) = INT64_MAX - 2;
  m(1, 1) = INT64_MIN + 1;
  const auto f = smith_normal_form(m);
  check_chain(f);
  CHECK(f.rank == 2);
  CHECK(f.rank == rank_rational(m));
  BigInt prod = 1;
  for (const auto& v : f.diagonal) prod *= v;
  CHECK(prod == abs_det(m));
  CHECK_THROWS_AS(smith_normal_form(IntMatrix(10, 10), 5), ResourceLimit);
}

TEST_CASE("homology group rendering and parsing") {
  HomologyGroup g;
  CHECK(g.to_string() == "0");
  g.betti = 1;
  CHECK(g.to_string() == "Z");
  g.betti = 3;
  CHECK(g.to_string() == "Z^3");
  g.torsion = {2, 6};
  CHECK(g.to_string() == "Z^3 (+) Z/2 (+) Z/6");
  CHECK(parse_group(g.to_string()) == g);
  CHECK(parse_group("0").is_trivial());
  CHECK(parse_group("Z/6").torsion == std::vector<BigInt>{6});
  CHECK_THROWS_AS(parse_group("Z/6 (+) Z/4"), ParseError);
  CHECK_THROWS_AS(parse_group("Q"), ParseError);

  nlohmann::json j = g;
  CHECK(j.get<HomologyGroup>() == g);
}

TEST_CASE("lbo homology of small tables") {
  auto H = [](const char* s, std::size_t n) {
    std::vector<std::string> out;
    for (const auto& g : homology_range(Theory::LboCyclic, parse_table(s), n)) out.push_back(g.to_string());
    return out;
  };
  CHECK(H("{{0,0},{0,0}}", 3) == std::vector<std::string>{"Z^2", "Z^3", "Z^4", "Z^7"});
  CHECK(H("{{0,0},{1,1}}", 3) == std::vector<std::string>{"Z", "0", "0", "0"});
  CHECK(H("{{0,0,0,0},{0,1,0,0},{0,0,2,0},{0,0,0,3}}", 3) ==
        std::vector<std::string>{"Z^4", "Z^9", "Z^6", "Z^27"});
  CHECK(H("{{0,0,0},{0,1,1},{0,2,2}}", 3) == std::vector<std::string>{"Z^2", "Z^2", "0", "Z^4"});
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(homology(Theory::LboCyclic, parse_table("{{0,0},{0,0}}"), n) ==
          homology_range(Theory::LboCyclic, parse_table("{{0,0},{0,0}}"), 3)[n]);
}

TEST_CASE("non-cyclic H_0 is free on X") {
  for (const char* s : {"{{0,0},{0,0}}", "{{0,0,0},{0,1,1},{0,2,2}}",
                        "{{0,0,2,2},{0,0,2,2},{0,0,2,2},{0,1,2,3}}"}) {
    const auto t = parse_table(s);
    const auto g = homology(Theory::LboNonCyclic, t, 0);
    CHECK(g.betti == t.order());
    CHECK(g.torsion.empty());
  }
}

TEST_CASE("rank-nullity bookkeeping and rational-rank agreement") {
  for (const char* s : {"{{0,0,0},{0,1,0},{2,2,2}}", "{{0,0,0,0},{0,1,1,3},{0,1,2,3},{0,1,1,3}}"}) {
    const auto t = parse_table(s);
    for (Theory th : kAllTheories) {
      if (!is_eligible(th, t)) continue;
      std::vector<std::size_t> rank{0};
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto m = boundary_matrix(th, t, n);
        const auto f = smith_normal_form(m);
        CHECK(f.rank == rank_rational(m));
        rank.push_back(f.rank);
      }
      const auto gs = homology_range(th, t, 2);
      for (std::size_t n = 0; n <= 2; ++n)
        CHECK(basis_size(t.order(), n + 1) == gs[n].betti + rank[n] + rank[n + 1]);
      if (th == Theory::LboCyclic) CHECK(smith_normal_form(boundary_matrix(th, t, 1)).torsion().empty());
    }
  }
}

TEST_CASE("rack homology on the trivial quandle against a brute-force count") {
  const auto q = parse_table("{{0,0},{1,1}}");
  // Every rack face vanishes when a*b = a, so H_n = C_n.
  const auto gs = homology_range(Theory::Rack, q, 3);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(gs[n].betti == basis_size(2, n + 1));
}

TEST_CASE("forced homology of a non-complex is refused") {
  const auto bad = parse_table("{{0,1},{1,0}}");
  CHECK_THROWS_AS(homology_range(Theory::LboCyclic, bad, 2), IneligibleTable);
  CHECK_THROWS_AS(homology_range(Theory::LboCyclic, bad, 3, {true, 4096}), NotAChainComplex);
}

TEST_CASE("forcing does not change eligible results") {
  const auto t = parse_table("{{0,0,0},{0,1,1},{0,2,2}}");
  CHECK(homology_range(Theory::LboCyclic, t, 3, {true, 4096}) == homology_range(Theory::LboCyclic, t, 3));
}

TEST_CASE("torsion scan") {
  TorsionScan scan;
  scan.add("free", homology_range(Theory::LboCyclic, parse_table("{{0,0},{0,1}}"), 3));
  CHECK(scan.clean());
  scan.add_matrix("synthetic diag(2,3)", diag({2, 3}));
  CHECK_FALSE(scan.clean());
  REQUIRE(scan.findings().size() == 1);
  CHECK(scan.findings()[0].factors == std::vector<BigInt>{6});
  CHECK(scan.report().find("Z/6") != std::string::npos);
}
