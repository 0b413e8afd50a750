#include <algorithm>
#include <numeric>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "linkhom/complex.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/smith.hpp"
#include "oracles.hpp"

namespace linkhom {
namespace test_homcore {

using Dense = std::vector<std::vector<Integer>>;

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

TEST_CASE("Smith normal form on small fixed matrices") {
  auto id = smith_normal_form(SparseIntMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(id.factors == ints({1, 1, 1}));
  CHECK(id.rank == 3);
  auto m = smith_normal_form(SparseIntMatrix::from_dense({{2, 4}, {6, 8}}));
  CHECK(m.factors == ints({2, 4}));
  CHECK(m.rank == 2);
  auto z = smith_normal_form(SparseIntMatrix(2, 3));
  CHECK(z.factors.empty());
  CHECK(z.rank == 0);
  auto e = smith_normal_form(SparseIntMatrix(0, 0));
  CHECK(e.rank == 0);
  // Coprime diagonal entries collapse to 1 and their product.
  auto c = smith_normal_form(SparseIntMatrix::from_dense({{2, 0}, {0, 3}}));
  CHECK(c.factors == ints({1, 6}));
  CHECK(c.torsion() == ints({6}));
}

TEST_CASE("Smith factors agree with the gcd-of-minors oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
    int spread = trial % 3 == 0 ? 1 : (trial % 3 == 1 ? 3 : 9);
    auto a = oracle::random_matrix(rng, r, c, -spread, spread);
    if (trial % 5 == 0)
      for (auto& row : a)
        for (auto& x : row) x *= 2;
    auto expect = oracle::minors_smith(a);
    auto got = smith_normal_form(SparseIntMatrix::from_dense(a));
    INFO("trial " << trial);
    CHECK(got.factors == expect);
    CHECK(got.rank == expect.size());
    CHECK(dense_smith(a) == expect);
    CHECK(oracle::euclid_smith(a) == expect);
    CHECK(rank_mod_prime(SparseIntMatrix::from_dense(a)) == expect.size());
  }
}

TEST_CASE("Smith elimination switches to big integers on overflow") {
  Integer big = Integer(1) << 62;
  Dense a{{1, big, big}, {big, 1, big}, {big, big, 3}};
  auto expect = oracle::euclid_smith(a);
  CHECK(smith_normal_form(SparseIntMatrix::from_dense(a)).factors == expect);
  CHECK(oracle::rational_rank(a) == 3);
}

TEST_CASE("Sparse matrix storage and products") {
  SparseIntMatrix m(2, 2);
  m.add(0, 0, 3);
  m.add(0, 0, -3);
  m.add(1, 0, 2);
  CHECK(m.nnz() == 1);
  CHECK(m.at(1, 0) == 2);
  CHECK(m.at(0, 0) == 0);
  CHECK_THROWS_AS(m.add(2, 0, 1), InvalidInput);
  auto p = SparseIntMatrix::from_dense({{1, 2}, {3, 4}}).multiply(SparseIntMatrix::from_dense({{0, 1}, {1, 0}}));
  CHECK(p.to_dense() == Dense{{2, 1}, {4, 3}});
  CHECK_THROWS_AS(SparseIntMatrix(2, 3).multiply(SparseIntMatrix(2, 3)), InvalidInput);
}

GradedComplex two_term(int multiplier) {
  GradedComplex c;
  c.set_dim(0, 0, 1);
  c.set_dim(1, 0, 1);
  SparseIntMatrix d(1, 1);
  d.add(0, 0, multiplier);
  c.set_differential(0, 0, d);
  return c;
}

TEST_CASE("Homology of two-term complexes") {
  auto zero = graded_homology(two_term(0));
  CHECK(zero.at(0, 0) == Group{1, {}});
  CHECK(zero.at(1, 0) == Group{1, {}});
  auto two = graded_homology(two_term(2));
  CHECK(two.at(0, 0).empty());
  CHECK(two.at(1, 0) == Group{0, ints({2})});
  CHECK(two.entries().size() == 1);
  CHECK(euler_characteristic(two_term(2)).is_zero());
  CHECK(euler_characteristic(two).is_zero());
  GradedComplex single;
  single.set_dim(0, 0, 1);
  CHECK(euler_characteristic(single) == LaurentPoly({"q"}, 1));
}

TEST_CASE("Nonzero d squared is reported with its block") {
  GradedComplex c;
  c.set_dim(0, 2, 1);
  c.set_dim(1, 2, 1);
  c.set_dim(2, 2, 1);
  SparseIntMatrix a(1, 1), b(1, 1);
  a.add(0, 0, 1);
  b.add(0, 0, 1);
  c.set_differential(0, 2, a);
  c.set_differential(1, 2, b);
  CHECK_THROWS_AS(graded_homology(c), ComputationDefect);
  try {
    verify_d_squared(c);
    FAIL("expected a defect");
  } catch (const ComputationDefect& e) {
    CHECK(std::string(e.what()).find("(0,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(c.set_differential(0, 2, SparseIntMatrix(2, 1)), InvalidInput);
}

// Random complex: C^0 -A-> C^1 -B-> C^2 with B A = 0 built from a kernel basis.
GradedComplex random_complex(std::mt19937_64& rng) {
  GradedComplex c;
  int n0 = 3, n1 = 4, n2 = 3;
  auto a = oracle::random_matrix(rng, n1, n0, -2, 2);
  for (auto& row : a) row[2] = row[0] * 2;  // create a kernel and some torsion chance
  // B annihilates the column space of A: rows of B are integer left-null vectors.
  Dense b(n2, std::vector<Integer>(n1, 0));
  for (int r = 0; r < n2; ++r) {
    std::vector<Integer> v(n1, 0);
    std::uniform_int_distribution<int> coef(-2, 2);
    // Combine the cofactor vectors of 3x3 minors of the first two columns plus a random row.
    Dense m(n1, std::vector<Integer>(3));
    for (int i = 0; i < n1; ++i) {
      m[i][0] = a[i][0];
      m[i][1] = a[i][1];
    }
    int drop = r % n1;
    std::vector<int> rows;
    for (int i = 0; i < n1; ++i)
      if (i != drop) rows.push_back(i);
    // Generalized cross product of the two columns restricted to three rows.
    auto x = rows[0], y = rows[1], z = rows[2];
    v[x] = a[y][0] * a[z][1] - a[z][0] * a[y][1];
    v[y] = a[z][0] * a[x][1] - a[x][0] * a[z][1];
    v[z] = a[x][0] * a[y][1] - a[y][0] * a[x][1];
    Integer k = coef(rng);
    for (int i = 0; i < n1; ++i) b[r][i] = v[i] * (k == 0 ? 1 : k);
  }
  c.set_dim(0, 1, n0);
  c.set_dim(1, 1, n1);
  c.set_dim(2, 1, n2);
  c.set_differential(0, 1, SparseIntMatrix::from_dense(a));
  c.set_differential(1, 1, SparseIntMatrix::from_dense(b));
  return c;
}

TEST_CASE("Homology is invariant under basis permutations") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto c = random_complex(rng);
    HomologyTable h;
    try {
      h = graded_homology(c);
    } catch (const ComputationDefect&) {
      continue;  // the random construction did not close up
    }
    ++checked;
    CHECK(euler_characteristic(h) == euler_characteristic(c));
    std::vector<std::vector<std::size_t>> perms;
    for (int i = 0; i < 3; ++i) {
      std::vector<std::size_t> p(c.dim(i, 1));
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      perms.push_back(p);
    }
    GradedComplex pc;
    for (int i = 0; i < 3; ++i) pc.set_dim(i, 1, c.dim(i, 1));
    for (int i = 0; i < 2; ++i) pc.set_differential(i, 1, c.differential(i, 1)->permuted(perms[i + 1], perms[i]));
    CHECK(graded_homology(pc) == h);
  }
  CHECK(checked > 30);
}

TEST_CASE("Shifts, truncation and rank-only mode") {
  auto c = two_term(2);
  c.hom_shift = -1;
  c.deg_shift = 3;
  auto h = graded_homology(c);
  CHECK(h.at(0, 3) == Group{0, ints({2})});
  CHECK(euler_characteristic(c).is_zero());
  HomologyOptions o;
  o.rank_only = true;
  auto r = graded_homology(two_term(2), o);
  CHECK(r.empty());
  CHECK(r.rank_only);
  o.rank_only = false;
  o.i_max = 0;
  auto t = graded_homology(two_term(0), o);
  CHECK(t.entries().size() == 1);
  o.i_max.reset();
  o.j_window = std::make_pair(1, 5);
  CHECK(graded_homology(two_term(0), o).empty());
}

TEST_CASE("Homology tables serialize and render") {
  HomologyTable t;
  t.set(0, 1, Group{1, {}});
  t.set(0, -1, Group{1, {}});
  t.set(3, 11, Group{0, ints({2})});
  t.set(4, 4, Group{});
  CHECK(t.entries().size() == 3);
  CHECK(t.to_json().dump() ==
        R"([{"i":0,"j":-1,"rank":1,"torsion":[]},{"i":0,"j":1,"rank":1,"torsion":[]},{"i":3,"j":11,"rank":0,"torsion":[2]}])");
  CHECK(HomologyTable::from_json(t.to_json()) == t);
  CHECK(t.to_csv() == "i,j,rank,torsion\n0,-1,1,\n0,1,1,\n3,11,0,2\n");
  CHECK(t.to_pretty().find("Z_2") != std::string::npos);
  auto p = poincare_polynomial(t);
  CHECK(p.vars() == std::vector<std::string>{"t", "q"});
  CHECK(p.coeff(0, -1) == 1);
  CHECK(p.coeff(0, 1) == 1);
  CHECK(p.size() == 2);
  CHECK(poincare_polynomial(HomologyTable{}).is_zero());
  CHECK(euler_characteristic(t) == LaurentPoly::term({"q"}, 1) + LaurentPoly::term({"q"}, -1));
}

TEST_CASE("Parallel loop runs every index and propagates errors") {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), [&](std::size_t k) { hits[k]++; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t k) { if (k == 7) throw DomainError("boom"); }), DomainError);
}

}  // namespace test_homcore
}  // namespace linkhom
