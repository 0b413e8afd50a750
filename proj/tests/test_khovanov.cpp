#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "linkhom/braid.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/khovanov.hpp"
#include "oracles.hpp"

namespace linkhom {
namespace test_khovanov {

const std::vector<std::string> Q{"q"};

LaurentPoly q(int e, int c = 1) { return LaurentPoly::term(Q, e, 0, c); }
LaurentPoly circle() { return q(1) + q(-1); }
Diagram closure(const std::string& w) { return braid_closure(parse_braid(w)); }
HomologyTable kh(const std::string& w) { return khovanov_homology(closure(w)); }
std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

TEST_CASE("Bracket of unlinks and small closures") {
  for (int k = 1; k <= 5; ++k) CHECK(kauffman_bracket(closure(std::to_string(k) + ":")) == circle().pow(k));
  CHECK(kauffman_bracket(closure("2: 1 1")) == q(-2) + q(0) + q(2) + q(4));
  CHECK(jones_unnormalized(closure("2: 1 1")) == q(0) + q(2) + q(4) + q(6));
  CHECK(jones_unnormalized(closure("2: 1 1 1")) == q(1) + q(3) + q(5) - q(9));
  for (const char* u : {"1:", "2: 1", "2: -1", "3: 1 -2", "3: -1 -2"}) CHECK(jones_unnormalized(closure(u)) == circle());
  CHECK(jones_normalized(closure("2: 1")) == q(0));
  CHECK(jones_normalized(closure("2: 1 1 1")) == q(2) + q(6) - q(8));
}

TEST_CASE("Bracket agrees with the braid state-sum oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    auto b = oracle::random_braid(rng, 2 + trial % 3, 1 + trial % 9);
    auto d = braid_closure(b);
    CHECK(kauffman_bracket(d) == oracle::braid_bracket(b));
    CHECK(jones_unnormalized(d) == oracle::braid_jones(b));
  }
}

TEST_CASE("Recursive bracket axiom at every crossing of the trefoil") {
  auto t = closure("2: 1 1 1");
  for (std::size_t c = 0; c < t.size(); ++c) {
    auto d0 = resolve_crossing(t, c, 0), d1 = resolve_crossing(t, c, 1);
    CHECK(kauffman_bracket(t) == kauffman_bracket(d0) - q(1) * kauffman_bracket(d1));
  }
}

TEST_CASE("Jones of the mirror inverts the variable") {
  for (const char* w : {"2: 1 1 1", "3: 1 -2 1 -2", "3: 1 1 2 -1 2"}) {
    auto d = closure(w);
    CHECK(jones_unnormalized(mirror(d)) == jones_unnormalized(d).inverted());
  }
  auto pd = parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]");
  CHECK(jones_unnormalized(pd) == jones_unnormalized(closure("2: -1 -1 -1")));
}

TEST_CASE("Jones skein triples") {
  CHECK(jones_skein_check(closure("2: 1 1 1"), closure("2: 1 1 -1"), closure("2: 1 1")));
  CHECK(jones_skein_check(closure("2: 1"), closure("2: -1"), closure("2:")));
  CHECK_FALSE(jones_skein_check(closure("2: 1 1 1"), closure("2: 1 1 -1"), closure("2: 1 -1")));
  CHECK_THROWS_AS(jones_skein_check(closure("2: 1 1"), closure("2: 1 1"), closure("2: 1")), InvalidInput);
}

TEST_CASE("Labelings are ranked lexicographically with 1 before X") {
  // Three circles, one X: X11 < 1X1 < 11X in label order means masks 1, 2, 4
  // rank as 2, 1, 0 (the label 1 on circle 0 comes first).
  CHECK(labeling_rank(0b100, 3) == 0);
  CHECK(labeling_rank(0b010, 3) == 1);
  CHECK(labeling_rank(0b001, 3) == 2);
  CHECK(labeling_rank(0, 3) == 0);
  CHECK(labeling_rank(0b011, 3) == 2);
}

TEST_CASE("Single-crossing cube is the multiplication map") {
  auto c = khovanov_complex(closure("2: 1"));
  CHECK(c.dim(0, 2) == 1);
  CHECK(c.dim(0, 0) == 2);
  CHECK(c.dim(0, -2) == 1);
  CHECK(c.dim(1, 2) == 1);
  CHECK(c.dim(1, 0) == 1);
  // m(1 x 1) = 1; m(X x 1) = m(1 x X) = X; m(X x X) = 0.
  CHECK(c.differential(0, 2)->to_dense() == std::vector<std::vector<Integer>>{{1}});
  CHECK(c.differential(0, 0)->to_dense() == std::vector<std::vector<Integer>>{{1, 1}});
  CHECK(c.differential(0, -2)->to_dense() == std::vector<std::vector<Integer>>(0));
  CHECK(euler_characteristic(c) == kauffman_bracket(closure("2: 1")));
}

TEST_CASE("Every square of the trefoil cube anticommutes") {
  auto d = closure("2: 1 1 1");
  KhovanovCube cube(d);
  int squares = 0;
  for (std::uint64_t eps = 0; eps < 8; ++eps)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        if (((eps >> a) & 1U) || ((eps >> b) & 1U)) continue;
        int c = circle_count(d, eps);
        for (std::uint64_t mask = 0; mask < (1ULL << c); ++mask) {
          std::map<std::uint64_t, int> total;
          for (auto [first, second] : {std::pair{a, b}, std::pair{b, a}}) {
            for (auto [m1, s1] : cube.apply_edge(eps, first, mask))
              for (auto [m2, s2] : cube.apply_edge(eps | (1ULL << first), second, m1)) total[m2] += s1 * s2;
          }
          for (auto [m, v] : total) CHECK(v == 0);
          ++squares;
        }
      }
  CHECK(squares > 0);
}

TEST_CASE("Chain-level Euler characteristic equals the bracket") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto b = oracle::random_braid(rng, 2 + trial % 3, 2 + trial % 9);
    auto d = braid_closure(b);
    auto c = khovanov_complex(d);
    CHECK(euler_characteristic(c) == kauffman_bracket(d));
    CHECK(euler_characteristic(khovanov_complex(d, std::nullopt, true)) == jones_unnormalized(d));
  }
}

TEST_CASE("Unknot and trefoil homology") {
  for (const char* u : {"2: 1", "2: -1", "1:", "3: 1 -2"}) {
    auto h = kh(u);
    CHECK(h.entries().size() == 2);
    CHECK(h.at(0, -1) == Group{1, {}});
    CHECK(h.at(0, 1) == Group{1, {}});
  }
  auto t = kh("2: 1 1 1");
  CHECK(t.entries().size() == 5);
  CHECK(t.at(0, 1) == Group{1, {}});
  CHECK(t.at(0, 3) == Group{1, {}});
  CHECK(t.at(2, 5) == Group{1, {}});
  CHECK(t.at(3, 7) == Group{0, ints({2})});
  CHECK(t.at(3, 9) == Group{1, {}});
  auto p = poincare_polynomial(t);
  auto tq = [](int i, int j) { return LaurentPoly::term({"t", "q"}, i, j); };
  CHECK(p == tq(0, 1) + tq(0, 3) + tq(2, 5) + tq(3, 9));
}

TEST_CASE("Homology agrees with the dense cube oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    auto b = oracle::random_braid(rng, 2 + trial % 3, 1 + trial % 7);
    INFO(b.to_string());
    CHECK(khovanov_homology(braid_closure(b)) == oracle::braid_khovanov(b));
  }
  CHECK(khovanov_homology(closure("3: 1 -2 1 -2")) == oracle::braid_khovanov(parse_braid("3: 1 -2 1 -2")));
}

TEST_CASE("PD trefoil homology equals the mirrored braid closure") {
  auto pd = parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]");
  CHECK(khovanov_homology(pd) == kh("2: -1 -1 -1"));
  auto fig8 = parse_pd("X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8\n");
  CHECK(khovanov_homology(fig8) == kh("3: 1 -2 1 -2"));
}

TEST_CASE("Homology is invariant under Markov moves") {
  auto base = parse_braid("2: 1 1 1");
  auto ref = khovanov_homology(braid_closure(base));
  CHECK(khovanov_homology(braid_closure(conjugate(base, 1))) == ref);
  CHECK(khovanov_homology(braid_closure(conjugate(base, -1))) == ref);
  CHECK(khovanov_homology(braid_closure(stabilize(base, 1))) == ref);
  CHECK(khovanov_homology(braid_closure(stabilize(base, -1))) == ref);
  CHECK(khovanov_homology(braid_closure(stabilize(stabilize(base, 1), -1))) == ref);
}

TEST_CASE("Windowed and truncated homology restrict the full table") {
  auto d = closure("3: 1 2 1 2 1");
  auto full = khovanov_homology(d);
  HomologyOptions o;
  o.j_window = std::make_pair(4, 8);
  auto w = khovanov_homology(d, o);
  for (const auto& [k, g] : full.entries())
    if (k.second >= 4 && k.second <= 8) CHECK(w.at(k.first, k.second) == g);
  for (const auto& [k, g] : w.entries()) CHECK((k.second >= 4 && k.second <= 8));
  o = {};
  o.i_max = 2;
  CHECK(khovanov_homology(d, o) == full.truncated(2));
}

TEST_CASE("Torus knot T(3,4) low degrees") {
  HomologyOptions o;
  o.i_max = 4;
  auto t = khovanov_homology(torus_diagram(3, 4), o);
  HomologyTable expect;
  expect.set(0, 5, Group{1, {}});
  expect.set(0, 7, Group{1, {}});
  expect.set(2, 9, Group{1, {}});
  expect.set(3, 11, Group{0, ints({2})});
  expect.set(3, 13, Group{1, {}});
  expect.set(4, 11, Group{1, {}});
  expect.set(4, 13, Group{1, {}});
  CHECK(t == expect);
}

TEST_CASE("Width reports") {
  auto tref = width_report(kh("2: 1 1 1"));
  CHECK(tref.width == 2);
  CHECK(tref.thin);
  auto u = width_report(kh("1:"));
  CHECK(u.diagonals == std::set<int>{-1, 1});
  CHECK(u.width == 2);
  auto t34 = width_report(khovanov_homology(torus_diagram(3, 4)));
  CHECK(t34.width >= 3);
  CHECK_FALSE(t34.thin);
  CHECK_THROWS_AS(width_report(HomologyTable{}), InvalidInput);
}

TEST_CASE("Torus diagrams") {
  CHECK(torus_diagram(2, 3) == closure("2: 1 1 1"));
  CHECK(khovanov_homology(torus_diagram(3, 2)) == khovanov_homology(torus_diagram(2, 3)));
  CHECK(khovanov_homology(torus_diagram(1, 4)) == kh("1:"));
  CHECK_THROWS_AS(torus_diagram(0, 2), InvalidInput);
}

TEST_CASE("Long exact sequence checks") {
  auto t = closure("2: 1 1 1");
  auto r = les_check(t, t.size() - 1);
  CHECK(r.ok());
  CHECK(les_check(closure("2: 1"), 0).ok());
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto d = braid_closure(oracle::random_braid(rng, 3, 2 + trial % 6));
    auto rep = les_check(d, static_cast<std::size_t>(rng() % d.size()));
    CHECK(rep.ok());
  }
  CHECK_THROWS_AS(les_check(t, 3), InvalidInput);
}

TEST_CASE("Positive diagrams have no negative homology and uniform parity") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    auto b = oracle::random_braid(rng, 3, 6);
    for (auto& l : b.letters) l = std::abs(l);
    auto h = khovanov_homology(braid_closure(b));
    int parity = -1;
    for (const auto& [k, g] : h.entries()) {
      CHECK(k.first >= 0);
      int p = ((k.second % 2) + 2) % 2;
      if (parity < 0) parity = p;
      CHECK(p == parity);
    }
    CHECK(parity == closure_components(b) % 2);
  }
}

TEST_CASE("Stability for p = 3 in low degrees") {
  auto rep = stability_check(3, {4, 5}, 3);
  CHECK(rep.pass());
  CHECK(rep.items.size() == 3);
  CHECK_THROWS_AS(stability_check(3, {2, 4}), InvalidInput);
  CHECK_THROWS_AS(stability_check(1, {4}), InvalidInput);
}

TEST_CASE("Stable Poincare polynomials for m = 2") {
  auto sp = stable_poincare(2, {3, 4, 5});
  REQUIRE(sp.polys.size() == 3);
  CHECK(sp.agree == std::vector<bool>{true, true});
  // q^{-3} P(T_{2,3}) = q^{-2} + 1 + t^2 q^2 + t^3 q^6
  auto tq = [](int i, int j) { return LaurentPoly::term({"t", "q"}, i, j); };
  CHECK(sp.polys[0] == tq(0, -2) + tq(0, 0) + tq(2, 2) + tq(3, 6));
  CHECK_THROWS_AS(stable_poincare(1, {3}), DomainError);
}

}  // namespace test_khovanov
}  // namespace linkhom
