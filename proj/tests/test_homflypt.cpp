#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "linkhom/braid.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/hecke.hpp"
#include "linkhom/homfly.hpp"
#include "linkhom/khovanov.hpp"
#include "oracles.hpp"

namespace linkhom {
namespace test_homflypt {

const std::vector<std::string> Q{"q"};
const std::vector<std::string> QT{"q", "t"};
const std::vector<std::string> AQ{"a", "q"};

LaurentPoly q(int e, int c = 1) { return LaurentPoly::term(Q, e, 0, c); }
RationalFn qt(int eq, int et, int c = 1) { return LaurentPoly::term(QT, eq, et, c); }
RationalFn aq(int ea, int eq, int c = 1) { return LaurentPoly::term(AQ, ea, eq, c); }
RationalFn d_value() { return (qt(0, 0) + qt(1, -1)) / (qt(0, 0) - qt(2, 0)); }
RationalFn F(const std::string& w) { return homfly_F(parse_braid(w)); }
RationalFn Fw(const std::string& w) { return markov_trace(wide_edge_expand(parse_wide_word(w))); }

BraidWord with_letters(int strands, std::vector<int> letters) { return BraidWord{strands, std::move(letters)}; }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string wide_text(int strands, const std::vector<std::string>& toks) {
  std::string s = std::to_string(strands) + ":";
  for (const auto& t : toks) s += " " + t;
  return s;
}

std::vector<std::string> tokens_of(const BraidWord& b) {
  std::vector<std::string> out;
  for (int l : b.letters) out.push_back(std::to_string(l));
  return out;
}

TEST_CASE("Hecke normal forms of small words") {
  auto id2 = HeckeElement::identity(2);
  CHECK(hecke_normal_form(parse_braid("3:")) == HeckeElement::identity(3));
  auto t1 = HeckeElement::generator(2, 1);
  CHECK(hecke_normal_form(parse_braid("2: 1 1")) == q(2) * id2 + (q(0) - q(2)) * t1);
  CHECK(hecke_normal_form(parse_braid("2: 1 -1")) == id2);
  CHECK(hecke_normal_form(parse_braid("3: -2 1 2 -1")) ==
        hecke_normal_form(parse_braid("3: -2 1 2 -1 2 -2")));
  // braid relation and far commutation in the algebra
  CHECK(hecke_normal_form(parse_braid("3: 1 2 1")) == hecke_normal_form(parse_braid("3: 2 1 2")));
  CHECK(hecke_normal_form(parse_braid("4: 1 3")) == hecke_normal_form(parse_braid("4: 3 1")));
  CHECK(hecke_normal_form(parse_braid("4: 1 3")).terms().size() == 1);
}

TEST_CASE("Reduced words rebuild the permutation") {
  std::vector<std::uint8_t> w{2, 0, 3, 1};
  auto word = reduced_word(w);
  CHECK(static_cast<int>(word.size()) == perm_length(w));
  auto h = HeckeElement::identity(4);
  for (int i : word) h = h.times_generator(i);
  REQUIRE(h.terms().size() == 1);
  CHECK(h.terms().begin()->first == w);
}

TEST_CASE("Hecke multiplication is associative and matches word products") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = oracle::random_braid(rng, 4, 4), b = oracle::random_braid(rng, 4, 3), c = oracle::random_braid(rng, 4, 3);
    auto ha = hecke_normal_form(a), hb = hecke_normal_form(b), hc = hecke_normal_form(c);
    CHECK((ha * hb) * hc == ha * (hb * hc));
    CHECK(ha * hb == hecke_normal_form(with_letters(4, concat(a.letters, b.letters))));
  }
}

TEST_CASE("Markov trace on basic elements") {
  CHECK(markov_trace(HeckeElement::identity(1)) == qt(0, 0));
  CHECK(markov_trace(HeckeElement::identity(2)) == d_value());
  CHECK(markov_trace(HeckeElement::identity(4)) == d_value().pow(3));
  CHECK(F("2: -1") == qt(-1, -1, -1));
  CHECK(F("1:") == qt(0, 0));
  CHECK(F("2: 1") == qt(0, 0));
  CHECK(F("2: 1 1 1") == F("2: -1 1 1 1 1"));
  auto tp = markov_trace_poly(HeckeElement::identity(3));
  REQUIRE(tp.size() == 3);
  CHECK(tp[2] == q(0));
}

TEST_CASE("Axioms of F on random words") {
  std::mt19937_64 rng(2024);
  const RationalFn neg_factor = qt(-1, -1, -1);
  for (int trial = 0; trial < 100; ++trial) {
    int p = 2 + trial % 3;
    auto b = oracle::random_braid(rng, p, 1 + trial % 8);
    auto f = homfly_F(b);
    CHECK(denominator_is_power_of_one_minus_q2(f));
    int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(p - 1));
    if (rng() % 2) k = -k;
    CHECK(homfly_F(conjugate(b, k)) == f);
    CHECK(homfly_F(stabilize(b, 1)) == f);
    CHECK(homfly_F(stabilize(b, -1)) == neg_factor * f);
    // disjoint union with an unknot: one more strand
    CHECK(homfly_F(with_letters(p + 1, b.letters)) == d_value() * f);
    // braid relations inserted at a random position
    std::size_t at = rng() % (b.letters.size() + 1);
    auto insert = [&](std::vector<int> piece) {
      auto l = b.letters;
      l.insert(l.begin() + static_cast<long>(at), piece.begin(), piece.end());
      return homfly_F(with_letters(p + 1, l));
    };
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(p - 1));
    CHECK(insert({i, i + 1, i}) == insert({i + 1, i, i + 1}));
    if (p + 1 >= 4) CHECK(insert({1, 3}) == insert({3, 1}));
    // skein at the same position
    auto plus = with_letters(p, b.letters), minus = plus, zero = plus;
    plus.letters.insert(plus.letters.begin() + static_cast<long>(at), i);
    minus.letters.insert(minus.letters.begin() + static_cast<long>(at), -i);
    CHECK(qt(-1, 0) * homfly_F(plus) - qt(1, 0) * homfly_F(minus) == (qt(-1, 0) - qt(1, 0)) * homfly_F(zero));
  }
}

TEST_CASE("G of the trefoil and its mirror") {
  auto g = homfly_G(parse_braid("2: 1 1 1"));
  CHECK(g.omega == 2);
  RationalFn z = aq(0, -1) - aq(0, 1);
  CHECK(g.g_aq == aq(2, 0, 2) - aq(4, 0) + aq(2, 0) * z * z);
  auto m = homfly_G(parse_braid("2: -1 -1 -1"));
  CHECK(m.g_aq != g.g_aq);
  CHECK(m.g_aq == mirror_g(g.g_aq));
  CHECK(homfly_G(parse_braid("3: 1 1 1 2")).g_aq == g.g_aq);
  for (const char* u : {"1:", "2: 1", "2: -1", "3: 1 2", "3: -1 2", "4: -1 -2 3"})
    CHECK(homfly_G(parse_braid(u)).g_aq == aq(0, 0));
}

TEST_CASE("G on two-strand torus links follows the skein recursion") {
  RationalFn z = aq(0, -1) - aq(0, 1);
  RationalFn prev = (aq(-1, 0) - aq(1, 0)) / z, cur = aq(0, 0);
  CHECK(homfly_G(parse_braid("2:")).g_aq == prev);
  for (int k = 2; k <= 7; ++k) {
    RationalFn next = aq(1, 0) * (aq(1, 0) * prev + z * cur);
    std::string w = "2:";
    for (int r = 0; r < k; ++r) w += " 1";
    CHECK(homfly_G(parse_braid(w)).g_aq == next);
    prev = cur;
    cur = next;
  }
}

TEST_CASE("The (q, t) form of G differs from the (a, q) form by the change of variable") {
  for (const char* w : {"2: 1 1 1", "2: 1 1", "3: 1 -2 1 -2", "2: -1 -1 -1", "3: 1 1 2"}) {
    auto g = homfly_G(parse_braid(w));
    CHECK(g.g_qt_imaginary == (g.omega % 2 != 0));
    // (q t)^{omega/2} recovers F up to the sign of i^omega
    RationalFn back = g.g_qt * RationalFn(LaurentPoly::monomial(QT, {g.omega, g.omega}));
    int half = g.omega >= 0 ? g.omega / 2 : -((-g.omega + 1) / 2);
    CHECK(back == (half % 2 == 0 ? g.f : -g.f));
  }
}

TEST_CASE("G skein in the a variable on random triples") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    int p = 2 + trial % 3;
    auto b = oracle::random_braid(rng, p, trial % 7);
    std::size_t at = rng() % (b.letters.size() + 1);
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(p - 1));
    auto plus = b, minus = b;
    plus.letters.insert(plus.letters.begin() + static_cast<long>(at), i);
    minus.letters.insert(minus.letters.begin() + static_cast<long>(at), -i);
    auto gp = homfly_G(plus).g_aq, gm = homfly_G(minus).g_aq, g0 = homfly_G(b).g_aq;
    CHECK(g_skein_defect(gp, gm, g0).is_zero());
    // the same relation for P(a, q) = G(a^-1, q^-1) in the published form
    auto pp = mirror_g(gp), pm = mirror_g(gm), p0 = mirror_g(g0);
    CHECK(aq(1, 0) * pp - aq(-1, 0) * pm == (aq(0, 1) - aq(0, -1)) * p0);
  }
}

TEST_CASE("Specializations G_n") {
  for (int n = 1; n <= 4; ++n) CHECK(specialize_Gn(homfly_G(parse_braid("1:")), n) == q(0));
  auto tref = homfly_G(parse_braid("2: 1 1 1"));
  CHECK(specialize_Gn(tref, 2) == jones_normalized(braid_closure(parse_braid("2: 1 1 1"))));
  CHECK(specialize_Gn(tref, 2) == q(2) + q(6) - q(8));
  CHECK_THROWS_AS(specialize_Gn(tref, 0), InvalidInput);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int p = 2 + trial % 3;
    auto b = oracle::random_braid(rng, p, 1 + trial % 7);
    auto g = homfly_G(b);
    // sl(1): every link evaluates to 1
    CHECK(specialize_Gn(g, 1) == q(0));
    CHECK(specialize_Gn(g, 2) == jones_normalized(braid_closure(b)));
    std::size_t at = rng() % (b.letters.size() + 1);
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(p - 1));
    auto plus = b, minus = b;
    plus.letters.insert(plus.letters.begin() + static_cast<long>(at), i);
    minus.letters.insert(minus.letters.begin() + static_cast<long>(at), -i);
    for (int n : {2, 3}) {
      auto gp = specialize_Gn(homfly_G(plus), n), gm = specialize_Gn(homfly_G(minus), n);
      auto g0 = specialize_Gn(g, n);
      CHECK(q(-n) * gp - q(n) * gm == (q(-1) - q(1)) * g0);
      // after q -> q^-1 the relation takes the form q^n P+ - q^-n P- = (q - q^-1) P0
      CHECK(q(n) * gp.inverted() - q(-n) * gm.inverted() == (q(1) - q(-1)) * g0.inverted());
    }
  }
}

TEST_CASE("Wide edges") {
  auto w = parse_wide_word("3: E1 -2 E2 1");
  REQUIRE(w.letters.size() == 4);
  CHECK(w.letters[0].kind == WideLetter::Wide);
  CHECK(w.letters[1].kind == WideLetter::Negative);
  CHECK_THROWS_AS(parse_wide_word("2: E2"), InvalidInput);
  CHECK_THROWS_AS(parse_wide_word("2: X1"), InvalidInput);
  CHECK_THROWS_AS(parse_wide_word("E1"), InvalidInput);

  RationalFn single = (qt(0, 0) + qt(3, -1)) / (qt(0, 0) - qt(2, 0));
  CHECK(Fw("2: E1") == single);
  CHECK(Fw("2: 1") == Fw("2: E1") - RationalFn(q(2).with_vars(QT)) * F("2:"));

  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 10; ++trial) {
    int p = 2 + trial % 2;
    auto ctx = tokens_of(oracle::random_braid(rng, p + 1, 1 + trial % 5));
    auto ctx2 = tokens_of(oracle::random_braid(rng, p + 1, trial % 4));
    auto base = tokens_of(oracle::random_braid(rng, p, 1 + trial % 4));
    // appending E_p to a p-strand diagram
    auto with_e = base;
    with_e.push_back("E" + std::to_string(p));
    CHECK(Fw(wide_text(p + 1, with_e)) == single * Fw(wide_text(p, base)));
    // E_1 squared inside a context
    auto sq = ctx, one = ctx;
    sq.insert(sq.end(), {"E1", "E1"});
    one.push_back("E1");
    sq.insert(sq.end(), ctx2.begin(), ctx2.end());
    one.insert(one.end(), ctx2.begin(), ctx2.end());
    CHECK(Fw(wide_text(p + 1, sq)) == RationalFn((q(0) + q(2)).with_vars(QT)) * Fw(wide_text(p + 1, one)));
  }
  for (int trial = 0; trial < 5; ++trial) {
    auto ctx = tokens_of(oracle::random_braid(rng, 3, 2 + trial));
    auto mk = [&](std::vector<std::string> tail) {
      auto t = ctx;
      t.insert(t.end(), tail.begin(), tail.end());
      return Fw(wide_text(3, t));
    };
    RationalFn q2 = q(2).with_vars(QT);
    CHECK(mk({"E1", "E2", "E1"}) + q2 * mk({"E2"}) == mk({"E2", "E1", "E2"}) + q2 * mk({"E1"}));
  }
  // the algebra identities themselves
  auto e1 = wide_edge_expand(parse_wide_word("3: E1"));
  auto e2 = wide_edge_expand(parse_wide_word("3: E2"));
  CHECK(e1 * e1 == (q(0) + q(2)) * e1);
  CHECK(e1 * e2 * e1 + q(2) * e2 == e2 * e1 * e2 + q(2) * e1);
}

TEST_CASE("Fixed bracket models with q beta c = q^{+-n}") {
  for (int n = 2; n <= 5; ++n) {
    for (int sign : {1, -1}) {
      auto m = fixed_bracket_model(n, sign);
      INFO("n=" << n << " sign=" << sign);
      CHECK(m.d_is_q2b);
      CHECK(m.loop_identity);
      CHECK(m.bracket_identity);
      CHECK(m.qbc_squared);
    }
  }
  auto m1 = fixed_bracket_model(3, 1);
  CHECK(m1.d == q(1, -1));
  auto m2 = fixed_bracket_model(2, -1);
  CHECK(m2.U == q(0) + q(2));
  CHECK(m2.B == q(0) + q(2) + q(4));
  CHECK_THROWS_AS(fixed_bracket_model(2, 0), InvalidInput);
}

}  // namespace test_homflypt
}  // namespace linkhom
