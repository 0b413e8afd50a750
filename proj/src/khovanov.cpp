#include "linkhom/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "linkhom/braid.hpp"
#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

const std::vector<std::string> kQ{"q"};

std::uint64_t bit(std::size_t k) { return std::uint64_t{1} << k; }

/// All eps with `ones` bits among n, ascending.
std::vector<std::uint64_t> states_with(int n, int ones) {
  std::vector<std::uint64_t> out;
  if (ones < 0 || ones > n) return out;
  if (ones == 0) return {0};
  std::uint64_t v = (std::uint64_t{1} << ones) - 1;
  std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
  while (limit == 0 || v < limit) {
    out.push_back(v);
    std::uint64_t t = v | (v - 1);
    std::uint64_t next = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    if (next <= v) break;
    v = next;
  }
  return out;
}

std::vector<std::vector<Integer>> binomials(int n) {
  std::vector<std::vector<Integer>> c(n + 1, std::vector<Integer>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    c[a][0] = 1;
    for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
  }
  return c;
}

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Signed images of a labeling under the edge map src -> tgt at `changed`.
struct EdgeMap {
  bool merge = false;
  int a = -1, b = -1;        // merge: inputs a, b; split: input a
  int out1 = -1, out2 = -1;  // merge: output out1; split: outputs out1, out2
  std::vector<int> image;    // target circle of every untouched source circle
  int sign = 1;

  EdgeMap(const Diagram& d, const ResolutionState& src, const ResolutionState& tgt, std::uint64_t eps,
          std::size_t changed) {
    const auto& slots = d.crossings()[changed].slots;
    auto arc = [](int x) { return static_cast<std::size_t>(x); };
    int ca = src.arc_circle[arc(slots[kA])], cc = src.arc_circle[arc(slots[kC])];
    merge = ca != cc;
    if (merge) {
      a = std::min(ca, cc);
      b = std::max(ca, cc);
      out1 = tgt.arc_circle[arc(slots[kA])];
    } else {
      a = ca;
      out1 = tgt.arc_circle[arc(slots[kA])];
      out2 = tgt.arc_circle[arc(slots[kB])];
      if (out1 == out2) throw ComputationDefect("cube edge neither merges nor splits");
    }
    image.resize(src.circles.size(), -1);
    for (std::size_t s = 0; s < src.circles.size(); ++s)
      if (static_cast<int>(s) != a && static_cast<int>(s) != b)
        image[s] = tgt.arc_circle[arc(src.circles[s].front())];
    sign = std::popcount(eps & (bit(changed) - 1)) % 2 ? -1 : 1;
  }

  template <class Out>
  void apply(std::uint64_t mask, Out&& out) const {
    std::uint64_t base = 0;
    for (std::size_t s = 0; s < image.size(); ++s)
      if (image[s] >= 0 && ((mask >> s) & 1U)) base |= bit(static_cast<std::size_t>(image[s]));
    bool xa = (mask >> a) & 1U;
    if (merge) {
      bool xb = (mask >> b) & 1U;
      if (xa && xb) return;
      out(base | ((xa || xb) ? bit(static_cast<std::size_t>(out1)) : 0), sign);
    } else if (xa) {
      out(base | bit(static_cast<std::size_t>(out1)) | bit(static_cast<std::size_t>(out2)), sign);
    } else {
      out(base | bit(static_cast<std::size_t>(out2)), sign);
      out(base | bit(static_cast<std::size_t>(out1)), sign);
    }
  }
};

bool in_window(const JWindow& w, int j) { return !w || (j >= w->first && j <= w->second); }

struct Triplet {
  int j;
  std::uint32_t row, col;
  int value;
};

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d) {
  std::size_t n = d.size();
  if (n > 40) throw DomainError("bracket state sum limited to 40 crossings");
  // counts[i][c]: states with |eps| = i and c circles.
  int max_c = d.num_arcs() + 1;
  std::uint64_t total = bit(n);
  unsigned workers = worker_count();
  std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(workers * 4, total));
  std::vector<std::vector<std::vector<std::uint64_t>>> partial(
      chunks, std::vector<std::vector<std::uint64_t>>(n + 1, std::vector<std::uint64_t>(max_c + 1, 0)));
  parallel_for(chunks, [&](std::size_t k) {
    std::uint64_t lo = total / chunks * k, hi = k + 1 == chunks ? total : total / chunks * (k + 1);
    for (std::uint64_t eps = lo; eps < hi; ++eps)
      partial[k][std::popcount(eps)][circle_count(d, eps)]++;
  });
  auto binom = binomials(max_c);
  LaurentPoly result(kQ);
  for (std::size_t i = 0; i <= n; ++i)
    for (int c = 0; c <= max_c; ++c) {
      std::uint64_t cnt = 0;
      for (const auto& p : partial) cnt += p[i][c];
      if (!cnt) continue;
      // (-q)^i (q + q^-1)^c = (-1)^i sum_k C(c,k) q^{i + c - 2k}
      for (int k = 0; k <= c; ++k) {
        Integer v = binom[c][k] * cnt;
        if (i % 2) v = -v;
        result.add_term(ex(static_cast<int>(i) + c - 2 * k), v);
      }
    }
  return result;
}

LaurentPoly jones_unnormalized(const Diagram& d) {
  int np = d.n_plus(), nm = d.n_minus();
  return LaurentPoly::term(kQ, np - 2 * nm, 0, nm % 2 ? -1 : 1) * kauffman_bracket(d);
}

LaurentPoly jones_normalized(const Diagram& d) {
  // Divide by q + q^-1 through the factor (1 + q^2): synthetic division on
  // the coefficient sequence.
  LaurentPoly j = jones_unnormalized(d);
  if (j.is_zero()) return j;
  int lo = j.min_exp(0) / 2, hi = j.max_exp(0) / 2;
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = j.coeff(e);
  // j = q^{lo} * P(q), P = (1 + q^2) * R; then J = j / (q + q^-1) = q^{lo+1} R.
  std::vector<Integer> r(c.size() >= 2 ? c.size() - 2 : 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = c[k] - (k >= 2 ? r[k - 2] : Integer(0));
  }
  LaurentPoly out(kQ);
  for (std::size_t k = 0; k < r.size(); ++k) out.add_term(ex(lo + 1 + static_cast<int>(k)), r[k]);
  LaurentPoly circle = LaurentPoly::term(kQ, 1) + LaurentPoly::term(kQ, -1);
  if (out * circle != j) throw ComputationDefect("Jones polynomial is not divisible by q + q^-1");
  return out;
}

bool jones_skein_check(const Diagram& plus, const Diagram& minus, const Diagram& zero) {
  if (plus.size() != minus.size() || zero.size() + 1 != plus.size() || plus.n_plus() != minus.n_plus() + 1)
    throw InvalidInput("diagrams do not form a skein triple");
  LaurentPoly lhs = LaurentPoly::term(kQ, -2) * jones_unnormalized(plus) -
                    LaurentPoly::term(kQ, 2) * jones_unnormalized(minus);
  LaurentPoly rhs = (LaurentPoly::term(kQ, -1) - LaurentPoly::term(kQ, 1)) * jones_unnormalized(zero);
  return lhs == rhs;
}

std::size_t labeling_rank(std::uint64_t mask, int circles) {
  std::size_t rank = 0;
  int ones = std::popcount(mask);
  for (int t = 0; t < circles && ones > 0; ++t) {
    if ((mask >> t) & 1U) {
      // Labelings agreeing so far but with 1 at position t come first.
      rank += choose(circles - t - 1, ones);
      --ones;
    }
  }
  return rank;
}

KhovanovCube::KhovanovCube(Diagram d) : diagram_(std::move(d)) {
  if (diagram_.size() > 62) throw DomainError("cube complex limited to 62 crossings");
}

std::vector<std::pair<std::uint64_t, int>> KhovanovCube::apply_edge(std::uint64_t eps, std::size_t changed,
                                                                    std::uint64_t mask) const {
  auto ev = edge_event(diagram_, eps, changed);
  auto src = resolve_all(diagram_, ev.source), tgt = resolve_all(diagram_, ev.target);
  if (mask >> src.circles.size()) throw InvalidInput("labeling has bits beyond the circle count");
  EdgeMap em(diagram_, src, tgt, eps, changed);
  std::vector<std::pair<std::uint64_t, int>> out;
  em.apply(mask, [&](std::uint64_t m, int s) { out.emplace_back(m, s); });
  return out;
}

ChainLevel KhovanovCube::level(int i, const JWindow& window) const {
  const Diagram& d = diagram_;
  int n = static_cast<int>(d.size());
  ChainLevel lv;
  auto src_states = states_with(n, i);
  auto tgt_states = states_with(n, i + 1);
  std::vector<ResolutionState> src(src_states.size()), tgt(tgt_states.size());
  parallel_for(src.size(), [&](std::size_t k) { src[k] = resolve_all(d, src_states[k]); });
  parallel_for(tgt.size(), [&](std::size_t k) { tgt[k] = resolve_all(d, tgt_states[k]); });

  // Offsets of each state's labelings inside the (i, j) blocks, indexed by
  // the number p of X labels (j = c - 2p + i).
  auto offsets = [&](const std::vector<ResolutionState>& states, int deg, std::map<int, std::size_t>& dims) {
    std::vector<std::vector<std::size_t>> off(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
      int c = states[k].circle_count();
      off[k].assign(static_cast<std::size_t>(c + 1), 0);
      for (int p = 0; p <= c; ++p) {
        int j = c - 2 * p + deg;
        if (!in_window(window, j)) continue;
        auto& slot = dims[j];
        off[k][static_cast<std::size_t>(p)] = slot;
        slot += choose(c, p);
      }
    }
    return off;
  };
  std::map<int, std::size_t> tgt_dims;
  auto src_off = offsets(src, i, lv.dims);
  auto tgt_off = offsets(tgt, i + 1, tgt_dims);

  std::vector<std::vector<Triplet>> parts(src.size());
  parallel_for(src.size(), [&](std::size_t k) {
    std::uint64_t eps = src_states[k];
    const auto& s = src[k];
    int c = s.circle_count();
    for (std::size_t x = 0; x < d.size(); ++x) {
      if ((eps >> x) & 1U) continue;
      std::uint64_t f = eps | bit(x);
      auto pos = static_cast<std::size_t>(std::lower_bound(tgt_states.begin(), tgt_states.end(), f) - tgt_states.begin());
      const auto& t = tgt[pos];
      int ct = t.circle_count();
      EdgeMap em(d, s, t, eps, x);
      for (std::uint64_t mask = 0; mask < bit(static_cast<std::size_t>(c)); ++mask) {
        int p = std::popcount(mask);
        int j = c - 2 * p + i;
        if (!in_window(window, j)) continue;
        auto col = static_cast<std::uint32_t>(src_off[k][static_cast<std::size_t>(p)] + labeling_rank(mask, c));
        em.apply(mask, [&](std::uint64_t img, int sign) {
          int pt = std::popcount(img);
          auto row = static_cast<std::uint32_t>(tgt_off[pos][static_cast<std::size_t>(pt)] + labeling_rank(img, ct));
          parts[k].push_back({j, row, col, sign});
        });
      }
    }
  });
  for (const auto& [j, dim] : lv.dims) {
    auto it = tgt_dims.find(j);
    lv.d.emplace(j, SparseIntMatrix(it == tgt_dims.end() ? 0 : it->second, dim));
  }
  for (const auto& part : parts)
    for (const auto& t : part) lv.d.at(t.j).add(t.row, t.col, t.value);
  return lv;
}

GradedComplex khovanov_complex(const Diagram& d, const JWindow& window, bool normalized) {
  KhovanovCube cube(d);
  std::vector<ChainLevel> levels;
  for (int i = cube.min_degree(); i <= cube.max_degree(); ++i) levels.push_back(cube.level(i, window));
  GradedComplex c;
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (const auto& [j, n] : levels[i].dims) c.set_dim(static_cast<int>(i), j, n);
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (auto& [j, m] : levels[i].d) c.set_differential(static_cast<int>(i), j, std::move(m));
  if (normalized) {
    c.hom_shift = -d.n_minus();
    c.deg_shift = d.n_plus() - 2 * d.n_minus();
  }
  return c;
}

HomologyTable khovanov_homology_unnormalized(const Diagram& d, const HomologyOptions& opts) {
  KhovanovCube cube(d);
  auto t = streaming_homology(cube, opts);
  t.source = "khovanov cube, unnormalized";
  return t;
}

HomologyTable khovanov_homology(const Diagram& d, const HomologyOptions& opts) {
  int di = -d.n_minus(), dj = d.n_plus() - 2 * d.n_minus();
  HomologyOptions o = opts;
  if (o.i_max) *o.i_max -= di;
  if (o.j_window) o.j_window = std::make_pair(o.j_window->first - dj, o.j_window->second - dj);
  auto t = khovanov_homology_unnormalized(d, o).shifted(di, dj);
  t.source = "khovanov homology, normalized";
  return t;
}

nlohmann::json WidthReport::to_json() const {
  return {{"diagonals", std::vector<int>(diagonals.begin(), diagonals.end())},
          {"a_min", a_min},
          {"a_max", a_max},
          {"width", width},
          {"thin", thin}};
}

WidthReport width_report(const HomologyTable& t) {
  if (t.empty()) throw InvalidInput("width of an empty homology table");
  WidthReport w;
  for (const auto& [k, g] : t.entries()) w.diagonals.insert(k.second - 2 * k.first);
  w.a_min = *w.diagonals.begin();
  w.a_max = *w.diagonals.rbegin();
  w.width = (w.a_max - w.a_min) / 2 + 1;
  w.thin = w.width <= 2;
  return w;
}

nlohmann::json LesReport::to_json() const {
  auto v = nlohmann::json::array();
  for (const auto& [i, j] : rank_violations) v.push_back({i, j});
  return {{"crossing", crossing},    {"bracket_ok", bracket_ok}, {"rank_violations", v},
          {"cone_ok", cone_ok},      {"cone_detail", cone_detail}, {"ok", ok()}};
}

LesReport les_check(const Diagram& d, std::size_t c) {
  if (c >= d.size()) throw InvalidInput("crossing index out of range");
  LesReport rep;
  rep.crossing = c;
  Diagram d0 = resolve_crossing(d, c, 0), d1 = resolve_crossing(d, c, 1);
  rep.bracket_ok = kauffman_bracket(d) == kauffman_bracket(d0) - LaurentPoly::term(kQ, 1) * kauffman_bracket(d1);

  auto h = khovanov_homology_unnormalized(d);
  auto h0 = khovanov_homology_unnormalized(d0);
  auto h1 = khovanov_homology_unnormalized(d1);
  for (const auto& [k, g] : h.entries()) {
    auto [i, j] = k;
    if (g.rank > h0.rank(i, j) + h1.rank(i - 1, j - 1)) rep.rank_violations.emplace_back(i, j);
  }

  // Each face of the cube must reproduce the resolved diagram's cube, state
  // by state (equal circle counts give equal edge types and graded pieces).
  rep.cone_ok = true;
  std::uint64_t low = bit(c) - 1;
  for (std::uint64_t eps = 0; eps < bit(d.size()) && rep.cone_ok; ++eps) {
    std::uint64_t reduced = (eps & low) | ((eps >> (c + 1)) << c);
    bool one = (eps >> c) & 1U;
    int expect = circle_count(one ? d1 : d0, reduced);
    if (circle_count(d, eps) != expect) {
      rep.cone_ok = false;
      std::ostringstream os;
      os << "state " << eps << " differs from the " << (one ? "1" : "0") << "-face";
      rep.cone_detail = os.str();
    }
  }
  if (rep.cone_ok) {
    auto c_full = khovanov_complex(d), c0 = khovanov_complex(d0), c1 = khovanov_complex(d1);
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, n] : c_full.dims()) keys.insert(k);
    for (const auto& [k, n] : c0.dims()) keys.insert(k);
    for (const auto& [k, n] : c1.dims()) keys.insert({k.first + 1, k.second + 1});
    for (const auto& [i, j] : keys)
      if (c_full.dim(i, j) != c0.dim(i, j) + c1.dim(i - 1, j - 1)) {
        rep.cone_ok = false;
        rep.cone_detail = "graded dimensions differ at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
  }
  if (rep.cone_ok) rep.cone_detail = "faces match the resolved cubes";
  return rep;
}

Diagram torus_diagram(int p, int q) {
  if (p < 1 || q < 0) throw InvalidInput("torus diagram needs p >= 1 and q >= 0");
  return braid_closure(torus_braid(p, q));
}

bool StabilityReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const StabilityItem& x) { return x.pass; });
}

nlohmann::json StabilityReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& it : items) {
    auto mm = nlohmann::json::array();
    for (const auto& [i, j] : it.mismatches) mm.push_back({i, j});
    arr.push_back({{"relation", it.relation},
                   {"lhs", it.lhs},
                   {"rhs", it.rhs},
                   {"i_below", it.i_bound},
                   {"j_offset", it.j_offset},
                   {"pass", it.pass},
                   {"mismatches", mm}});
  }
  return {{"pass", pass()}, {"items", arr}};
}

namespace {

std::string dname(int p, int q) { return "D_{" + std::to_string(p) + "," + std::to_string(q) + "}"; }

StabilityItem compare_tables(const std::string& rel, const std::string& l, const HomologyTable& a,
                             const std::string& r, const HomologyTable& b, int bound, int joff) {
  StabilityItem it{rel, l, r, bound, joff, true, {}};
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, g] : a.entries())
    if (k.first < bound) keys.insert(k);
  for (const auto& [k, g] : b.entries())
    if (k.first < bound) keys.insert({k.first, k.second - joff});
  for (const auto& [i, j] : keys)
    if (!(a.at(i, j) == b.at(i, j + joff))) it.mismatches.emplace_back(i, j);
  it.pass = it.mismatches.empty();
  return it;
}

}  // namespace

StabilityReport stability_check(int p, const std::vector<int>& q_values, std::optional<int> i_cap,
                                bool include_square) {
  if (p < 2) throw InvalidInput("stability needs p >= 2");
  if (q_values.empty()) throw InvalidInput("stability needs at least one q");
  std::vector<int> qs = q_values;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  if (qs.front() < p) throw InvalidInput("stability needs p <= min(q)");
  auto cap = [&](int bound) { return i_cap ? std::min(bound, *i_cap + 1) : bound; };

  // Tables are computed up to the largest i any comparison needs.
  std::map<std::pair<int, int>, std::pair<int, HomologyTable>> cache;
  auto table = [&](int pp, int qq, int bound) -> const HomologyTable& {
    auto& slot = cache[{pp, qq}];
    if (slot.second.source.empty() || slot.first < bound) {
      HomologyOptions o;
      o.i_max = bound;
      slot = {bound, khovanov_homology_unnormalized(torus_diagram(pp, qq), o)};
    }
    return slot.second;
  };

  StabilityReport rep;
  for (std::size_t k = 1; k < qs.size(); ++k) {
    int q = qs[k];
    if (qs[k - 1] != q - 1) continue;
    int bound = cap(p + q - 3);
    rep.items.push_back(compare_tables("drop-twist", dname(p, q), table(p, q, bound), dname(p, q - 1),
                                       table(p, q - 1, bound), bound, 0));
  }
  std::vector<int> chain;
  for (int q : qs)
    if (q >= p + 1) chain.push_back(q);
  int chain_bound = cap(2 * p - 1);
  for (std::size_t k = 1; k < chain.size(); ++k)
    rep.items.push_back(compare_tables("chain", dname(p, chain[0]), table(p, chain[0], chain_bound),
                                       dname(p, chain[k]), table(p, chain[k], chain_bound), chain_bound, 0));
  if (include_square) {
    int bound = cap(2 * p - 3);
    rep.items.push_back(compare_tables("square", dname(p, p), table(p, p, bound), dname(p - 1, p),
                                       table(p - 1, p, bound), bound, 1));
  }
  return rep;
}

nlohmann::json StablePoincare::to_json() const {
  auto arr = nlohmann::json::array();
  for (std::size_t k = 0; k < polys.size(); ++k) {
    nlohmann::json e{{"n", n_values[k]}, {"poincare", polys[k].to_string()}};
    if (k > 0) e["agrees_with_previous"] = static_cast<bool>(agree[k - 1]);
    arr.push_back(e);
  }
  return {{"m", m}, {"series", arr}};
}

StablePoincare stable_poincare(int m, const std::vector<int>& n_values, std::optional<int> i_max) {
  if (m < 2) throw DomainError("stable Poincare polynomials need m >= 2");
  StablePoincare sp;
  sp.m = m;
  sp.n_values = n_values;
  for (int n : n_values) {
    if (n < 1) throw InvalidInput("n must be positive");
    HomologyOptions o;
    o.i_max = i_max;
    // q^{-(m-1)n} P(T_{m,n}) is the Poincare polynomial of the unnormalized
    // homology of the torus diagram, which has no negative crossings.
    sp.polys.push_back(poincare_polynomial(khovanov_homology_unnormalized(torus_diagram(m, n), o)));
  }
  for (std::size_t k = 1; k < sp.polys.size(); ++k) {
    int limit = m + std::min(n_values[k - 1], n_values[k]) - 3;
    bool same = true;
    for (const auto* poly : {&sp.polys[k - 1], &sp.polys[k]})
      for (const auto& [e, c] : poly->terms())
        if (e[0] / 2 < limit) {
          const auto& other = poly == &sp.polys[k] ? sp.polys[k - 1] : sp.polys[k];
          if (other.coefficient(e) != c) same = false;
        }
    sp.agree.push_back(same);
  }
  return sp;
}

}  // namespace linkhom
