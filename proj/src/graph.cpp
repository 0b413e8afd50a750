#include "linkhom/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

const std::vector<std::string> kQV{"q", "v"};
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kQT{"q", "t"};
const std::vector<std::string> kTQ{"t", "q"};
const std::vector<std::string> kQ{"q"};

constexpr std::size_t kMaxStateSumEdges = 26;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

void require_state_sum_size(const Multigraph& g) {
  if (g.size() > kMaxStateSumEdges)
    throw InvalidInput("state sums are limited to " + std::to_string(kMaxStateSumEdges) + " edges");
}

// counts[s][k]: number of edge subsets with |s| edges and k components.
std::vector<std::vector<Integer>> state_counts(const Multigraph& g) {
  validate(g);
  require_state_sum_size(g);
  std::size_t m = g.size();
  std::vector<std::vector<Integer>> counts(m + 1, std::vector<Integer>(static_cast<std::size_t>(g.vertices) + 1));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    UnionFind uf(g.vertices);
    int k = g.vertices;
    for (std::size_t e = 0; e < m; ++e)
      if (mask >> e & 1)
        if (uf.unite(g.edges[e].first - 1, g.edges[e].second - 1)) --k;
    counts[static_cast<std::size_t>(std::popcount(mask))][static_cast<std::size_t>(k)] += 1;
  }
  return counts;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Canonical form for memoization: endpoints sorted within and across edges.
using EdgeList = std::vector<std::pair<int, int>>;
EdgeList canonical(EdgeList e) {
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  std::sort(e.begin(), e.end());
  return e;
}

// G/e for a non-loop edge: v merges into u and later vertices shift down.
std::pair<int, EdgeList> contract(int n, const EdgeList& rest, int u, int v) {
  if (u > v) std::swap(u, v);
  EdgeList out;
  auto img = [&](int x) { return x == v ? u : (x > v ? x - 1 : x); };
  for (auto [a, b] : rest) out.emplace_back(img(a), img(b));
  return {n - 1, canonical(out)};
}

bool connected_without(int n, const EdgeList& rest, int u, int v) {
  UnionFind uf(n);
  for (auto [a, b] : rest) uf.unite(a - 1, b - 1);
  return uf.find(u - 1) == uf.find(v - 1);
}

class DichromaticRecursion {
 public:
  LaurentPoly eval(int n, const EdgeList& edges) {
    auto key = std::make_pair(n, edges);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LaurentPoly r(kQV);
    if (edges.empty()) {
      r = LaurentPoly::term(kQV, 0, n);
    } else {
      auto [u, v] = edges.back();
      EdgeList rest(edges.begin(), edges.end() - 1);
      LaurentPoly q = LaurentPoly::term(kQV, 1, 0);
      if (u == v) {
        r = (LaurentPoly(kQV, 1) - q) * eval(n, rest);
      } else {
        auto [n2, contracted] = contract(n, rest, u, v);
        r = eval(n, rest) - q * eval(n2, contracted);
      }
    }
    memo_.emplace(key, r);
    return r;
  }

 private:
  std::map<std::pair<int, EdgeList>, LaurentPoly> memo_;
};

class TutteRecursion {
 public:
  LaurentPoly eval(int n, const EdgeList& edges) {
    auto key = std::make_pair(n, edges);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LaurentPoly r(kXY, 1);
    if (!edges.empty()) {
      auto [u, v] = edges.back();
      EdgeList rest(edges.begin(), edges.end() - 1);
      if (u == v) {
        r = LaurentPoly::term(kXY, 0, 1) * eval(n, rest);
      } else {
        auto [n2, contracted] = contract(n, rest, u, v);
        if (!connected_without(n, rest, u, v))
          r = LaurentPoly::term(kXY, 1, 0) * eval(n2, contracted);
        else
          r = eval(n, rest) + eval(n2, contracted);
      }
    }
    memo_.emplace(key, r);
    return r;
  }

 private:
  std::map<std::pair<int, EdgeList>, LaurentPoly> memo_;
};

}  // namespace

std::string Multigraph::to_text() const {
  std::ostringstream os;
  os << "v " << vertices << "\n";
  for (auto [u, v] : edges) os << "e " << u << " " << v << "\n";
  return os.str();
}

Multigraph parse_graph(const std::string& text) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), '/', '\n');
  std::istringstream in(norm);
  std::string line;
  Multigraph g;
  bool have_v = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& why) {
      throw InvalidInput("graph line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "v") {
      if (have_v) fail("duplicate 'v' line");
      if (!(ls >> g.vertices) || g.vertices < 0) fail("expected 'v N' with N >= 0");
      have_v = true;
    } else if (tag == "e") {
      if (!have_v) fail("edge before the 'v' line");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) fail("expected 'e u v'");
      if (u < 1 || v < 1 || u > g.vertices || v > g.vertices) fail("endpoint out of range");
      g.edges.emplace_back(u, v);
    } else {
      fail("unknown tag '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing text '" + extra + "'");
  }
  if (!have_v) throw InvalidInput("graph text has no 'v N' line");
  return g;
}

void validate(const Multigraph& g) {
  if (g.vertices < 0) throw InvalidInput("negative vertex count");
  for (auto [u, v] : g.edges)
    if (u < 1 || v < 1 || u > g.vertices || v > g.vertices) throw InvalidInput("edge endpoint out of range");
}

Multigraph cycle_graph(int k) {
  if (k < 1) throw InvalidInput("cycle needs at least one vertex");
  Multigraph g{k, {}};
  for (int i = 1; i <= k; ++i) g.edges.emplace_back(i, i % k + 1);
  return g;
}

Multigraph discrete_graph(int k) {
  if (k < 0) throw InvalidInput("negative vertex count");
  return Multigraph{k, {}};
}

Multigraph relabeled(const Multigraph& g, const std::vector<int>& perm, const std::vector<std::size_t>& order) {
  if (perm.size() != static_cast<std::size_t>(g.vertices) || order.size() != g.size())
    throw InvalidInput("relabeling has the wrong size");
  Multigraph out{g.vertices, {}};
  for (std::size_t k : order) {
    auto [u, v] = g.edges.at(k);
    out.edges.emplace_back(perm.at(static_cast<std::size_t>(u - 1)), perm.at(static_cast<std::size_t>(v - 1)));
  }
  validate(out);
  return out;
}

GraphState graph_state(const Multigraph& g, std::uint64_t mask) {
  UnionFind uf(g.vertices);
  for (std::size_t e = 0; e < g.size(); ++e)
    if (mask >> e & 1) uf.unite(g.edges[e].first - 1, g.edges[e].second - 1);
  GraphState s;
  s.comp.assign(static_cast<std::size_t>(g.vertices), -1);
  std::vector<int> root_index(static_cast<std::size_t>(g.vertices), -1);
  // Vertices are scanned in order, so roots are met at their smallest vertex.
  for (int v = 0; v < g.vertices; ++v) {
    int r = uf.find(v);
    auto& idx = root_index[static_cast<std::size_t>(r)];
    if (idx < 0) idx = s.components++;
    s.comp[static_cast<std::size_t>(v)] = idx;
  }
  return s;
}

LaurentPoly dichromatic(const Multigraph& g) {
  auto counts = state_counts(g);
  LaurentPoly p(kQV);
  for (std::size_t s = 0; s < counts.size(); ++s)
    for (std::size_t k = 0; k < counts[s].size(); ++k)
      if (counts[s][k] != 0)
        p.add_term(ex(static_cast<int>(s), static_cast<int>(k)), (s % 2 ? -1 : 1) * counts[s][k]);
  return p;
}

LaurentPoly dichromatic_recursive(const Multigraph& g) {
  validate(g);
  DichromaticRecursion r;
  return r.eval(g.vertices, canonical(g.edges));
}

LaurentPoly tutte(const Multigraph& g) {
  // T = (x-1)^{-k(E)} (y-1)^{-N} P_G(1-y, (x-1)(y-1)). A state with s edges
  // and k components contributes (-1)^s (-1)^s (x-1)^{k-k(E)} (y-1)^{s+k-N}.
  auto counts = state_counts(g);
  int kE = graph_state(g, (std::uint64_t{1} << g.size()) - 1).components;
  LaurentPoly X = LaurentPoly::term(kXY, 1, 0) - LaurentPoly(kXY, 1);
  LaurentPoly Y = LaurentPoly::term(kXY, 0, 1) - LaurentPoly(kXY, 1);
  LaurentPoly t(kXY);
  for (std::size_t s = 0; s < counts.size(); ++s)
    for (std::size_t k = 0; k < counts[s].size(); ++k) {
      if (counts[s][k] == 0) continue;
      int ex_x = static_cast<int>(k) - kE, ex_y = static_cast<int>(s + k) - g.vertices;
      if (ex_x < 0 || ex_y < 0) throw ComputationDefect("Tutte conversion produced a negative power");
      t += X.pow(static_cast<unsigned>(ex_x)) * Y.pow(static_cast<unsigned>(ex_y)) * counts[s][k];
    }
  return t;
}

LaurentPoly tutte_recursive(const Multigraph& g) {
  validate(g);
  TutteRecursion r;
  return r.eval(g.vertices, canonical(g.edges));
}

LaurentPoly specialize_Pn(const Multigraph& g, int n) {
  if (n < 1) throw InvalidInput("P_n needs n >= 1");
  auto counts = state_counts(g);
  LaurentPoly v = geometric_sum(n);
  LaurentPoly p(kQ);
  for (std::size_t s = 0; s < counts.size(); ++s)
    for (std::size_t k = 0; k < counts[s].size(); ++k)
      if (counts[s][k] != 0)
        p += LaurentPoly::term(kQ, n * static_cast<int>(s), 0, (s % 2 ? -1 : 1) * counts[s][k]) *
             v.pow(static_cast<unsigned>(k));
  return p;
}

LaurentPoly specialize_Qn(const Multigraph& g, int n, int lo, int hi) {
  if (n > 2) throw InvalidInput("Q_n is defined here for n <= 2");
  if (lo > hi) throw InvalidInput("empty window");
  auto counts = state_counts(g);
  // v^k = q^{k(n-1)} sum_i C(i+k-1, k-1) q^{-i}
  LaurentPoly out(kQ);
  for (int j = lo; j <= hi; ++j) {
    Integer c = 0;
    for (std::size_t s = 0; s < counts.size(); ++s)
      for (std::size_t k = 0; k < counts[s].size(); ++k) {
        if (counts[s][k] == 0) continue;
        long i = static_cast<long>(s) + static_cast<long>(k) * (n - 1) - j;
        if (i < 0) continue;
        Integer series = k == 0 ? Integer(i == 0 ? 1 : 0) : binomial(i + static_cast<long>(k) - 1, static_cast<long>(k) - 1);
        c += (s % 2 ? -1 : 1) * counts[s][k] * series;
      }
    if (c != 0) out.add_term(ex(j), c);
  }
  return out;
}

LaurentPoly jones_graph_series(const Multigraph& g, int lo, int hi) { return specialize_Qn(g, 2, lo, hi); }

RationalFn jones_graph(const Multigraph& g) {
  LaurentPoly q = LaurentPoly::term(kQ, 1);
  RationalFn v = RationalFn(q * q) / RationalFn(q - LaurentPoly(kQ, 1));
  return compose(RationalFn(dichromatic(g)), kQ, {RationalFn(q), v});
}

RationalFn dichromatic_DG(const Multigraph& g) {
  RationalFn one(LaurentPoly(kQT, 1));
  RationalFn w = one + RationalFn(LaurentPoly::term(kQT, 1, -1));
  RationalFn v = w / (one - RationalFn(LaurentPoly::term(kQT, 1, 0)));
  RationalFn p = compose(RationalFn(dichromatic(g)), kQT, {RationalFn(LaurentPoly::term(kQT, 1, 0)), v});
  return w.pow(static_cast<int>(g.size())) * p;
}

RationalFn dichromatic_from_DG(const RationalFn& dg, std::size_t edges) {
  RationalFn one(LaurentPoly(kQV, 1));
  RationalFn q(LaurentPoly::term(kQV, 1, 0));
  RationalFn vq = RationalFn(LaurentPoly::term(kQV, 0, 1)) * (one - q);  // v(1-q) = 1 + t^-1 q
  std::vector<RationalFn> img;
  for (const auto& name : dg.vars()) {
    if (name == "q") img.push_back(q);
    else if (name == "t") img.push_back(q / (vq - one));
    else throw InvalidInput("D_G value has unexpected variable '" + name + "'");
  }
  return compose(dg, kQV, img) / vq.pow(static_cast<int>(edges));
}

HomologyTable polygon_reference(int k, int n) {
  if (k < 3) throw InvalidInput("polygon reference needs k >= 3");
  if (n < 1) throw InvalidInput("polygon reference needs n >= 1");
  auto tq = [](int ti, int qj) { return LaurentPoly::term(kTQ, ti, qj); };
  LaurentPoly A = geometric_sum(n - 1).with_vars(kTQ);
  LaurentPoly B = geometric_sum(n).with_vars(kTQ);
  LaurentPoly free(kTQ);
  std::vector<std::pair<int, int>> torsion;
  if (k % 2 == 1) {
    int g = (k - 1) / 2;
    LaurentPoly mid(kTQ);
    for (int i = 1; i <= g - 1; ++i) mid += (tq(2 * i - 1, 0) + tq(2 * i, 0)) * tq(0, g * n - g + i * (n + 1));
    mid += tq(2 * g - 1, 2 * g * n);
    free = A.pow(static_cast<unsigned>(2 * g + 1)) + A * mid + tq(2 * g, 2 * g * n) * B +
           tq(2 * g + 1, (2 * g + 1) * n) * B;
    for (int i = 1; i <= g; ++i) torsion.emplace_back(2 * i - 1, g * n - g - 1 + i * (n + 1));
  } else {
    int g = (k - 2) / 2;
    LaurentPoly mid(kTQ);
    for (int i = 0; i <= g - 1; ++i) mid += (tq(2 * i, 0) + tq(2 * i + 1, 0)) * tq(0, g * n + n - g + i * (n + 1));
    mid += tq(2 * g, (2 * g + 1) * n);
    free = A.pow(static_cast<unsigned>(2 * g + 2)) + A * mid + tq(2 * g + 1, (2 * g + 1) * n) * B +
           tq(2 * g + 2, (2 * g + 2) * n) * B;
    for (int i = 1; i <= g; ++i) torsion.emplace_back(2 * i, (g + 1) * (n - 1) + i * (n + 1));
  }
  std::map<std::pair<int, int>, Group> groups;
  for (const auto& [e, c] : free.terms()) {
    if (c < 0) throw ComputationDefect("negative rank in the polygon formula");
    groups[{e[0] / 2, e[1] / 2}].rank = static_cast<std::size_t>(c);
  }
  for (auto ij : torsion) groups[ij].torsion.push_back(Integer(n + 1));
  HomologyTable t;
  t.source = "polygon_reference(" + std::to_string(k) + "," + std::to_string(n) + ")";
  for (auto& [ij, grp] : groups) t.set(ij.first, ij.second, grp);
  return t;
}

}  // namespace linkhom
