#include "linkhom/graph_complex.hpp"

#include <bit>
#include <functional>
#include <map>
#include <optional>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

constexpr std::size_t kMaxCubeEdges = 20;

using Labels = std::vector<int>;
using Emit = std::function<void(const Labels&, int)>;

// The per-theory pieces of a graph cube complex.
struct CubeRules {
  virtual ~CubeRules() = default;
  /// Calls emit(labels, j) for every generator on a state with k components
  /// and `size` edges.
  virtual void generators(int k, int size, const Emit& emit) const = 0;
  virtual std::optional<int> merge(int a, int b) const = 0;
  virtual std::optional<int> same_component(int a) const = 0;
};

struct PnRules : CubeRules {
  int n;
  PnVariant variant;
  PnRules(int n_, PnVariant v) : n(n_), variant(v) {}

  void generators(int k, int size, const Emit& emit) const override {
    Labels l(static_cast<std::size_t>(k), 0);
    while (true) {
      int j = n * size;
      for (int e : l) j += n - e;
      emit(l, j);
      std::size_t p = 0;
      while (p < l.size() && l[p] == n) l[p++] = 0;
      if (p == l.size()) return;
      ++l[p];
    }
  }
  std::optional<int> merge(int a, int b) const override {
    if (a + b > n) return std::nullopt;
    return a + b;
  }
  std::optional<int> same_component(int a) const override {
    if (variant == PnVariant::XPower && a == 0) return n;
    return std::nullopt;
  }
};

// Weak compositions of total into k parts, in lexicographic order.
void compositions(int k, int total, const std::function<void(const Labels&)>& f) {
  if (k == 0) {
    if (total == 0) f({});
    return;
  }
  Labels l(static_cast<std::size_t>(k), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == l.size()) {
      l[pos] = left;
      f(l);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      l[pos] = x;
      rec(pos + 1, left - x);
    }
  };
  rec(0, total);
}

struct QnRules : CubeRules {
  int n, lo, hi;
  QnRules(int n_, int lo_, int hi_) : n(n_), lo(lo_), hi(hi_) {}

  void generators(int k, int size, const Emit& emit) const override {
    for (int j = lo; j <= hi; ++j) {
      int total = k * (n - 1) + size - j;
      if (total < 0) continue;
      compositions(k, total, [&](const Labels& l) { emit(l, j); });
    }
  }
  std::optional<int> merge(int a, int b) const override { return a + b + 2 - n; }
  std::optional<int> same_component(int a) const override { return a + 1; }
};

// Enhanced states: labels l on components with j = |s| + k(s) - |l|.
struct EnhancedRules : CubeRules {
  int j;
  explicit EnhancedRules(int j_) : j(j_) {}

  void generators(int k, int size, const Emit& emit) const override {
    int total = size + k - j;
    if (total < 0) return;
    compositions(k, total, [&](const Labels& l) { emit(l, j); });
  }
  std::optional<int> merge(int a, int b) const override { return a + b; }
  std::optional<int> same_component(int a) const override { return a + 1; }
};

GradedComplex build_cube(const Multigraph& g, const CubeRules& rules) {
  validate(g);
  std::size_t m = g.size();
  if (m > kMaxCubeEdges) throw InvalidInput("graph complexes are limited to " + std::to_string(kMaxCubeEdges) + " edges");
  std::size_t states = std::size_t{1} << m;

  std::vector<GraphState> st(states);
  std::vector<std::vector<int>> rep(states);  // smallest vertex of each component
  for (std::size_t eps = 0; eps < states; ++eps) {
    st[eps] = graph_state(g, eps);
    rep[eps].assign(static_cast<std::size_t>(st[eps].components), -1);
    for (int v = 0; v < g.vertices; ++v) {
      int& r = rep[eps][static_cast<std::size_t>(st[eps].comp[static_cast<std::size_t>(v)])];
      if (r < 0) r = v;
    }
  }

  std::vector<std::map<Labels, std::pair<int, std::size_t>>> gens(states);
  std::map<std::pair<int, int>, std::size_t> dims;
  for (std::size_t eps = 0; eps < states; ++eps) {
    int i = std::popcount(eps);
    rules.generators(st[eps].components, i, [&](const Labels& l, int j) {
      gens[eps].emplace(l, std::make_pair(j, dims[{i, j}]++));
    });
  }

  GradedComplex c;
  for (auto [ij, n] : dims) c.set_dim(ij.first, ij.second, n);
  std::map<std::pair<int, int>, SparseIntMatrix> blocks;
  for (std::size_t eps = 0; eps < states; ++eps) {
    int i = std::popcount(eps);
    for (std::size_t e = 0; e < m; ++e) {
      if (eps >> e & 1) continue;
      std::size_t next = eps | (std::size_t{1} << e);
      int sign = std::popcount(eps & ((std::size_t{1} << e) - 1)) % 2 ? -1 : 1;
      int cu = st[eps].comp[static_cast<std::size_t>(g.edges[e].first - 1)];
      int cv = st[eps].comp[static_cast<std::size_t>(g.edges[e].second - 1)];
      int target_comp = st[next].comp[static_cast<std::size_t>(g.edges[e].first - 1)];
      for (const auto& [l, where] : gens[eps]) {
        std::optional<int> val = cu != cv ? rules.merge(l[static_cast<std::size_t>(cu)], l[static_cast<std::size_t>(cv)])
                                          : rules.same_component(l[static_cast<std::size_t>(cu)]);
        if (!val) continue;
        Labels t(static_cast<std::size_t>(st[next].components), 0);
        for (std::size_t old = 0; old < l.size(); ++old)
          t[static_cast<std::size_t>(st[next].comp[static_cast<std::size_t>(rep[eps][old])])] = l[old];
        t[static_cast<std::size_t>(target_comp)] = *val;
        auto it = gens[next].find(t);
        if (it == gens[next].end() || it->second.first != where.first)
          throw ComputationDefect("graph cube edge map left the generator set at (" + std::to_string(i) + "," +
                                  std::to_string(where.first) + ")");
        auto key = std::make_pair(i, where.first);
        auto bit = blocks.find(key);
        if (bit == blocks.end())
          bit = blocks.emplace(key, SparseIntMatrix(c.dim(i + 1, where.first), c.dim(i, where.first))).first;
        bit->second.add(it->second.second, where.second, sign);
      }
    }
  }
  for (auto& [ij, mat] : blocks) c.set_differential(ij.first, ij.second, std::move(mat));
  return c;
}

}  // namespace

PnVariant parse_pn_variant(const std::string& name) {
  if (name == "zero") return PnVariant::ZeroMap;
  if (name == "xn") return PnVariant::XPower;
  throw InvalidInput("unknown differential variant '" + name + "' (expected zero or xn)");
}

GradedComplex build_Pn_complex(const Multigraph& g, int n, PnVariant variant) {
  if (n < 1) throw InvalidInput("P_n complex needs n >= 1");
  return build_cube(g, PnRules(n, variant));
}

HomologyTable Pn_homology(const Multigraph& g, int n, PnVariant variant, const HomologyOptions& opts) {
  auto t = graded_homology(build_Pn_complex(g, n, variant), opts);
  t.source = "Pn(n=" + std::to_string(n) + (variant == PnVariant::ZeroMap ? ",zero)" : ",xn)");
  return t;
}

GradedComplex build_Qn_complex(const Multigraph& g, int n, int lo, int hi) {
  if (n > 2) throw InvalidInput("Q_n complex needs n <= 2");
  if (lo > hi) throw InvalidInput("empty degree window");
  return build_cube(g, QnRules(n, lo, hi));
}

HomologyTable Qn_homology(const Multigraph& g, int n, int lo, int hi, const HomologyOptions& opts) {
  auto t = graded_homology(build_Qn_complex(g, n, lo, hi), opts);
  t.source = "Qn(n=" + std::to_string(n) + ")";
  return t;
}

GradedComplex build_enhanced_complex(const Multigraph& g, int j) { return build_cube(g, EnhancedRules(j)); }

HomologyTable enhanced_homology(const Multigraph& g, int lo, int hi, const HomologyOptions& opts) {
  if (lo > hi) throw InvalidInput("empty degree window");
  HomologyTable out;
  out.source = "enhanced";
  for (int j = lo; j <= hi; ++j) {
    auto t = graded_homology(build_enhanced_complex(g, j), opts);
    for (const auto& [ij, grp] : t.entries()) out.set(ij.first, ij.second, grp);
    out.rank_only = t.rank_only;
  }
  return out;
}

}  // namespace linkhom
