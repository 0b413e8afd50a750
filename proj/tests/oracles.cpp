#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oracle {

using linkhom::LaurentPoly;

linkhom::BraidWord random_braid(std::mt19937_64& rng, int strands, int length) {
  linkhom::BraidWord b;
  b.strands = strands;
  if (strands < 2) return b;
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  for (int k = 0; k < length; ++k) b.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return b;
}

Dense random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> v(lo, hi);
  Dense a(rows, std::vector<Integer>(cols));
  for (auto& r : a)
    for (auto& x : r) x = v(rng);
  return a;
}

namespace {

Integer det(const Dense& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Integer term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t x = start; x < n; ++x) {
    cur.push_back(x);
    subsets(n, k, x + 1, cur, out);
    cur.pop_back();
  }
}

Integer igcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

std::vector<Integer> minors_smith(const Dense& a) {
  std::vector<Integer> out;
  std::size_t m = a.size(), n = m ? a[0].size() : 0;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m, k, 0, cur, rs);
    subsets(n, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Dense sub(k, std::vector<Integer>(k));
        for (std::size_t x = 0; x < k; ++x)
          for (std::size_t y = 0; y < k; ++y) sub[x][y] = a[r[x]][c[y]];
        g = igcd(g, det(sub));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::vector<Integer> euclid_smith(Dense a) {
  std::vector<Integer> out;
  std::size_t m = a.size(), n = m ? a[0].size() : 0;
  auto absv = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found = false;
    for (std::size_t j = t; j < n && !found; ++j)
      for (std::size_t i = t; i < m && !found; ++i)
        if (a[i][j] != 0) {
          std::swap(a[t], a[i]);
          swap_cols(t, j);
          found = true;
        }
    if (!found) break;
    while (true) {
      // Clear column t below the pivot, always pivoting on the smallest entry.
      while (true) {
        std::size_t best = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a[i][t] != 0 && absv(a[i][t]) < absv(a[best][t])) best = i;
        std::swap(a[t], a[best]);
        bool done = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] == 0) continue;
          Integer q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
          done = done && a[i][t] == 0;
        }
        if (done) break;
      }
      bool row_clear = true;
      for (std::size_t j = t + 1; j < n; ++j)
        if (a[t][j] != 0) row_clear = false;
      if (!row_clear) {
        std::size_t best = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[t][j] != 0 && absv(a[t][j]) < absv(a[t][best])) best = j;
        swap_cols(t, best);
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] == 0) continue;
          Integer q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        }
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            fixed = true;
          }
      if (!fixed) break;
    }
    out.push_back(absv(a[t][t]));
  }
  return out;
}

std::size_t rational_rank(const Dense& a) {
  Dense m = a;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

namespace {

// Nodes are (strand position, level) with the top level glued to level 0.
struct Smoothing {
  std::vector<int> label;  // circle index per node, circles ordered by least node
  int count = 0;
};

Smoothing smooth(const linkhom::BraidWord& b, std::uint64_t eps) {
  int p = b.strands, m = static_cast<int>(b.letters.size());
  int nodes = p * std::max(m, 1);
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto join = [&](int x, int y) { parent[find(x)] = find(y); };
  auto node = [&](int pos, int lvl) { return (lvl % std::max(m, 1)) * p + pos; };
  for (int k = 0; k < m; ++k) {
    int g = std::abs(b.letters[k]) - 1;
    int bit = static_cast<int>((eps >> k) & 1U);
    bool vertical = (b.letters[k] > 0) == (bit == 0);
    for (int s = 0; s < p; ++s)
      if (s != g && s != g + 1) join(node(s, k), node(s, k + 1));
    if (vertical) {
      join(node(g, k), node(g, k + 1));
      join(node(g + 1, k), node(g + 1, k + 1));
    } else {
      join(node(g, k), node(g + 1, k));
      join(node(g, k + 1), node(g + 1, k + 1));
    }
  }
  Smoothing s;
  s.label.assign(nodes, -1);
  std::map<int, int> root_label;
  for (int x = 0; x < nodes; ++x) {
    int r = find(x);
    auto it = root_label.find(r);
    if (it == root_label.end()) it = root_label.emplace(r, s.count++).first;
    s.label[x] = it->second;
  }
  return s;
}

}  // namespace

int braid_circles(const linkhom::BraidWord& b, std::uint64_t eps) { return smooth(b, eps).count; }

LaurentPoly braid_bracket(const linkhom::BraidWord& b) {
  std::size_t m = b.letters.size();
  LaurentPoly circle = LaurentPoly::term({"q"}, 1) + LaurentPoly::term({"q"}, -1);
  LaurentPoly total({"q"});
  for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << m); ++eps) {
    int ones = __builtin_popcountll(eps);
    LaurentPoly term = LaurentPoly::term({"q"}, ones, 0, ones % 2 ? -1 : 1) * circle.pow(braid_circles(b, eps));
    total += term;
  }
  return total;
}

LaurentPoly braid_jones(const linkhom::BraidWord& b) {
  int np = 0, nm = 0;
  for (int l : b.letters) (l > 0 ? np : nm)++;
  return LaurentPoly::term({"q"}, np - 2 * nm, 0, nm % 2 ? -1 : 1) * braid_bracket(b);
}

linkhom::HomologyTable braid_khovanov_unnormalized(const linkhom::BraidWord& b) {
  std::size_t m = b.letters.size();
  std::uint64_t states = std::uint64_t{1} << m;
  std::vector<Smoothing> sm(states);
  for (std::uint64_t e = 0; e < states; ++e) sm[e] = smooth(b, e);

  // Basis per (i, j): list of (eps, mask) with bit t of mask = X on circle t.
  using Key = std::pair<int, int>;
  std::map<Key, std::vector<std::pair<std::uint64_t, std::uint64_t>>> basis;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index;
  for (std::uint64_t e = 0; e < states; ++e) {
    int c = sm[e].count, i = __builtin_popcountll(e);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
      int j = c - 2 * __builtin_popcountll(mask) + i;
      auto& list = basis[{i, j}];
      index[{e, mask}] = list.size();
      list.emplace_back(e, mask);
    }
  }
  std::map<Key, Dense> d;
  for (const auto& [key, list] : basis) {
    auto tgt = basis.find({key.first + 1, key.second});
    Dense block(tgt == basis.end() ? 0 : tgt->second.size(), std::vector<Integer>(list.size()));
    d[key] = block;
  }
  for (std::uint64_t e = 0; e < states; ++e) {
    int i = __builtin_popcountll(e);
    const auto& S = sm[e];
    for (std::size_t bit = 0; bit < m; ++bit) {
      if ((e >> bit) & 1U) continue;
      std::uint64_t f = e | (std::uint64_t{1} << bit);
      const auto& T = sm[f];
      int sign = __builtin_popcountll(e & ((std::uint64_t{1} << bit) - 1)) % 2 ? -1 : 1;
      // Source circle -> set of target circles touched.
      std::vector<std::vector<int>> touch(S.count);
      for (std::size_t x = 0; x < S.label.size(); ++x) {
        auto& v = touch[S.label[x]];
        if (std::find(v.begin(), v.end(), T.label[x]) == v.end()) v.push_back(T.label[x]);
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << S.count); ++mask) {
        std::vector<std::pair<std::uint64_t, int>> images{{0, sign}};
        std::vector<int> x_count(T.count, 0);
        for (int s = 0; s < S.count; ++s) {
          int lab = static_cast<int>((mask >> s) & 1U);
          if (touch[s].size() == 1) {
            int t = touch[s][0];
            x_count[t] += lab;
          } else {
            // Split: 1 -> 1(x)X + X(x)1, X -> X(x)X.
            int t0 = touch[s][0], t1 = touch[s][1];
            std::vector<std::pair<std::uint64_t, int>> next;
            for (auto [img, c] : images) {
              if (lab) {
                next.emplace_back(img | (1ULL << t0) | (1ULL << t1), c);
              } else {
                next.emplace_back(img | (1ULL << t1), c);
                next.emplace_back(img | (1ULL << t0), c);
              }
            }
            images = next;
          }
        }
        bool zero = false;
        for (int t = 0; t < T.count; ++t) {
          if (x_count[t] >= 2) zero = true;
          if (x_count[t] == 1)
            for (auto& im : images) im.first |= (1ULL << t);
        }
        if (zero) continue;
        int j = S.count - 2 * __builtin_popcountll(mask) + i;
        std::size_t col = index.at({e, mask});
        for (auto [img, c] : images) {
          std::size_t row = index.at({f, img});
          d[{i, j}][row][col] += c;
        }
      }
    }
  }
  linkhom::HomologyTable table;
  for (const auto& [key, list] : basis) {
    auto [i, j] = key;
    std::size_t r_out = rational_rank(d[key]);
    std::size_t r_in = 0;
    std::vector<Integer> tors;
    auto in = d.find({i - 1, j});
    if (in != d.end()) {
      auto f = euclid_smith(in->second);
      r_in = f.size();
      for (const auto& x : f)
        if (x > 1) tors.push_back(x);
      std::sort(tors.begin(), tors.end());
    }
    table.set(i, j, linkhom::Group{list.size() - r_out - r_in, tors});
  }
  return table;
}

linkhom::HomologyTable braid_khovanov(const linkhom::BraidWord& b) {
  int np = 0, nm = 0;
  for (int l : b.letters) (l > 0 ? np : nm)++;
  return braid_khovanov_unnormalized(b).shifted(-nm, np - 2 * nm);
}

linkhom::Multigraph random_multigraph(std::mt19937_64& rng, int vertices, int edges) {
  linkhom::Multigraph g{vertices, {}};
  std::uniform_int_distribution<int> pick(1, vertices);
  for (int e = 0; e < edges; ++e) g.edges.emplace_back(pick(rng), pick(rng));
  return g;
}

namespace {

int dfs_components(const linkhom::Multigraph& g, std::uint64_t mask) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertices) + 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (mask >> e & 1) {
      adj[static_cast<std::size_t>(g.edges[e].first)].push_back(g.edges[e].second);
      adj[static_cast<std::size_t>(g.edges[e].second)].push_back(g.edges[e].first);
    }
  std::vector<bool> seen(adj.size(), false);
  int comps = 0;
  for (int s = 1; s <= g.vertices; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

}  // namespace

linkhom::LaurentPoly graph_dichromatic(const linkhom::Multigraph& g) {
  linkhom::LaurentPoly p({"q", "v"});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edges.size()); ++mask) {
    int s = __builtin_popcountll(mask);
    p += linkhom::LaurentPoly::term({"q", "v"}, s, dfs_components(g, mask), s % 2 ? -1 : 1);
  }
  return p;
}

linkhom::LaurentPoly graph_tutte(const linkhom::Multigraph& g) {
  // r(A) = N - k(A); T = sum_A (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}
  const std::vector<std::string> xy{"x", "y"};
  std::uint64_t all = (std::uint64_t{1} << g.edges.size()) - 1;
  int rE = g.vertices - dfs_components(g, all);
  linkhom::LaurentPoly X = linkhom::LaurentPoly::term(xy, 1, 0) - linkhom::LaurentPoly(xy, 1);
  linkhom::LaurentPoly Y = linkhom::LaurentPoly::term(xy, 0, 1) - linkhom::LaurentPoly(xy, 1);
  linkhom::LaurentPoly t(xy);
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    int rA = g.vertices - dfs_components(g, mask);
    t += X.pow(static_cast<unsigned>(rE - rA)) * Y.pow(static_cast<unsigned>(__builtin_popcountll(mask) - rA));
  }
  return t;
}

}  // namespace oracle
