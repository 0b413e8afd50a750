#include "linkhom/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>

#include "linkhom/errors.hpp"

namespace linkhom {

std::vector<Integer> SmithResult::torsion() const {
  std::vector<Integer> t;
  for (const auto& f : factors)
    if (f > 1) t.push_back(f);
  return t;
}

namespace {

struct Overflow {};

// Coefficient rings for the sparse elimination. Each supplies a unit test,
// the elimination factor a / p for a unit pivot p, and a checked a - f * b.
struct Int64Ring {
  using T = std::int64_t;
  static T from(const Integer& z) {
    auto v = as_int64(z);
    if (!v || *v == std::numeric_limits<T>::min()) throw Overflow{};
    return *v;
  }
  static Integer to_integer(T v) { return Integer(v); }
  static bool is_unit(T v) { return v == 1 || v == -1; }
  static T factor(T a, T p) { return a * p; }
  static T sub_mul(T a, T f, T b) {
    T prod, r;
    if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &r)) throw Overflow{};
    return r;
  }
};

struct BigRing {
  using T = Integer;
  static T from(const Integer& z) { return z; }
  static Integer to_integer(const T& v) { return v; }
  static bool is_unit(const T& v) { return v == 1 || v == -1; }
  static T factor(const T& a, const T& p) { return a * p; }
  static T sub_mul(const T& a, const T& f, const T& b) { return a - f * b; }
};

struct ModRing {
  using T = std::int64_t;
  static constexpr T P = 2147483647;
  static T from(const Integer& z) {
    Integer r = z % P;
    if (r < 0) r += P;
    return static_cast<T>(r);
  }
  static Integer to_integer(T v) { return Integer(v); }
  static bool is_unit(T v) { return v != 0; }
  static T inv(T a) {
    T result = 1, base = a, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return result;
  }
  static T factor(T a, T p) { return a * inv(p) % P; }
  static T sub_mul(T a, T f, T b) { return ((a - f * b % P) % P + P) % P; }
};

template <class R>
class Eliminator {
 public:
  using T = typename R::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  explicit Eliminator(const SparseIntMatrix& m)
      : rows_(m.rows()), col_rows_(m.cols()), col_alive_(m.cols(), 1) {
    for (const auto& e : m.entries()) {
      T v = R::from(e.value);
      if (v == T(0)) continue;
      rows_[e.row].emplace_back(e.col, v);
      col_rows_[e.col].push_back(e.row);
    }
    for (auto& r : rows_)
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::uint32_t c = 0; c < col_rows_.size(); ++c)
      if (!col_rows_[c].empty()) queue_.emplace(col_rows_[c].size(), c);
  }

  std::size_t eliminate_units() {
    std::size_t pivots = 0;
    while (true) {
      auto pivot = next_pivot();
      if (!pivot) break;
      pivot_on(pivot->first, pivot->second);
      ++pivots;
    }
    return pivots;
  }

  std::vector<std::vector<Integer>> residual_dense() const {
    std::vector<std::uint32_t> live_rows;
    std::set<std::uint32_t> live_cols;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) continue;
      live_rows.push_back(r);
      for (const auto& [c, v] : rows_[r]) live_cols.insert(c);
    }
    std::vector<std::uint32_t> cols(live_cols.begin(), live_cols.end());
    std::vector<std::vector<Integer>> a(live_rows.size(), std::vector<Integer>(cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows_[live_rows[i]]) {
        auto j = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
        a[i][j] = R::to_integer(v);
      }
    return a;
  }

 private:
  const T* value_at(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t key) { return e.first < key; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  }

  std::optional<std::pair<std::uint32_t, std::uint32_t>> next_pivot() {
    while (!queue_.empty()) {
      auto [count, c] = *queue_.begin();
      std::uint32_t best = 0;
      std::size_t best_len = std::numeric_limits<std::size_t>::max();
      for (std::uint32_t r : col_rows_[c]) {
        const T* v = value_at(r, c);
        if (v && R::is_unit(*v) && rows_[r].size() < best_len) {
          best = r;
          best_len = rows_[r].size();
        }
      }
      if (best_len != std::numeric_limits<std::size_t>::max()) return std::make_pair(best, c);
      // No unit in this column for now; park it until the column changes.
      queue_.erase(queue_.begin());
      stalled_.insert(c);
    }
    return std::nullopt;
  }

  void requeue(std::uint32_t c, std::size_t old_count) {
    if (!col_alive_[c]) return;
    if (stalled_.erase(c) == 0) queue_.erase({old_count, c});
    if (!col_rows_[c].empty()) queue_.emplace(col_rows_[c].size(), c);
  }

  void add_to_col(std::uint32_t c, std::uint32_t r) {
    std::size_t old = col_rows_[c].size();
    col_rows_[c].push_back(r);
    requeue(c, old);
  }

  void remove_from_col(std::uint32_t c, std::uint32_t r) {
    auto& list = col_rows_[c];
    std::size_t old = list.size();
    auto it = std::find(list.begin(), list.end(), r);
    if (it == list.end()) return;
    *it = list.back();
    list.pop_back();
    requeue(c, old);
  }

  void pivot_on(std::uint32_t pr, std::uint32_t pc) {
    queue_.erase({col_rows_[pc].size(), pc});
    stalled_.erase(pc);
    col_alive_[pc] = 0;
    const Row pivot_row = rows_[pr];
    const T p = *value_at(pr, pc);
    std::vector<std::uint32_t> targets = col_rows_[pc];
    for (std::uint32_t r : targets) {
      if (r == pr) continue;
      T f = R::factor(*value_at(r, pc), p);
      Row merged;
      merged.reserve(rows_[r].size() + pivot_row.size());
      const Row& old = rows_[r];
      std::size_t i = 0, j = 0;
      while (i < old.size() || j < pivot_row.size()) {
        if (j == pivot_row.size() || (i < old.size() && old[i].first < pivot_row[j].first)) {
          merged.push_back(old[i++]);
        } else if (i == old.size() || pivot_row[j].first < old[i].first) {
          std::uint32_t c = pivot_row[j].first;
          T v = R::sub_mul(T(0), f, pivot_row[j].second);
          merged.emplace_back(c, v);
          if (c != pc) add_to_col(c, r);
          ++j;
        } else {
          std::uint32_t c = old[i].first;
          T v = R::sub_mul(old[i].second, f, pivot_row[j].second);
          if (v != T(0))
            merged.emplace_back(c, v);
          else if (c != pc)
            remove_from_col(c, r);
          ++i;
          ++j;
        }
      }
      rows_[r] = std::move(merged);
    }
    for (const auto& [c, v] : pivot_row)
      if (c != pc) remove_from_col(c, pr);
    col_rows_[pc].clear();
    rows_[pr].clear();
  }

  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<char> col_alive_;
  std::set<std::pair<std::size_t, std::uint32_t>> queue_;
  std::set<std::uint32_t> stalled_;
};

template <class R>
SmithResult run(const SparseIntMatrix& m) {
  Eliminator<R> el(m);
  SmithResult res;
  std::size_t units = el.eliminate_units();
  auto rest = dense_smith(el.residual_dense());
  res.factors.assign(units, Integer(1));
  res.factors.insert(res.factors.end(), rest.begin(), rest.end());
  std::stable_sort(res.factors.begin(), res.factors.end());
  res.rank = res.factors.size();
  return res;
}

void chain_normalize(std::vector<Integer>& d) {
  for (auto& x : d) x = abs(x);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
}

}  // namespace

std::vector<Integer> dense_smith(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> diag;
  std::size_t m = a.size(), n = m ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in the pivot row/column to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
        if (bi != t) std::swap(a[t], a[bi]);
        if (bj != t)
          for (auto& row : a) std::swap(row[t], row[bj]);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  chain_normalize(diag);
  return diag;
}

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  try {
    return run<Int64Ring>(m);
  } catch (const Overflow&) {
    return run<BigRing>(m);
  }
}

std::size_t rank_mod_prime(const SparseIntMatrix& m) {
  Eliminator<ModRing> el(m);
  return el.eliminate_units();
}

}  // namespace linkhom
