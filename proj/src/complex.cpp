#include "linkhom/complex.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "linkhom/errors.hpp"
#include "linkhom/smith.hpp"

namespace linkhom {

std::string Group::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << "+";
    os << "Z_" << linkhom::to_string(t);
    first = false;
  }
  return first ? "0" : os.str();
}

void HomologyTable::set(int i, int j, Group g) {
  if (g.empty())
    entries_.erase({i, j});
  else
    entries_[{i, j}] = std::move(g);
}

Group HomologyTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Group{} : it->second;
}

HomologyTable HomologyTable::shifted(int di, int dj) const {
  HomologyTable out = *this;
  out.entries_.clear();
  for (const auto& [k, g] : entries_) out.entries_[{k.first + di, k.second + dj}] = g;
  out.hom_shift += di;
  out.deg_shift += dj;
  return out;
}

HomologyTable HomologyTable::truncated(int i_max) const {
  HomologyTable out = *this;
  out.entries_.clear();
  for (const auto& [k, g] : entries_)
    if (k.first <= i_max) out.entries_[k] = g;
  return out;
}

nlohmann::json HomologyTable::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [k, g] : entries_) {
    nlohmann::json tors = nlohmann::json::array();
    for (const auto& t : g.torsion) {
      auto small = as_int64(t);
      if (small)
        tors.push_back(*small);
      else
        tors.push_back(linkhom::to_string(t));
    }
    arr.push_back({{"i", k.first}, {"j", k.second}, {"rank", g.rank}, {"torsion", tors}});
  }
  return arr;
}

HomologyTable HomologyTable::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("homology table JSON must be an array");
  HomologyTable t;
  for (const auto& e : j) {
    Group g;
    g.rank = e.at("rank").get<std::size_t>();
    for (const auto& x : e.at("torsion"))
      g.torsion.push_back(x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<std::int64_t>()));
    t.set(e.at("i").get<int>(), e.at("j").get<int>(), std::move(g));
  }
  return t;
}

std::string HomologyTable::to_csv() const {
  std::ostringstream os;
  os << "i,j,rank,torsion\n";
  for (const auto& [k, g] : entries_) {
    os << k.first << "," << k.second << "," << g.rank << ",";
    for (std::size_t n = 0; n < g.torsion.size(); ++n) os << (n ? ";" : "") << linkhom::to_string(g.torsion[n]);
    os << "\n";
  }
  return os.str();
}

std::string HomologyTable::to_pretty() const {
  if (entries_.empty()) return "(trivial)\n";
  std::set<int> is, js;
  for (const auto& [k, g] : entries_) {
    is.insert(k.first);
    js.insert(k.second);
  }
  int ilo = *is.begin(), ihi = *is.rbegin();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"j\\i"};
  for (int i = ilo; i <= ihi; ++i) header.push_back(std::to_string(i));
  cells.push_back(header);
  for (auto it = js.rbegin(); it != js.rend(); ++it) {
    std::vector<std::string> row{std::to_string(*it)};
    for (int i = ilo; i <= ihi; ++i) {
      auto g = at(i, *it);
      row.push_back(g.empty() ? "." : g.to_string());
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& r : cells)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << std::string(width[c] - r[c].size(), ' ') << r[c];
      if (c + 1 < r.size()) os << "  ";
    }
    os << "\n";
  }
  return os.str();
}

void GradedComplex::set_dim(int i, int j, std::size_t n) {
  if (n == 0)
    dims_.erase({i, j});
  else
    dims_[{i, j}] = n;
}

std::size_t GradedComplex::dim(int i, int j) const {
  auto it = dims_.find({i, j});
  return it == dims_.end() ? 0 : it->second;
}

void GradedComplex::set_differential(int i, int j, SparseIntMatrix m) {
  if (m.rows() != dim(i + 1, j) || m.cols() != dim(i, j))
    throw InvalidInput("differential block (" + std::to_string(i) + "," + std::to_string(j) +
                       ") has the wrong shape");
  diffs_[{i, j}] = std::move(m);
}

const SparseIntMatrix* GradedComplex::differential(int i, int j) const {
  auto it = diffs_.find({i, j});
  return it == diffs_.end() ? nullptr : &it->second;
}

int GradedComplex::min_degree() const {
  return dims_.empty() ? 0 : dims_.begin()->first.first;
}

int GradedComplex::max_degree() const {
  int hi = dims_.empty() ? -1 : dims_.begin()->first.first;
  for (const auto& [k, n] : dims_) hi = std::max(hi, k.first);
  return hi;
}

ChainLevel GradedComplex::level(int i, const JWindow& window) const {
  ChainLevel lv;
  auto in_window = [&](int j) { return !window || (j >= window->first && j <= window->second); };
  for (const auto& [k, n] : dims_)
    if (k.first == i && in_window(k.second)) lv.dims[k.second] = n;
  for (const auto& [j, n] : lv.dims) {
    const auto* m = differential(i, j);
    lv.d[j] = m ? *m : SparseIntMatrix(dim(i + 1, j), n);
  }
  return lv;
}

unsigned worker_count() {
  if (const char* env = std::getenv("LINKHOM_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    while (true) {
      std::size_t k = next.fetch_add(1);
      if (k >= n) return;
      try {
        body(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

struct BlockResult {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

void check_square(const ChainLevel& prev, const ChainLevel& cur, int i) {
  for (const auto& [j, a] : prev.d) {
    auto it = cur.d.find(j);
    if (it == cur.d.end() || a.is_zero() || it->second.is_zero()) continue;
    if (it->second.cols() != a.rows())
      throw ComputationDefect("differential shapes disagree at (" + std::to_string(i - 1) + "," +
                              std::to_string(j) + ")");
    if (!it->second.multiply(a).is_zero())
      throw ComputationDefect("d o d is nonzero on block (" + std::to_string(i - 1) + "," +
                              std::to_string(j) + ")");
  }
}

}  // namespace

void verify_d_squared(const ChainSource& src, const JWindow& window) {
  ChainLevel prev;
  for (int i = src.min_degree(); i <= src.max_degree(); ++i) {
    ChainLevel cur = src.level(i, window);
    if (i > src.min_degree()) check_square(prev, cur, i);
    prev = std::move(cur);
  }
}

HomologyTable streaming_homology(const ChainSource& src, const HomologyOptions& opts) {
  HomologyTable table;
  table.rank_only = opts.rank_only;
  int lo = src.min_degree(), hi = src.max_degree();
  if (opts.i_max) hi = std::min(hi, *opts.i_max);
  std::map<int, BlockResult> incoming;  // reductions of d^{i-1,j}
  ChainLevel prev;
  for (int i = lo; i <= hi; ++i) {
    ChainLevel cur = src.level(i, opts.j_window);
    if (opts.check_d_squared && i > lo) check_square(prev, cur, i);
    std::vector<int> js;
    for (const auto& [j, m] : cur.d) js.push_back(j);
    std::vector<BlockResult> out(js.size());
    parallel_for(js.size(), [&](std::size_t k) {
      const auto& m = cur.d.at(js[k]);
      if (opts.rank_only) {
        out[k].rank = rank_mod_prime(m);
      } else {
        auto s = smith_normal_form(m);
        out[k].rank = s.rank;
        out[k].torsion = s.torsion();
      }
    });
    for (const auto& [j, n] : cur.dims) {
      std::size_t r_out = 0, r_in = 0;
      std::vector<Integer> tors;
      auto pos = std::lower_bound(js.begin(), js.end(), j);
      if (pos != js.end() && *pos == j) r_out = out[static_cast<std::size_t>(pos - js.begin())].rank;
      if (auto it = incoming.find(j); it != incoming.end()) {
        r_in = it->second.rank;
        tors = it->second.torsion;
      }
      if (r_out + r_in > n) throw ComputationDefect("rank exceeds dimension at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      table.set(i, j, Group{n - r_out - r_in, tors});
    }
    incoming.clear();
    for (std::size_t k = 0; k < js.size(); ++k) incoming[js[k]] = std::move(out[k]);
    if (opts.check_d_squared)
      prev = std::move(cur);
  }
  return table;
}

HomologyTable graded_homology(const GradedComplex& c, const HomologyOptions& opts) {
  HomologyOptions o = opts;
  if (o.i_max) *o.i_max -= c.hom_shift;
  if (o.j_window) o.j_window = std::make_pair(o.j_window->first - c.deg_shift, o.j_window->second - c.deg_shift);
  return streaming_homology(c, o).shifted(c.hom_shift, c.deg_shift);
}

LaurentPoly euler_characteristic(const GradedComplex& c) {
  LaurentPoly p(std::vector<std::string>{"q"});
  for (const auto& [k, n] : c.dims()) {
    Integer v(n);
    if ((k.first + c.hom_shift) % 2 != 0) v = -v;
    p.add_term(ex(k.second + c.deg_shift), v);
  }
  return p;
}

LaurentPoly euler_characteristic(const HomologyTable& t) {
  LaurentPoly p(std::vector<std::string>{"q"});
  for (const auto& [k, g] : t.entries()) {
    Integer v(g.rank);
    if (k.first % 2 != 0) v = -v;
    p.add_term(ex(k.second), v);
  }
  return p;
}

LaurentPoly poincare_polynomial(const HomologyTable& t) {
  LaurentPoly p(std::vector<std::string>{"t", "q"});
  for (const auto& [k, g] : t.entries())
    if (g.rank) p.add_term(ex(k.first, k.second), Integer(g.rank));
  return p;
}

}  // namespace linkhom
