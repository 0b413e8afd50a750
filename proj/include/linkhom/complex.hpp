#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "linkhom/laurent.hpp"
#include "linkhom/sparse_matrix.hpp"

namespace linkhom {

/// A finitely generated abelian group Z^rank + sum of Z_d.
struct Group {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  ///< invariant factors > 1, d1 | d2 | ...
  bool empty() const { return rank == 0 && torsion.empty(); }
  bool operator==(const Group&) const = default;
  std::string to_string() const;
};

/// Homology groups indexed by (i, j). Trivial groups are never stored.
class HomologyTable {
 public:
  using Key = std::pair<int, int>;

  void set(int i, int j, Group g);
  Group at(int i, int j) const;
  std::size_t rank(int i, int j) const { return at(i, j).rank; }
  const std::map<Key, Group>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Table with every index moved by (di, dj).
  HomologyTable shifted(int di, int dj) const;
  /// Entries with i <= i_max.
  HomologyTable truncated(int i_max) const;

  std::string source;
  bool rank_only = false;
  int hom_shift = 0;
  int deg_shift = 0;

  bool operator==(const HomologyTable& o) const { return entries_ == o.entries_; }

  nlohmann::json to_json() const;
  static HomologyTable from_json(const nlohmann::json& j);
  std::string to_csv() const;
  /// Grid with homological degree across and q-degree down.
  std::string to_pretty() const;

 private:
  std::map<Key, Group> entries_;
};

using JWindow = std::optional<std::pair<int, int>>;

/// One homological level of a chain complex: the graded dimensions of C^i
/// and the blocks of d^i : C^{i,j} -> C^{i+1,j}. Block d[j] has
/// dim C^{i+1,j} rows and dim C^{i,j} columns.
struct ChainLevel {
  std::map<int, std::size_t> dims;
  std::map<int, SparseIntMatrix> d;
};

/// Lazily generated bigraded complex, consumed one level at a time.
class ChainSource {
 public:
  virtual ~ChainSource() = default;
  virtual int min_degree() const = 0;
  virtual int max_degree() const = 0;
  /// Level i restricted to internal degrees in the window (all if unset).
  virtual ChainLevel level(int i, const JWindow& window) const = 0;
};

/// Fully materialized bigraded complex.
class GradedComplex : public ChainSource {
 public:
  void set_dim(int i, int j, std::size_t n);
  std::size_t dim(int i, int j) const;
  /// Block of d^{i,j}; its shape must be dim(i+1,j) x dim(i,j).
  void set_differential(int i, int j, SparseIntMatrix m);
  const SparseIntMatrix* differential(int i, int j) const;

  const std::map<std::pair<int, int>, std::size_t>& dims() const { return dims_; }

  int min_degree() const override;
  int max_degree() const override;
  ChainLevel level(int i, const JWindow& window) const override;

  /// Height shift [s] and degree shift {l}: output indices become
  /// (i + hom_shift, j + deg_shift).
  int hom_shift = 0;
  int deg_shift = 0;

 private:
  std::map<std::pair<int, int>, std::size_t> dims_;
  std::map<std::pair<int, int>, SparseIntMatrix> diffs_;
};

struct HomologyOptions {
  std::optional<int> i_max;   ///< stop after this homological degree
  JWindow j_window;           ///< restrict internal degrees
  bool rank_only = false;     ///< skip torsion (ranks computed modulo a prime)
  bool check_d_squared = true;
};

/// Homology of a lazily generated complex, one level at a time. The blocks
/// of each level are reduced concurrently. Throws ComputationDefect naming
/// the (i, j) block when d o d is nonzero.
HomologyTable streaming_homology(const ChainSource& src, const HomologyOptions& opts = {});

/// Homology of a materialized complex with its shifts applied.
HomologyTable graded_homology(const GradedComplex& c, const HomologyOptions& opts = {});

/// Throws ComputationDefect if some d^{i+1,j} d^{i,j} is nonzero.
void verify_d_squared(const ChainSource& src, const JWindow& window = std::nullopt);

/// Sum of (-1)^i dim C^{i,j} q^j (shifts applied).
LaurentPoly euler_characteristic(const GradedComplex& c);
/// Sum of (-1)^i rank H^{i,j} q^j; torsion is ignored.
LaurentPoly euler_characteristic(const HomologyTable& t);
/// Sum of rank H^{i,j} t^i q^j in the variables (t, q).
LaurentPoly poincare_polynomial(const HomologyTable& t);

/// Worker count from LINKHOM_THREADS, else the hardware concurrency.
unsigned worker_count();
/// Runs body(k) for k in [0, n) on the worker pool. Exceptions propagate.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace linkhom
