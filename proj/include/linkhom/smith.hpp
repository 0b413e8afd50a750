#pragma once

#include <vector>

#include "linkhom/sparse_matrix.hpp"

namespace linkhom {

struct SmithResult {
  /// Nonzero diagonal of the Smith form, d1 | d2 | ... (all ones included).
  std::vector<Integer> factors;
  std::size_t rank = 0;

  /// Invariant factors greater than one.
  std::vector<Integer> torsion() const;
};

/// Smith normal form over the integers. Unit pivots are eliminated sparsely
/// first (columns with fewest entries first, rows with fewest entries among
/// unit candidates); the remaining block is diagonalized densely.
SmithResult smith_normal_form(const SparseIntMatrix& m);

/// Rank over the rationals, computed modulo the prime 2^31 - 1. Agrees with
/// the exact rank unless that prime divides a torsion coefficient.
std::size_t rank_mod_prime(const SparseIntMatrix& m);

/// Dense Smith normal form diagonal (all nonzero invariant factors).
std::vector<Integer> dense_smith(std::vector<std::vector<Integer>> a);

}  // namespace linkhom
