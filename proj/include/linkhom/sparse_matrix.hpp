#pragma once

#include <cstdint>
#include <vector>

#include "linkhom/integer.hpp"

namespace linkhom {

/// Sparse integer matrix. Entries are collected as triplets and kept sorted
/// by (column, row) with duplicates summed and zeros removed, so columns can
/// be walked directly.
class SparseIntMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    std::uint32_t col;
    Integer value;
  };

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Dense construction helper (row-major nested lists).
  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const {
    normalize();
    return entries_.size();
  }

  /// Adds v to entry (r, c). Out-of-range indices throw InvalidInput.
  void add(std::size_t r, std::size_t c, const Integer& v);

  /// Entries sorted by (column, row), no zeros.
  const std::vector<Entry>& entries() const {
    normalize();
    return entries_;
  }

  Integer at(std::size_t r, std::size_t c) const;
  std::vector<std::vector<Integer>> to_dense() const;

  /// Product this * other; dimensions must agree.
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  bool is_zero() const { return nnz() == 0; }

  /// P * this * Q^-1 for permutations given as index maps (row r -> prow[r]).
  SparseIntMatrix permuted(const std::vector<std::size_t>& prow,
                           const std::vector<std::size_t>& pcol) const;

 private:
  void normalize() const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  mutable std::vector<Entry> entries_;
  mutable bool dirty_ = false;
};

}  // namespace linkhom
