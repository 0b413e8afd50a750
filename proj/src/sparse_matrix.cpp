#include "linkhom/sparse_matrix.hpp"

#include <algorithm>
#include <unordered_map>

#include "linkhom/errors.hpp"

namespace linkhom {

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& a) {
  std::size_t r = a.size(), c = a.empty() ? 0 : a.front().size();
  SparseIntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i].size() != c) throw InvalidInput("ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (a[i][j] != 0) m.add(i, j, a[i][j]);
  }
  return m;
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  if (v == 0) return;
  entries_.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), v});
  dirty_ = true;
}

void SparseIntMatrix::normalize() const {
  if (!dirty_) return;
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries_.size();) {
    Entry e = std::move(entries_[i]);
    std::size_t k = i + 1;
    while (k < entries_.size() && entries_[k].col == e.col && entries_[k].row == e.row)
      e.value += entries_[k++].value;
    if (e.value != 0) entries_[out++] = std::move(e);
    i = k;
  }
  entries_.resize(out);
  dirty_ = false;
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  normalize();
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(c, r),
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return e.col != key.first ? e.col < key.first : e.row < key.second;
                             });
  if (it != entries_.end() && it->col == c && it->row == r) return it->value;
  return 0;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> a(rows_, std::vector<Integer>(cols_));
  for (const auto& e : entries()) a[e.row][e.col] = e.value;
  return a;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix dimensions do not agree");
  normalize();
  // Column offsets of this matrix for column access.
  std::vector<std::size_t> start(cols_ + 1, 0);
  for (const auto& e : entries_) ++start[e.col + 1];
  for (std::size_t c = 0; c < cols_; ++c) start[c + 1] += start[c];
  SparseIntMatrix out(rows_, other.cols_);
  const auto& oe = other.entries();
  std::unordered_map<std::uint32_t, Integer> acc;
  for (std::size_t i = 0; i < oe.size();) {
    std::uint32_t col = oe[i].col;
    acc.clear();
    for (; i < oe.size() && oe[i].col == col; ++i) {
      std::size_t mid = oe[i].row;
      for (std::size_t k = start[mid]; k < start[mid + 1]; ++k)
        acc[entries_[k].row] += entries_[k].value * oe[i].value;
    }
    for (auto& [r, v] : acc)
      if (v != 0) out.add(r, col, v);
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::permuted(const std::vector<std::size_t>& prow,
                                          const std::vector<std::size_t>& pcol) const {
  if (prow.size() != rows_ || pcol.size() != cols_) throw InvalidInput("permutation size mismatch");
  SparseIntMatrix out(rows_, cols_);
  for (const auto& e : entries()) out.add(prow[e.row], pcol[e.col], e.value);
  return out;
}

}  // namespace linkhom
