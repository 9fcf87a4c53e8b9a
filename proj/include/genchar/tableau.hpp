#pragma once

// Young tableaux (injective fillings of a Young diagram with 1..n) and their
// row and column stabilizers.

#include <stdexcept>
#include <vector>

#include "genchar/partition.hpp"
#include "genchar/permutation.hpp"

namespace genchar {

class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    const int n = shape_.n();
    if (static_cast<int>(rows_.size()) != shape_.rows())
      throw std::invalid_argument("tableau row count does not match shape");
    pos_.assign(n + 1, Box{});
    std::vector<char> seen(n + 1, 0);
    for (int i = 1; i <= shape_.rows(); ++i) {
      if (static_cast<int>(rows_[i - 1].size()) != shape_.part(i))
        throw std::invalid_argument("tableau row length does not match shape");
      for (int j = 1; j <= shape_.part(i); ++j) {
        const int v = rows_[i - 1][j - 1];
        if (v < 1 || v > n || seen[v])
          throw std::invalid_argument("tableau filling is not a bijection onto 1..n");
        seen[v] = 1;
        pos_[v] = Box{i, j};
      }
    }
  }

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int entry(int row, int col) const { return rows_[row - 1][col - 1]; }
  int entry(const Box& b) const { return entry(b.row, b.col); }
  Box box_of(int value) const { return pos_[value]; }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Box> pos_;
};

// 1..n filled row by row.
inline Tableau row_major_tableau(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.rows());
  int next = 1;
  for (int i = 1; i <= shape.rows(); ++i)
    for (int j = 1; j <= shape.part(i); ++j) rows[i - 1].push_back(next++);
  return Tableau(shape, std::move(rows));
}

// 1 sits in the box lam minus mu; 2..n fill the remaining boxes in row-major
// reading order.
inline Tableau canonical_tableau(const Partition& lam, const Partition& mu) {
  const Box rb = removed_box(lam, mu);
  std::vector<std::vector<int>> rows(lam.rows());
  int next = 2;
  for (int i = 1; i <= lam.rows(); ++i)
    for (int j = 1; j <= lam.part(i); ++j)
      rows[i - 1].push_back(Box{i, j} == rb ? 1 : next++);
  return Tableau(lam, std::move(rows));
}

// pi t: every entry m becomes pi(m).
inline Tableau relabeled(const Tableau& t, const Permutation& pi) {
  if (pi.degree() != t.n()) throw std::invalid_argument("degree mismatch");
  std::vector<std::vector<int>> rows(t.shape().rows());
  for (int i = 1; i <= t.shape().rows(); ++i)
    for (int j = 1; j <= t.shape().part(i); ++j)
      rows[i - 1].push_back(pi(t.entry(i, j)));
  return Tableau(t.shape(), std::move(rows));
}

namespace detail {

// All permutations of {1..n} preserving each block setwise, the blocks being
// disjoint and covering {1..n}.
inline std::vector<Permutation> block_stabilizer(int n,
                                                 const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<std::vector<int>>> arrangements;
  for (auto block : blocks) {
    std::sort(block.begin(), block.end());
    std::vector<std::vector<int>> arr;
    std::vector<int> perm = block;
    do {
      arr.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    arrangements.push_back(std::move(arr));
  }
  std::vector<Permutation> out;
  std::vector<std::size_t> choice(blocks.size(), 0);
  for (;;) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::vector<int> sorted = blocks[b];
      std::sort(sorted.begin(), sorted.end());
      const auto& target = arrangements[b][choice[b]];
      for (std::size_t k = 0; k < sorted.size(); ++k) img[sorted[k] - 1] = target[k];
    }
    out.push_back(Permutation(std::move(img)));
    std::size_t b = 0;
    while (b < blocks.size() && ++choice[b] == arrangements[b].size()) choice[b++] = 0;
    if (b == blocks.size()) break;
  }
  return out;
}

}  // namespace detail

// All permutations preserving every row of t setwise; size prod lam_i!.
inline std::vector<Permutation> row_stabilizer(const Tableau& t) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= t.shape().rows(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= t.shape().part(i); ++j) row.push_back(t.entry(i, j));
    blocks.push_back(std::move(row));
  }
  return detail::block_stabilizer(t.n(), blocks);
}

// All permutations preserving every column of t setwise; size prod lam'_j!.
inline std::vector<Permutation> column_stabilizer(const Tableau& t) {
  const Partition conj = conjugate(t.shape());
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= t.shape().part(1); ++j) {
    std::vector<int> col;
    for (int i = 1; i <= conj.part(j); ++i) col.push_back(t.entry(i, j));
    blocks.push_back(std::move(col));
  }
  return detail::block_stabilizer(t.n(), blocks);
}

}  // namespace genchar
