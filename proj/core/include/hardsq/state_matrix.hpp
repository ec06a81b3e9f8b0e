#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hardsq {

// Dense square matrix indexed by bar states. Used to materialize the
// recursively defined state matrices for small bar lengths; the counting
// engines never build these.
template <class V>
class StateMatrix {
 public:
  StateMatrix() = default;
  explicit StateMatrix(std::uint64_t dim) : dim_(dim), entries_(dim * dim) {}

  // 1x1 matrix [value].
  static StateMatrix scalar(V value) {
    StateMatrix out(1);
    out.entries_[0] = std::move(value);
    return out;
  }

  std::uint64_t dim() const { return dim_; }

  // 0-based row/column.
  const V& at(std::uint64_t row, std::uint64_t col) const { return entries_[row * dim_ + col]; }
  V& at(std::uint64_t row, std::uint64_t col) { return entries_[row * dim_ + col]; }

  // 1-based bar state indices, matching the state numbering.
  const V& entry(std::uint64_t i, std::uint64_t j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_) throw std::out_of_range("state matrix index out of range");
    return at(i - 1, j - 1);
  }
  V& entry(std::uint64_t i, std::uint64_t j) {
    return const_cast<V&>(static_cast<const StateMatrix&>(*this).entry(i, j));
  }

  std::span<const V> entries() const { return entries_; }

  StateMatrix& operator+=(const StateMatrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("state matrix dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
  }
  friend StateMatrix operator+(StateMatrix lhs, const StateMatrix& rhs) { return lhs += rhs; }

  friend StateMatrix operator*(const StateMatrix& a, const StateMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("state matrix dimension mismatch");
    StateMatrix out(a.dim_);
    for (std::uint64_t i = 0; i < a.dim_; ++i) {
      for (std::uint64_t r = 0; r < a.dim_; ++r) {
        const V& left = a.at(i, r);
        if (left.is_zero()) continue;
        for (std::uint64_t j = 0; j < a.dim_; ++j) {
          if (!b.at(r, j).is_zero()) out.at(i, j) += left * b.at(r, j);
        }
      }
    }
    return out;
  }

  // Column action: (M v)_i = sum_j M_ij v_j.
  std::vector<V> apply(std::span<const V> v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length does not match matrix");
    std::vector<V> out(dim_);
    for (std::uint64_t i = 0; i < dim_; ++i) {
      for (std::uint64_t j = 0; j < dim_; ++j) {
        if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
      }
    }
    return out;
  }

  // Copies `block`, multiplied entrywise by `factor`, into block position
  // (block_row, block_col) of a matrix partitioned into block.dim()-sized
  // blocks.
  void place_block(std::uint64_t block_row, std::uint64_t block_col, const StateMatrix& block, const V& factor) {
    const std::uint64_t d = block.dim();
    for (std::uint64_t i = 0; i < d; ++i) {
      for (std::uint64_t j = 0; j < d; ++j) {
        if (!block.at(i, j).is_zero()) at(block_row * d + i, block_col * d + j) = factor * block.at(i, j);
      }
    }
  }

  friend bool operator==(const StateMatrix&, const StateMatrix&) = default;

 private:
  std::uint64_t dim_ = 0;
  std::vector<V> entries_;
};

// Kronecker product seed (x) inner, with seed a small scalar matrix.
template <class V>
StateMatrix<V> kronecker(const StateMatrix<V>& seed, const StateMatrix<V>& inner) {
  StateMatrix<V> out(seed.dim() * inner.dim());
  for (std::uint64_t r = 0; r < seed.dim(); ++r) {
    for (std::uint64_t s = 0; s < seed.dim(); ++s) {
      if (!seed.at(r, s).is_zero()) out.place_block(r, s, inner, seed.at(r, s));
    }
  }
  return out;
}

}  // namespace hardsq
