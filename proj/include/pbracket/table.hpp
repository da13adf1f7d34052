#pragma once

#include <cstddef>
#include <vector>

namespace pbracket {

/// Dense row-major n x n table.
template <typename T>
class SquareTable {
 public:
  SquareTable() = default;
  explicit SquareTable(int n, T fill = T{}) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const noexcept { return n_; }

  T& operator()(int row, int col) { return data_[static_cast<std::size_t>(row) * n_ + col]; }
  const T& operator()(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * n_ + col];
  }

  const std::vector<T>& data() const noexcept { return data_; }

  bool operator==(const SquareTable&) const = default;

 private:
  int n_ = 0;
  std::vector<T> data_;
};

}  // namespace pbracket
