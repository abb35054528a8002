#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "rvs/checked.hpp"

namespace rvs {

/// Dense row-major matrix of 64-bit integers with overflow-checked products.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool symmetric() const noexcept;

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> data() const noexcept { return data_; }
  std::vector<std::int64_t> row(std::size_t r) const;
  std::vector<std::int64_t> column(std::size_t c) const;

  IntMatrix transpose() const;
  std::size_t hash() const noexcept;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Matrix-vector product, overflow-checked.
std::vector<std::int64_t> multiply(const IntMatrix& m, std::span<const std::int64_t> v);

}  // namespace rvs
