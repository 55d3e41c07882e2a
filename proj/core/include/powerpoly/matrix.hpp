#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "powerpoly/rational.hpp"

namespace powerpoly {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatVector multiply(const RatMatrix& a, std::span<const Rational> x);

/// Exact solution of A x = b, or nullopt when A is singular.
std::optional<RatVector> solve_square_system(const RatMatrix& a, std::span<const Rational> b);

Rational determinant(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

}  // namespace powerpoly
