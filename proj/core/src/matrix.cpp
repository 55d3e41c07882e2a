#include "powerpoly/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace powerpoly {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RatVector multiply(const RatMatrix& a, std::span<const Rational> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("dimension mismatch in multiply");
  RatVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
  }
  return out;
}

namespace {

// Forward elimination in place; pivot is the first nonzero entry in the
// column. Returns the number of pivots and the row-swap parity.
struct Elimination {
  std::size_t rank = 0;
  bool odd_swaps = false;
};

Elimination eliminate(RatMatrix& m, std::size_t pivot_cols) {
  Elimination e;
  for (std::size_t col = 0; col < pivot_cols && e.rank < m.rows(); ++col) {
    std::size_t p = e.rank;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != e.rank) {
      m.swap_rows(p, e.rank);
      e.odd_swaps = !e.odd_swaps;
    }
    const Rational pivot = m(e.rank, col);
    for (std::size_t r = e.rank + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col) / pivot;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(e.rank, c);
    }
    ++e.rank;
  }
  return e;
}

}  // namespace

std::optional<RatVector> solve_square_system(const RatMatrix& a, std::span<const Rational> b) {
  if (!a.is_square()) throw std::invalid_argument("solve_square_system needs a square matrix");
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has wrong length");
  const std::size_t n = a.rows();
  RatMatrix m(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n) = b[r];
  }
  if (eliminate(m, n).rank < n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = m(i, n);
    for (std::size_t c = i + 1; c < n; ++c) acc -= m(i, c) * x[c];
    x[i] = acc / m(i, i);
  }
  return x;
}

Rational determinant(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant needs a square matrix");
  RatMatrix m = a;
  const auto e = eliminate(m, m.cols());
  if (e.rank < m.rows()) return Rational(0);
  Rational det = e.odd_swaps ? Rational(-1) : Rational(1);
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  return eliminate(m, m.cols()).rank;
}

}  // namespace powerpoly
