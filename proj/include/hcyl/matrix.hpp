#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcyl/intmatrix.hpp"
#include "hcyl/laurent.hpp"
#include "hcyl/parallel.hpp"
#include "hcyl/rational.hpp"

namespace hcyl {

/// Dense matrix over Z[H] (T = LaurentPoly) or its fraction field
/// (T = RationalFunction). All entries share the ring rank.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, int rank)
      : rows_(rows), cols_(cols), rank_(rank), data_(rows * cols, T(rank)) {}

  static Matrix identity(std::size_t n, int rank) {
    Matrix m(n, n, rank);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(LaurentPoly::constant(rank, 1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int rank() const { return rank_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_, a.rank_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  /// One row per line, entries joined by " | ".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += " | ";
        out += (*this)(i, j).to_string();
      }
      out += '\n';
    }
    return out;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
    Matrix<U> out(rows_, cols_, rank_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int rank_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using FracMatrix = Matrix<RationalFunction>;

FracMatrix to_fractions(const PolyMatrix& m);
FracMatrix substitute(const FracMatrix& m, const IntMatrix& t);
FracMatrix bar(const FracMatrix& m);
FracMatrix transpose(const FracMatrix& m);

/// Fraction-free (Bareiss) determinant. Every division is checked to be
/// exact; a failed check raises InternalError.
LaurentPoly bareiss_det(const PolyMatrix& m, Exec exec = Exec::Serial);

/// Fraction-free Gauss-Jordan: returns (Y, d) with m * Y = d * rhs and
/// d = det(m). Throws SingularMatrix when det(m) = 0.
std::pair<PolyMatrix, LaurentPoly> solve_fraction_free(const PolyMatrix& m, const PolyMatrix& rhs,
                                                       Exec exec = Exec::Serial);

/// Gaussian elimination over the fraction field.
RationalFunction determinant(const FracMatrix& m);
FracMatrix solve(const FracMatrix& m, const FracMatrix& rhs);
FracMatrix inverse(const FracMatrix& m);

}  // namespace hcyl
