#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hcyl/print.hpp"

namespace hcyl {

/// Dense integer matrix. Arithmetic is int64 with overflow checks; an
/// overflow raises InternalError rather than wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  std::vector<std::int64_t> column(std::size_t j) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Rows as space-separated integers, one per line.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// m = U * D * V with U, V unimodular and D diagonal, d1 | d2 | ... (d_i >= 0).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal of D, including trailing zeros up to min(rows, cols).
  std::vector<std::int64_t> invariant_factors() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant (fraction-free elimination over GMP integers).
std::int64_t determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
/// Throws NotUnimodular when det is not +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);
IntMatrix power(const IntMatrix& m, long k);

/// J = [[0, I], [-I, 0]] of size 2g.
IntMatrix standard_symplectic(std::size_t genus);
/// T^t J T == J for the standard J; false for odd or non-square sizes.
bool is_symplectic(const IntMatrix& t);

}  // namespace hcyl
