#include "hcyl/intmatrix.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>

#include "hcyl/errors.hpp"

namespace hcyl {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("integer overflow in matrix arithmetic");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("integer overflow in matrix arithmetic");
  return out;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t j) const {
  std::vector<std::int64_t> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(x, b(k, j)));
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = checked_add(a.data_[k], b.data_[k]);
  return out;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = checked_mul(a.data_[k], -1);
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += std::to_string((*this)(i, j));
    }
    out += '\n';
  }
  return out;
}

std::vector<std::int64_t> SmithForm::invariant_factors() const {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (auto d : invariant_factors()) r += d != 0;
  return r;
}

namespace {

// Elementary operations on the working matrix D, mirrored on U (columns)
// and V (rows) so that the original matrix stays equal to U * D * V.
struct SmithState {
  IntMatrix U, D, V;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(i, c), D(j, c));
    for (std::size_t r = 0; r < U.rows(); ++r) std::swap(U(r, i), U(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
    for (std::size_t c = 0; c < V.cols(); ++c) std::swap(V(i, c), V(j, c));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) = -D(i, c);
    for (std::size_t r = 0; r < U.rows(); ++r) U(r, i) = -U(r, i);
  }
  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) = checked_add(D(i, c), checked_mul(k, D(j, c)));
    for (std::size_t r = 0; r < U.rows(); ++r) U(r, j) = checked_add(U(r, j), checked_mul(-k, U(r, i)));
  }
  // col i += k * col j
  void add_col(std::size_t i, std::size_t j, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < D.rows(); ++r) D(r, i) = checked_add(D(r, i), checked_mul(k, D(r, j)));
    for (std::size_t c = 0; c < V.cols(); ++c) V(j, c) = checked_add(V(j, c), checked_mul(-k, V(i, c)));
  }
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithState s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const std::int64_t v = std::llabs(s.D(i, j));
          if (v != 0 && (best == 0 || v < best)) best = v, pi = i, pj = j;
        }
      if (best == 0) return {s.U, s.D, s.V};
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);
      if (s.D(t, t) < 0) s.negate_row(t);
      const std::int64_t p = s.D(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        s.add_row(i, t, -floor_div(s.D(i, t), p));
        clean = clean && s.D(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        s.add_col(j, t, -floor_div(s.D(t, j), p));
        clean = clean && s.D(t, j) == 0;
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.D(i, j) % p != 0) {
            s.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
  }
  return {s.U, s.D, s.V};
}

namespace {

std::vector<std::vector<mpz_class>> to_mpz(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = static_cast<long>(m(i, j));
  return a;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InternalError("integer overflow in matrix arithmetic");
  return z.get_si();
}

mpz_class det_mpz(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  auto a = to_mpz(m);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

std::int64_t determinant(const IntMatrix& m) { return to_int64(det_mpz(m)); }

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  const mpz_class d = det_mpz(m);
  return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!is_unimodular(m)) throw NotUnimodular("matrix is not unimodular");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (a[p][k] == 0) ++p;
    std::swap(a[k], a[p]);
    const mpq_class piv = a[k][k];
    for (auto& x : a[k]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const mpq_class f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = a[i][n + j];
      if (q.get_den() != 1) throw InternalError("unimodular inverse is not integral");
      inv(i, j) = to_int64(q.get_num());
    }
  return inv;
}

IntMatrix power(const IntMatrix& m, long k) {
  if (!m.is_square()) throw std::invalid_argument("power of a non-square matrix");
  IntMatrix base = k < 0 ? inverse_unimodular(m) : m;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  IntMatrix out = IntMatrix::identity(m.rows());
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

IntMatrix standard_symplectic(std::size_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(i, genus + i) = 1;
    j(genus + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& t) {
  if (!t.is_square() || t.rows() % 2 != 0) return false;
  const IntMatrix j = standard_symplectic(t.rows() / 2);
  return t.transpose() * j * t == j;
}

}  // namespace hcyl
