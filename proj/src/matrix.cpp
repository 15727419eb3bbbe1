#include "hcyl/matrix.hpp"

#include "hcyl/errors.hpp"
#include "hcyl/magnus.hpp"

namespace hcyl {

FracMatrix to_fractions(const PolyMatrix& m) {
  return m.map([](const LaurentPoly& p) { return RationalFunction(p); });
}

FracMatrix substitute(const FracMatrix& m, const IntMatrix& t) {
  return m.map([&](const RationalFunction& f) { return substitute(f, t); });
}

FracMatrix bar(const FracMatrix& m) {
  return m.map([](const RationalFunction& f) { return bar(f); });
}

FracMatrix transpose(const FracMatrix& m) {
  FracMatrix t(m.cols(), m.rows(), m.rank());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

namespace {

LaurentPoly checked_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_one()) return a;
  auto q = divide_exact(a, b);
  if (!q) throw InternalError("fraction-free elimination: inexact division by " + b.to_string());
  return *q;
}

// Row index in [from, rows) with a nonzero entry in column k and the fewest monomials.
std::size_t pick_pivot(const PolyMatrix& a, std::size_t k, std::size_t from) {
  std::size_t best = a.rows();
  for (std::size_t i = from; i < a.rows(); ++i) {
    const LaurentPoly& x = a(i, k);
    if (x.is_zero()) continue;
    if (best == a.rows() || x.size() < a(best, k).size()) best = i;
  }
  return best;
}

void swap_rows(PolyMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace

LaurentPoly bareiss_det(const PolyMatrix& m, Exec exec) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.rank(), 1);
  PolyMatrix a = m;
  LaurentPoly prev = LaurentPoly::constant(m.rank(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t p = pick_pivot(a, k, k);
    if (p == n) return LaurentPoly(m.rank());
    if (p != k) {
      swap_rows(a, k, p);
      negate = !negate;
    }
    parallel_for(n - k - 1, exec, [&](std::size_t r) {
      const std::size_t i = k + 1 + r;
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = checked_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = LaurentPoly(m.rank());
    });
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

std::pair<PolyMatrix, LaurentPoly> solve_fraction_free(const PolyMatrix& m, const PolyMatrix& rhs, Exec exec) {
  if (!m.is_square() || rhs.rows() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t n = m.rows(), k_cols = rhs.cols(), width = n + k_cols;
  PolyMatrix a(n, width, m.rank());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    for (std::size_t j = 0; j < k_cols; ++j) a(i, n + j) = rhs(i, j);
  }
  LaurentPoly prev = LaurentPoly::constant(m.rank(), 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = pick_pivot(a, k, k);
    if (p == n) throw SingularMatrix("matrix is singular over the fraction field");
    if (p != k) {
      swap_rows(a, k, p);
      negate = !negate;
    }
    parallel_for(n, exec, [&](std::size_t i) {
      if (i == k) return;
      for (std::size_t j = k + 1; j < width; ++j) {
        a(i, j) = checked_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      if (i < k) a(i, i) = a(k, k);
      a(i, k) = LaurentPoly(m.rank());
    });
    prev = a(k, k);
  }
  PolyMatrix y(n, k_cols, m.rank());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k_cols; ++j) y(i, j) = negate ? -a(i, n + j) : a(i, n + j);
  return {y, negate ? -prev : prev};
}

namespace {

std::size_t weight(const RationalFunction& f) { return f.num().size() + f.den().size(); }

}  // namespace

RationalFunction determinant(const FracMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  FracMatrix a = m;
  RationalFunction det(LaurentPoly::constant(m.rank(), 1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      if (p == n || weight(a(i, k)) < weight(a(p, k))) p = i;
    }
    if (p == n) return RationalFunction(m.rank());
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      det = -det;
    }
    det *= a(k, k);
    const RationalFunction inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const RationalFunction f = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

FracMatrix solve(const FracMatrix& m, const FracMatrix& rhs) {
  if (!m.is_square() || rhs.rows() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t n = m.rows(), k_cols = rhs.cols();
  FracMatrix a = m, b = rhs;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      if (p == n || weight(a(i, k)) < weight(a(p, k))) p = i;
    }
    if (p == n) throw SingularMatrix("matrix is singular over the fraction field");
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      for (std::size_t c = 0; c < k_cols; ++c) std::swap(b(k, c), b(p, c));
    }
    const RationalFunction inv = a(k, k).inverse();
    for (std::size_t c = k; c < n; ++c) a(k, c) *= inv;
    for (std::size_t c = 0; c < k_cols; ++c) b(k, c) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const RationalFunction f = a(i, k);
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t c = 0; c < k_cols; ++c) b(i, c) -= f * b(k, c);
    }
  }
  return b;
}

FracMatrix inverse(const FracMatrix& m) { return solve(m, FracMatrix::identity(m.rows(), m.rank())); }

MagnusMatrix crossed_product(const MagnusMatrix& a, const MagnusMatrix& b) {
  return {a.r * substitute(b.r, a.sigma), a.sigma * b.sigma};
}

}  // namespace hcyl
