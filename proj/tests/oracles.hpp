#pragma once
// Slow reference implementations used only as test oracles.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "hcyl/autfree.hpp"
#include "hcyl/foxcalc.hpp"
#include "hcyl/intmatrix.hpp"
#include "hcyl/laurent.hpp"
#include "hcyl/matrix.hpp"
#include "hcyl/words.hpp"

namespace oracle {

using hcyl::Exponent;
using hcyl::GroupRingElement;
using hcyl::LaurentPoly;
using hcyl::Word;

// Cofactor expansion along the first row.
inline LaurentPoly cofactor_det(const hcyl::PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.rank(), 1);
  if (n == 1) return m(0, 0);
  LaurentPoly det(m.rank());
  for (std::size_t c = 0; c < n; ++c) {
    hcyl::PolyMatrix minor(n - 1, n - 1, m.rank());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    const LaurentPoly term = m(0, c) * cofactor_det(minor);
    if (c % 2) det -= term; else det += term;
  }
  return det;
}

inline mpz_class int_cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const mpz_class t = m[0][c] * int_cofactor_det(minor);
    if (c % 2) det -= t; else det += t;
  }
  return det;
}

// All k-subsets of {0..n-1}.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// d_k = g_k / g_{k-1} where g_k is the gcd of all k x k minors.
inline std::vector<std::int64_t> snf_by_minors(const hcyl::IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<std::int64_t> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    mpz_class g = 0;
    for (const auto& rows : subsets(m.rows(), k))
      for (const auto& cols : subsets(m.cols(), k)) {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        mpz_class d = int_cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(prev == 0 ? 0 : mpz_class(g / prev).get_si());
    prev = g;
  }
  return out;
}

// Fox derivative by recursion on the last letter using the three defining rules.
inline GroupRingElement fox_recursive(const Word& w, const hcyl::Generator& x) {
  if (w.empty()) return {};
  const Word head = w.prefix(w.size() - 1);
  const hcyl::Letter last = w.letters().back();
  const Word tail = Word::generator(w.context(), last.gen, 1);
  GroupRingElement d_tail;
  if (last.gen == x) {
    // d(x)/dx = 1 ; d(x^-1)/dx = -x^-1 d(x)/dx
    d_tail = last.exp > 0 ? GroupRingElement(Word(w.context())) : -GroupRingElement(tail.inverse());
  }
  // d(uv) = du + u dv
  return fox_recursive(head, x) + GroupRingElement(head) * d_tail;
}

// Rational-coefficient univariate gcd by Euclid, monic; coefficients low to high.
using QPoly = std::vector<mpq_class>;
inline void qtrim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline QPoly qmod(QPoly a, const QPoly& b) {
  qtrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    qtrim(a);
  }
  return a;
}
inline QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

// Irreducibility over Z of a primitive univariate polynomial by exhaustive
// search for a rational root-free factor: tries every monic-up-to-lc divisor
// g of degree <= deg/2 with |coeffs| bounded by `bound` via exact division.
inline bool has_small_factor(const std::vector<long>& f, long bound) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::vector<long> g(d + 1, -bound);
    while (true) {
      if (g[d] > 0) {
        std::vector<mpq_class> rem(f.begin(), f.end());
        QPoly gq(g.begin(), g.end());
        rem = qmod(rem, gq);
        if (rem.empty()) return true;
      }
      std::size_t i = 0;
      while (i <= d && g[i] == bound) g[i++] = -bound;
      if (i > d) break;
      ++g[i];
    }
  }
  return false;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  bool coin() { return uniform(0, 1) == 1; }
};

inline Word random_word(Rng& rng, const hcyl::GeneratorTable& t, std::size_t max_len) {
  std::vector<hcyl::Letter> letters;
  const std::size_t len = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_len)));
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back({t.at(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(t.size()) - 1))),
                       rng.coin() ? 1 : -1});
  }
  return Word(t, letters);
}

inline LaurentPoly random_poly(Rng& rng, int rank, std::size_t max_terms, long max_exp, long max_coeff = 3) {
  LaurentPoly f(rank);
  const std::size_t terms = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < terms; ++k) {
    Exponent e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = rng.uniform(-max_exp, max_exp);
    long c = rng.uniform(-max_coeff, max_coeff);
    if (c == 0) c = 1;
    f.add_term(e, c);
  }
  return f;
}

inline LaurentPoly random_nonzero_poly(Rng& rng, int rank, std::size_t max_terms, long max_exp) {
  LaurentPoly f(rank);
  while (f.is_zero()) f = random_poly(rng, rank, max_terms, max_exp);
  return f;
}

// Product of random elementary matrices: unimodular by construction.
inline hcyl::IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 6) {
  hcyl::IntMatrix m = hcyl::IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    hcyl::IntMatrix e = hcyl::IntMatrix::identity(n);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (n > 1 && i == j) j = (i + 1) % n;
    if (i == j) {
      e(i, i) = -1;
    } else {
      e(i, j) = rng.uniform(-2, 2);
      if (rng.uniform(0, 3) == 0) std::swap(e(i, i), e(i, j));
      if (rng.uniform(0, 3) == 0) {
        e = hcyl::IntMatrix::identity(n);
        e(i, i) = 0;
        e(j, j) = 0;
        e(i, j) = 1;
        e(j, i) = 1;
      }
    }
    if (hcyl::is_unimodular(e)) m = m * e;
  }
  return m;
}

// Random automorphism of F_n: product of elementary Nielsen moves.
inline hcyl::FreeEndomorphism random_automorphism(Rng& rng, int rank, int moves) {
  const auto gens = hcyl::nielsen_generators(rank);
  hcyl::FreeEndomorphism phi = hcyl::FreeEndomorphism::identity(rank);
  for (int k = 0; k < moves; ++k) {
    phi = hcyl::compose(phi, gens[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(gens.size()) - 1))]);
  }
  return phi;
}

}  // namespace oracle
