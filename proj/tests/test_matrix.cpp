#include <gtest/gtest.h>

#include "hcyl/cylinder.hpp"
#include "hcyl/errors.hpp"
#include "hcyl/intmatrix.hpp"
#include "hcyl/matrix.hpp"
#include "oracles.hpp"

using namespace hcyl;

namespace {

LaurentPoly p(std::string_view s, int rank = 2) { return parse_laurent(s, rank); }

PolyMatrix random_poly_matrix(oracle::Rng& rng, std::size_t n, int rank) {
  PolyMatrix m(n, n, rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.uniform(0, 4) != 0) m(i, j) = oracle::random_poly(rng, rank, 2, 1);
  return m;
}

IntMatrix random_int_matrix(oracle::Rng& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

}  // namespace

TEST(Bareiss, SmallCases) {
  EXPECT_EQ(bareiss_det(PolyMatrix::identity(4, 2)), p("1"));
  PolyMatrix t(2, 2, 2);
  t(0, 0) = p("g1");
  t(0, 1) = p("1");
  t(1, 1) = p("g2");
  EXPECT_EQ(bareiss_det(t), p("g1*g2"));
  EXPECT_TRUE(bareiss_det(PolyMatrix(3, 3, 2)).is_zero());
  EXPECT_EQ(bareiss_det(PolyMatrix(0, 0, 2)), p("1"));
  EXPECT_THROW(bareiss_det(PolyMatrix(2, 3, 2)), std::invalid_argument);
}

TEST(Bareiss, AgreesWithCofactorOracle) {
  oracle::Rng rng(51);
  for (std::size_t n = 1; n <= 5; ++n) {
    const int trials = n <= 3 ? 40 : (n == 4 ? 15 : 5);
    for (int t = 0; t < trials; ++t) {
      const PolyMatrix m = random_poly_matrix(rng, n, 2);
      const LaurentPoly expected = oracle::cofactor_det(m);
      EXPECT_EQ(bareiss_det(m), expected);
      EXPECT_EQ(bareiss_det(m, Exec::Parallel), expected);
    }
  }
}

TEST(Bareiss, Multiplicative) {
  oracle::Rng rng(52);
  for (int t = 0; t < 20; ++t) {
    const PolyMatrix a = random_poly_matrix(rng, 3, 2), b = random_poly_matrix(rng, 3, 2);
    EXPECT_EQ(bareiss_det(a * b), bareiss_det(a) * bareiss_det(b));
  }
}

TEST(FractionFree, SolveMatchesField) {
  oracle::Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const PolyMatrix m = random_poly_matrix(rng, 3, 2);
    if (oracle::cofactor_det(m).is_zero()) continue;
    const PolyMatrix rhs = random_poly_matrix(rng, 3, 2);
    const auto [y, d] = solve_fraction_free(m, rhs);
    EXPECT_EQ(d, oracle::cofactor_det(m));
    PolyMatrix scaled = rhs;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) scaled(i, j) = rhs(i, j) * d;
    EXPECT_EQ(m * y, scaled);
    EXPECT_EQ(solve_fraction_free(m, rhs, Exec::Parallel).first, y);
  }
  EXPECT_THROW(solve_fraction_free(PolyMatrix(2, 2, 2), PolyMatrix::identity(2, 2)), SingularMatrix);
}

TEST(FieldElimination, InverseAndDeterminant) {
  EXPECT_EQ(inverse(FracMatrix::identity(3, 2)), FracMatrix::identity(3, 2));
  oracle::Rng rng(54);
  for (int t = 0; t < 20; ++t) {
    // Monomial entries keep the fractions small.
    FracMatrix m(3, 3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m(i, j) = RationalFunction(LaurentPoly::monomial(2, {rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(-2, 2)));
    PolyMatrix pm(3, 3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) pm(i, j) = m(i, j).num();
    const LaurentPoly d = oracle::cofactor_det(pm);
    EXPECT_EQ(determinant(m), RationalFunction(d));
    if (d.is_zero()) {
      EXPECT_THROW(inverse(m), SingularMatrix);
      continue;
    }
    const FracMatrix inv = inverse(m);
    EXPECT_EQ(inv * m, FracMatrix::identity(3, 2));
    EXPECT_EQ(m * inv, FracMatrix::identity(3, 2));
  }
}

TEST(FieldElimination, TextForm) {
  PolyMatrix m(2, 2, 2);
  m(0, 0) = p("g1 - 1");
  m(1, 1) = p("1");
  EXPECT_EQ(m.to_string(), "1*g1^1 + -1 | 0\n0 | 1\n");
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 3)).invariant_factors(), (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors(), (std::vector<std::int64_t>{1, 6}));
  const ValidationReport rep = validate(ml_presentation());
  EXPECT_EQ(rep.relation_matrix.rows(), 5u);
  EXPECT_EQ(rep.relation_matrix.cols(), 9u);
  EXPECT_EQ(oracle::snf_by_minors(rep.relation_matrix), (std::vector<std::int64_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(smith_normal_form(rep.relation_matrix).invariant_factors(), oracle::snf_by_minors(rep.relation_matrix));
}

TEST(Smith, AgreesWithMinorsOracle) {
  oracle::Rng rng(55);
  for (int t = 0; t < 300; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 4)), c = static_cast<std::size_t>(rng.uniform(1, 4));
    IntMatrix m = random_int_matrix(rng, r, c, 6);
    if (r > 1 && rng.uniform(0, 3) == 0)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.invariant_factors(), oracle::snf_by_minors(m));
    EXPECT_EQ(s.U * s.D * s.V, m);
    EXPECT_TRUE(is_unimodular(s.U));
    EXPECT_TRUE(is_unimodular(s.V));
    const auto d = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0) EXPECT_EQ(d[i + 1] % d[i], 0);
  }
}

TEST(IntMatrixOps, DeterminantAndInverse) {
  oracle::Rng rng(56);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = random_int_matrix(rng, 4, 4, 5);
    std::vector<std::vector<mpz_class>> mm(4, std::vector<mpz_class>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) mm[i][j] = m(i, j);
    EXPECT_EQ(determinant(m), oracle::int_cofactor_det(mm).get_si());
    const IntMatrix u = oracle::random_unimodular(rng, 4);
    EXPECT_EQ(u * inverse_unimodular(u), IntMatrix::identity(4));
  }
  EXPECT_THROW(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), NotUnimodular);
  const IntMatrix shear{{1, 1}, {0, 1}};
  EXPECT_EQ(power(shear, 0), IntMatrix::identity(2));
  EXPECT_EQ(power(shear, 3), (IntMatrix{{1, 3}, {0, 1}}));
}
