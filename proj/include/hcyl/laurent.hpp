#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcyl/intmatrix.hpp"
#include "hcyl/print.hpp"

namespace hcyl {

using Exponent = std::vector<long>;

/// Element of Z[g1^+-1, ..., gn^+-1]. Terms are kept sorted lex-descending
/// by exponent vector, so begin() is the lex-leading term.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, mpz_class, std::greater<>>;

  LaurentPoly() = default;
  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly constant(int rank, const mpz_class& c);
  static LaurentPoly monomial(int rank, const Exponent& e, const mpz_class& c = 1);
  /// g_{i+1} (0-based index i).
  static LaurentPoly variable(int rank, int i);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Single term with coefficient +-1.
  bool is_unit() const;
  bool is_one() const;
  mpz_class coefficient(const Exponent& e) const;

  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const mpz_class& leading_coefficient() const { return terms_.begin()->second; }

  /// Componentwise min / max over the support (zero vector for the zero polynomial).
  Exponent min_exponents() const;
  Exponent max_exponents() const;
  long degree(int var) const;
  long min_degree(int var) const;

  /// Multiply by g^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  /// Coefficient of var^k as a polynomial with var-exponent 0.
  LaurentPoly coefficient_in(int var, long k) const;
  /// Derivative with respect to var (Laurent exponents allowed).
  LaurentPoly derivative(int var) const;

  void add_term(const Exponent& e, const mpz_class& c);

  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly& operator*=(const mpz_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  LaurentPoly pow(unsigned long k) const;

  /// Canonical text: lex-descending terms `c*gK^e` joined by " + ", "0" for zero.
  std::string to_string() const;

 private:
  void check_rank(const LaurentPoly& b) const;

  int rank_ = 0;
  Terms terms_;
};

/// Involution g^v -> g^-v.
LaurentPoly bar(const LaurentPoly& f);

/// g^v -> g^(T v). T must be unimodular (NotUnimodular otherwise).
LaurentPoly substitute(const LaurentPoly& f, const IntMatrix& t);

/// Reads the canonical text and the shorthand accepted by humans:
/// `g3 + g4 - 1`, `2*g1^-1*g2`, `-g3`. Throws ParseError.
LaurentPoly parse_laurent(std::string_view text, int rank);

/// gcd of all integer coefficients (0 for the zero polynomial), nonnegative.
mpz_class integer_content(const LaurentPoly& f);

/// The unique representative of f modulo +-H: every variable's minimum
/// exponent is 0 and the lex-leading coefficient is positive.
class UnitClassForm {
 public:
  UnitClassForm() = default;
  /// f must be nonzero.
  explicit UnitClassForm(const LaurentPoly& f);

  const LaurentPoly& poly() const { return poly_; }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const UnitClassForm&, const UnitClassForm&) = default;

 private:
  LaurentPoly poly_;
};

/// f = unit * form where unit is +-g^v.
struct UnitDecomposition {
  LaurentPoly unit;
  UnitClassForm form;
};
UnitDecomposition unit_decomposition(const LaurentPoly& f);

/// Same class modulo +-H.
bool equal_mod_units(const LaurentPoly& a, const LaurentPoly& b);

/// a / b when b divides a in Z[H]; nullopt otherwise. Throws DivisionByZero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor in canonical form (0 only when both are zero).
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// gcd of the coefficients of f viewed as a polynomial in var (canonical form).
LaurentPoly content_in(const LaurentPoly& f, int var);

}  // namespace hcyl
