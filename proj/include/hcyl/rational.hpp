#pragma once

#include <string>

#include "hcyl/laurent.hpp"

namespace hcyl {

/// Element of the fraction field of Z[H]. Normalized on construction:
/// gcd(num, den) is a unit, den is in canonical +-H form and the
/// +-monomial unit travels on num. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(int rank) : num_(rank), den_(LaurentPoly::constant(rank, 1)) {}
  RationalFunction(const LaurentPoly& num);  // NOLINT: polynomials embed implicitly
  /// Throws DivisionByZero when den is zero.
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  int rank() const { return num_.rank(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  /// Normal forms are unique, so this is field equality.
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// `num` when den is 1, otherwise `(num) / (den)`.
  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

RationalFunction bar(const RationalFunction& f);
RationalFunction substitute(const RationalFunction& f, const IntMatrix& t);

}  // namespace hcyl
