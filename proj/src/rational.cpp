#include "hcyl/rational.hpp"

#include "hcyl/errors.hpp"

namespace hcyl {

RationalFunction::RationalFunction(const LaurentPoly& num)
    : num_(num), den_(LaurentPoly::constant(num.rank(), 1)) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.rank() != den.rank()) throw std::invalid_argument("rank mismatch in fraction");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(num_.rank(), 1);
    return;
  }
  if (!den_.is_unit()) {
    const LaurentPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const UnitDecomposition d = unit_decomposition(den_);
  // unit^-1 = sign * g^-v since the unit is +-g^v.
  const auto& [e, c] = *d.unit.terms().begin();
  Exponent neg(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
  num_ = num_.shifted(neg);
  if (c < 0) num_ = -num_;
  den_ = d.form.poly();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.rank());
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction bar(const RationalFunction& f) { return RationalFunction(bar(f.num()), bar(f.den())); }

RationalFunction substitute(const RationalFunction& f, const IntMatrix& t) {
  return RationalFunction(substitute(f.num(), t), substitute(f.den(), t));
}

}  // namespace hcyl
