#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "hcyl/laurent.hpp"
#include "hcyl/matrix.hpp"
#include "hcyl/parallel.hpp"
#include "hcyl/words.hpp"

namespace hcyl {

/// Finitely supported integer combination of freely reduced words.
class GroupRingElement {
 public:
  using Terms = std::map<Word, mpz_class>;

  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, const mpz_class& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const Word& w) const;

  void add_term(const Word& w, const mpz_class& c);

  GroupRingElement& operator+=(const GroupRingElement& b);
  GroupRingElement& operator-=(const GroupRingElement& b);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(GroupRingElement a);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Assigns every generator of a context a monomial g^v of Z[H].
class RingMap {
 public:
  RingMap() = default;
  RingMap(GeneratorTable table, int rank);

  /// The abelianization of a free group: g_i -> e_i.
  static RingMap abelianization(const GeneratorTable& free_table);

  const GeneratorTable& table() const { return table_; }
  int rank() const { return rank_; }

  void assign(const Generator& g, Exponent image);
  /// Throws UnassignedGenerator.
  const Exponent& image(const Generator& g) const;
  Exponent image(const Word& w) const;

 private:
  GeneratorTable table_;
  int rank_ = 0;
  std::vector<Exponent> images_;
  std::vector<bool> assigned_;
};

/// Left-to-right scan: a letter x^+1 contributes +prefix, x^-1 contributes
/// -(prefix x^-1).
GroupRingElement fox_derivative(const Word& w, const Generator& x);

LaurentPoly specialize(const GroupRingElement& e, const RingMap& m, bool apply_bar);

/// specialize(fox_derivative(w, x), m, apply_bar) in one scan without
/// building the group-ring element.
LaurentPoly fox_specialized(const Word& w, const Generator& x, const RingMap& m, bool apply_bar);

/// Entry (i, j) = bar(specialize(d relators[j] / d vars[i])).
PolyMatrix fox_matrix(const std::vector<Word>& relators, const std::vector<Generator>& vars, const RingMap& m,
                      Exec exec = Exec::Serial);

}  // namespace hcyl
