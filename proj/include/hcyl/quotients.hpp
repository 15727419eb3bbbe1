#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hcyl/cylinder.hpp"
#include "hcyl/factor.hpp"
#include "hcyl/intmatrix.hpp"
#include "hcyl/laurent.hpp"
#include "hcyl/parallel.hpp"
#include "hcyl/rational.hpp"

namespace hcyl {

/// K^x / (+-H), / (+-H A), / (+-H A N).
enum class QuotientLevel { ModH, ModHA, ModHAN };
std::string to_string(QuotientLevel level);

/// Invariants of f under unimodular substitution and +-H.
struct OrbitCertificate {
  std::size_t monomial_count = 0;
  /// Sorted coefficients, sign chosen to make the list lexicographically smallest.
  std::vector<mpz_class> coeff_multiset;
  /// Nonzero invariant factors of the support's exponent-difference matrix.
  std::vector<std::int64_t> diff_lattice_snf;
  UnitClassForm representative;

  /// `{count; c1,c2,...; d1,d2,...}`, the part compared between orbits.
  std::string invariant_text() const;
  bool same_invariants(const OrbitCertificate& other) const;
};

OrbitCertificate certify(const LaurentPoly& f);

/// Exponents of irreducible factors grouped by key. At ModH the key is the
/// exact canonical form; at ModHA and ModHAN it is the invariant triple,
/// and exponents are taken mod 2 at ModHAN.
class QuotientClass {
 public:
  struct Entry {
    std::string representative;
    long exponent = 0;
  };

  QuotientClass() = default;
  explicit QuotientClass(QuotientLevel level) : level_(level) {}

  QuotientLevel level() const { return level_; }
  const std::map<std::string, Entry>& entries() const { return entries_; }
  bool is_identity() const { return entries_.empty(); }
  long exponent(const std::string& key) const;

  void add(const std::string& key, const std::string& representative, long exponent);

  friend QuotientClass operator+(const QuotientClass& a, const QuotientClass& b);
  friend QuotientClass operator-(const QuotientClass& a);
  QuotientClass scaled(long k) const;
  friend bool operator==(const QuotientClass& a, const QuotientClass& b);

  /// `[(<certificate text>, <exponent>), ...]` sorted by key.
  std::string to_string() const;

 private:
  QuotientLevel level_ = QuotientLevel::ModH;
  std::map<std::string, Entry> entries_;
};

/// Key of an irreducible factor at the given level.
std::string quotient_key(const UnitClassForm& f, QuotientLevel level);
std::string certificate_text(const UnitClassForm& f, QuotientLevel level);

/// Throws FactorizationIncomplete when num or den cannot be factored.
QuotientClass reduce(const RationalFunction& f, QuotientLevel level, StepBudget& budget);
QuotientClass reduce(const RationalFunction& f, QuotientLevel level);

/// reduce(det r(P), ModH).
QuotientClass r_hat(const AdmissiblePresentation& p, StepBudget& budget);
/// reduce(tau(P), ModHAN).
QuotientClass tau_tilde(const AdmissiblePresentation& p, StepBudget& budget);

/// g1 -> g1 g4, g2 -> g2, g3 -> g2 g3, g4 -> g4 (columns are images).
IntMatrix cfk_twist();

struct CfkWitness {
  long m = 0;
  RationalFunction value;
  QuotientClass cls;
  /// Numerator certified irreducible by the linear criterion in g3.
  bool numerator_irreducible = false;
};

/// m = 0..count-1: reduce(substitute(det r(M_L), T^m), ModH).
std::vector<CfkWitness> witness_family_cfk(long count, StepBudget& budget, Exec exec = Exec::Serial);

enum class Distinctness { Distinct, Equal, Indistinguishable };
std::string to_string(Distinctness d);

/// ModH compares ratio signatures and is complete. ModHA and ModHAN compare
/// orbit invariants and never answer Equal.
Distinctness assert_distinct(const UnitClassForm& a, const UnitClassForm& b, QuotientLevel level);

/// Rank over Q of the exponent matrix on the union of keys.
std::size_t independence_rank(const std::vector<QuotientClass>& classes);

}  // namespace hcyl
