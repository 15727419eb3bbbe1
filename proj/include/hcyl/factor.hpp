#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hcyl/laurent.hpp"

namespace hcyl {

/// Work counter shared by the factorization routines; charge() throws
/// FactorizationIncomplete once the limit is passed.
class StepBudget {
 public:
  static constexpr std::uint64_t kDefault = 20'000'000;

  explicit StepBudget(std::uint64_t limit = kDefault) : limit_(limit) {}

  void charge(std::uint64_t steps = 1);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// How an irreducible factor was certified.
enum class Certificate { IntegerPrime, Univariate, LinearCriterion, Kronecker };

struct Factor {
  UnitClassForm form;
  long multiplicity = 1;
  Certificate certificate = Certificate::Univariate;
};

/// f = unit * prod form_i^mult_i, unit = +-g^v. Factors are sorted by
/// canonical text, integer primes included as constant factors.
struct Factorization {
  LaurentPoly unit;
  std::vector<Factor> factors;

  LaurentPoly expand() const;
};

/// Throws DivisionByZero for f = 0 and FactorizationIncomplete when the
/// budget runs out.
Factorization factor(const LaurentPoly& f, StepBudget& budget);
Factorization factor(const LaurentPoly& f);

/// f = B*x + C in var after the canonical shift. True when f is primitive
/// as a polynomial (no integer content, no monomial factor) and gcd(B, C)
/// is a unit; true implies f is irreducible. Throws std::invalid_argument
/// when the shifted f has degree > 1 in var.
bool is_irreducible_linear_criterion(const LaurentPoly& f, int var);

}  // namespace hcyl
