#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hcyl/factor.hpp"
#include "hcyl/intmatrix.hpp"
#include "hcyl/magnus.hpp"
#include "hcyl/matrix.hpp"
#include "hcyl/parallel.hpp"
#include "hcyl/quotients.hpp"
#include "hcyl/words.hpp"

namespace hcyl {

/// Endomorphism of the free group F_n given by the images of g1..gn.
class FreeEndomorphism {
 public:
  FreeEndomorphism() = default;
  FreeEndomorphism(int rank, std::vector<Word> images);

  static FreeEndomorphism identity(int rank);

  int rank() const { return rank_; }
  GeneratorTable table() const { return GeneratorTable::free(rank_); }
  const std::vector<Word>& images() const { return images_; }

  /// Column j is the exponent-sum vector of the image of g_j.
  IntMatrix abelianization() const;
  /// Unimodular abelianization.
  bool is_two_connected() const;

  Word apply(const Word& w) const;

  friend bool operator==(const FreeEndomorphism&, const FreeEndomorphism&) = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

/// phi o psi: g -> phi(psi(g)).
FreeEndomorphism compose(const FreeEndomorphism& phi, const FreeEndomorphism& psi);

/// `rank <n>` then n lines `img <word>`; `#` comments. Throws ParseError.
FreeEndomorphism parse_endomorphism(std::string_view text);
std::string to_text(const FreeEndomorphism& phi);

/// (bar(d phi(g_j) / d g_i)) over Z[H1].
PolyMatrix fox_matrix_of_endo(const FreeEndomorphism& phi, Exec exec = Exec::Serial);
/// Throws NotUnimodular unless phi is 2-connected.
MagnusMatrix magnus_of_endo(const FreeEndomorphism& phi, Exec exec = Exec::Serial);

/// g1 -> (g1 g2^-1 g1^-1 g2^-1)^m g1 g2^2m, g_i -> g_i otherwise.
FreeEndomorphism f_m(int rank, long m);

/// reduce(det r(phi), ModHA) with unimodular actions.
QuotientClass r_tilde(const FreeEndomorphism& phi, StepBudget& budget);

struct FmWitness {
  long m = 0;
  /// 1 - g2 + g2^2 - ... + g2^2m.
  LaurentPoly entry;
  QuotientClass cls;
};

/// f_m for the first `count` odd primes 2m + 1, rank 2.
std::vector<FmWitness> witness_family_fm(long count, StepBudget& budget, Exec exec = Exec::Serial);

/// Swaps, the cyclic shift, inversion of g1 and the transvection g1 -> g1 g2.
std::vector<FreeEndomorphism> nielsen_generators(int rank);
/// g_i -> w g_i w^-1.
FreeEndomorphism conjugation(int rank, const Word& w);

}  // namespace hcyl
