#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcyl/foxcalc.hpp"
#include "hcyl/intmatrix.hpp"
#include "hcyl/laurent.hpp"
#include "hcyl/magnus.hpp"
#include "hcyl/parallel.hpp"
#include "hcyl/words.hpp"

namespace hcyl {

class FreeEndomorphism;

/// Presentation with generators im1..imn, z1..zl, ip1..ipn and n + l relators.
struct AdmissiblePresentation {
  int rank = 0;
  int extras = 0;
  std::vector<Word> relators;

  GeneratorTable table() const { return GeneratorTable::presentation(rank, extras); }
};

/// Line-oriented format: `rank <n>`, `extras <l>`, then `rel <word>` lines;
/// `#` starts a comment. Throws ParseError with line numbers. The relator
/// count is not checked here (validate reports it).
AdmissiblePresentation parse_presentation(std::string_view text);
std::string to_text(const AdmissiblePresentation& p);

enum class ValidationErrorKind { DeficiencyMismatch, HomologyNotFree, NotIsoOnH1 };
std::string to_string(ValidationErrorKind kind);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationErrorKind kind, const std::string& message);
  ValidationErrorKind kind() const { return kind_; }

 private:
  ValidationErrorKind kind_;
};

struct ValidationReport {
  std::optional<ValidationErrorKind> error;
  std::string message;
  /// Rows are abelianized relators, columns follow the generator table.
  IntMatrix relation_matrix;
  /// Invariant factors of the relation matrix.
  std::vector<std::int64_t> invariant_factors;
  /// Rank of H1 = generators - rank(relation matrix) when torsion free.
  std::size_t h1_rank = 0;

  bool valid() const { return !error.has_value(); }
};

ValidationReport validate(const AdmissiblePresentation& p);
/// Throws ValidationError when p is not admissible.
void require_valid(const AdmissiblePresentation& p);

/// Column j expresses [im_j] in the basis [ip_1], ..., [ip_n].
IntMatrix sigma(const AdmissiblePresentation& p);
/// Every generator -> its class in H1 written in the ip basis.
RingMap ring_map(const AdmissiblePresentation& p);

/// The blocks of the Fox Jacobian: rows im (A), z (B), ip (C); columns relators.
struct FoxBlocks {
  PolyMatrix a;
  PolyMatrix b;
  PolyMatrix c;
  /// (A; B), square of size n + l.
  PolyMatrix ab;
};
FoxBlocks fox_blocks(const AdmissiblePresentation& p, Exec exec = Exec::Serial);

/// r = -C (A;B)^-1 (I; 0). Throws SingularMatrix when det(A;B) = 0.
MagnusMatrix magnus_matrix(const AdmissiblePresentation& p, Exec exec = Exec::Serial);
/// det(A;B) exactly, before reduction modulo +-H.
LaurentPoly torsion_exact(const AdmissiblePresentation& p, Exec exec = Exec::Serial);
UnitClassForm torsion(const AdmissiblePresentation& p, Exec exec = Exec::Serial);

/// Stacks p1 on top of p2: ip from p1, im from p2, p1.im glued to p2.ip.
AdmissiblePresentation compose(const AdmissiblePresentation& p1, const AdmissiblePresentation& p2);
/// Relators im_j * (phi(g_j) in ip letters)^-1. Throws NotUnimodular.
AdmissiblePresentation from_automorphism(const FreeEndomorphism& phi);
AdmissiblePresentation trivial_cylinder(int rank);
/// The genus-2 string-link example with one extra generator.
AdmissiblePresentation ml_presentation();

}  // namespace hcyl
