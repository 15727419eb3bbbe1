#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcyl/print.hpp"

namespace hcyl {

/// im_i, z_i, ip_i are the generators of an admissible presentation
/// (i_-(gamma_i), the extras, i_+(gamma_i)); Plain generators g_i are the
/// free basis of F_n itself.
enum class GenKind : std::uint8_t { IMinus, Z, IPlus, Plain };

struct Generator {
  GenKind kind = GenKind::Plain;
  int index = 1;

  std::string name() const;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct Letter {
  Generator gen;
  int exp = 1;  // +1 or -1

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// The generator set of a word's ambient group. Two tables are the same
/// context iff mode, rank and extras agree. Generator order is
/// im1..imn, z1..zl, ip1..ipn in presentation mode and g1..gn in free mode;
/// abelianization vectors use this order.
class GeneratorTable {
 public:
  enum class Mode : std::uint8_t { Unbound, Presentation, Free };

  GeneratorTable() = default;
  static GeneratorTable presentation(int rank, int extras);
  static GeneratorTable free(int rank);

  Mode mode() const { return mode_; }
  int rank() const { return rank_; }
  int extras() const { return extras_; }
  std::size_t size() const;

  Generator at(std::size_t i) const;
  std::optional<std::size_t> index_of(const Generator& g) const;
  bool contains(const Generator& g) const { return index_of(g).has_value(); }
  std::optional<Generator> lookup(std::string_view name) const;

  std::string describe() const;

  friend bool operator==(const GeneratorTable&, const GeneratorTable&) = default;

 private:
  GeneratorTable(Mode mode, int rank, int extras) : mode_(mode), rank_(rank), extras_(extras) {}

  Mode mode_ = Mode::Unbound;
  int rank_ = 0;
  int extras_ = 0;
};

/// Freely reduced word. The default-constructed word is the identity with an
/// unbound context, which combines with words of any context.
class Word {
 public:
  Word() = default;
  explicit Word(GeneratorTable context) : context_(context) {}
  /// Validates every letter against `context` and freely reduces.
  Word(GeneratorTable context, std::span<const Letter> letters);

  static Word generator(const GeneratorTable& context, Generator g, int exp = 1);

  const GeneratorTable& context() const { return context_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word power(long k) const;
  /// Prefix of the first n letters (already reduced).
  Word prefix(std::size_t n) const;

  /// Throws ContextMismatch when both operands are bound to different contexts.
  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& b) { return *this = *this * b; }

  /// Space-separated letters with runs folded into powers; "1" for the identity.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  GeneratorTable context_;
  std::vector<Letter> letters_;
};

/// [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

/// zeta = [g1, g_{g+1}][g2, g_{g+2}] ... [g_g, g_{2g}] in the free group of rank 2g.
Word boundary_word(int genus);

/// Exponent sums indexed in the table's generator order.
std::vector<long> abelianize(const Word& w, const GeneratorTable& table);

/// Parses the word grammar
///   word := term+ ; term := atom ('^' int)? ;
///   atom := NAME | '[' word ',' word ']' | '(' word ')' | '1'
/// with whitespace or '*' between terms. Throws ParseError.
Word parse_word(std::string_view text, const GeneratorTable& table);

}  // namespace hcyl
