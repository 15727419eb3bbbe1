#include "hcyl/words.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "hcyl/errors.hpp"

namespace hcyl {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? "column " + std::to_string(column) + ": " + message
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

std::string Generator::name() const {
  switch (kind) {
    case GenKind::IMinus: return "im" + std::to_string(index);
    case GenKind::Z: return "z" + std::to_string(index);
    case GenKind::IPlus: return "ip" + std::to_string(index);
    case GenKind::Plain: return "g" + std::to_string(index);
  }
  return "?";
}

GeneratorTable GeneratorTable::presentation(int rank, int extras) {
  if (rank < 1 || extras < 0) throw std::invalid_argument("presentation needs rank >= 1 and extras >= 0");
  return GeneratorTable(Mode::Presentation, rank, extras);
}

GeneratorTable GeneratorTable::free(int rank) {
  if (rank < 1) throw std::invalid_argument("free group needs rank >= 1");
  return GeneratorTable(Mode::Free, rank, 0);
}

std::size_t GeneratorTable::size() const {
  switch (mode_) {
    case Mode::Unbound: return 0;
    case Mode::Presentation: return static_cast<std::size_t>(2 * rank_ + extras_);
    case Mode::Free: return static_cast<std::size_t>(rank_);
  }
  return 0;
}

Generator GeneratorTable::at(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("generator index out of range");
  const int k = static_cast<int>(i);
  if (mode_ == Mode::Free) return {GenKind::Plain, k + 1};
  if (k < rank_) return {GenKind::IMinus, k + 1};
  if (k < rank_ + extras_) return {GenKind::Z, k - rank_ + 1};
  return {GenKind::IPlus, k - rank_ - extras_ + 1};
}

std::optional<std::size_t> GeneratorTable::index_of(const Generator& g) const {
  if (g.index < 1) return std::nullopt;
  const auto idx = static_cast<std::size_t>(g.index - 1);
  switch (mode_) {
    case Mode::Unbound: return std::nullopt;
    case Mode::Free:
      if (g.kind == GenKind::Plain && g.index <= rank_) return idx;
      return std::nullopt;
    case Mode::Presentation:
      switch (g.kind) {
        case GenKind::IMinus:
          if (g.index <= rank_) return idx;
          return std::nullopt;
        case GenKind::Z:
          if (g.index <= extras_) return static_cast<std::size_t>(rank_) + idx;
          return std::nullopt;
        case GenKind::IPlus:
          if (g.index <= rank_) return static_cast<std::size_t>(rank_ + extras_) + idx;
          return std::nullopt;
        case GenKind::Plain: return std::nullopt;
      }
  }
  return std::nullopt;
}

std::optional<Generator> GeneratorTable::lookup(std::string_view name) const {
  std::size_t split = 0;
  while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split]))) ++split;
  const std::string_view prefix = name.substr(0, split);
  const std::string_view digits = name.substr(split);
  if (digits.empty()) return std::nullopt;
  int index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;

  Generator g;
  g.index = index;
  if (prefix == "ip") g.kind = GenKind::IPlus;
  else if (prefix == "im") g.kind = GenKind::IMinus;
  else if (prefix == "z") g.kind = GenKind::Z;
  else if (prefix == "g") g.kind = GenKind::Plain;
  else return std::nullopt;
  if (!contains(g)) return std::nullopt;
  return g;
}

std::string GeneratorTable::describe() const {
  switch (mode_) {
    case Mode::Unbound: return "unbound";
    case Mode::Free: return "free group of rank " + std::to_string(rank_);
    case Mode::Presentation:
      return "presentation of rank " + std::to_string(rank_) + " with " + std::to_string(extras_) +
             " extras";
  }
  return "?";
}

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

GeneratorTable merge_contexts(const GeneratorTable& a, const GeneratorTable& b) {
  if (a.mode() == GeneratorTable::Mode::Unbound) return b;
  if (b.mode() == GeneratorTable::Mode::Unbound) return a;
  if (a != b) throw ContextMismatch("cannot combine words of " + a.describe() + " and " + b.describe());
  return a;
}

}  // namespace

Word::Word(GeneratorTable context, std::span<const Letter> letters) : context_(context) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
    if (!context_.contains(l.gen)) {
      throw std::invalid_argument("generator " + l.gen.name() + " is not in the " + context_.describe());
    }
    push_reduced(letters_, l);
  }
}

Word Word::generator(const GeneratorTable& context, Generator g, int exp) {
  const Letter l{g, exp};
  return Word(context, std::span<const Letter>(&l, 1));
}

Word Word::inverse() const {
  Word out(context_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->gen, -it->exp});
  return out;
}

Word Word::power(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out(context_);
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

Word Word::prefix(std::size_t n) const {
  Word out(context_);
  out.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(std::min(n, letters_.size())));
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out(merge_contexts(a.context_, b.context_));
  out.letters_.reserve(a.letters_.size() + b.letters_.size());
  out.letters_ = a.letters_;
  for (const Letter& l : b.letters_) push_reduced(out.letters_, l);
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const long power = static_cast<long>(j - i) * letters_[i].exp;
    if (!out.empty()) out += ' ';
    out += letters_[i].gen.name();
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word boundary_word(int genus) {
  if (genus < 1) throw std::invalid_argument("boundary word needs genus >= 1");
  const auto table = GeneratorTable::free(2 * genus);
  Word zeta(table);
  for (int i = 1; i <= genus; ++i) {
    zeta *= commutator(Word::generator(table, {GenKind::Plain, i}),
                       Word::generator(table, {GenKind::Plain, genus + i}));
  }
  return zeta;
}

std::vector<long> abelianize(const Word& w, const GeneratorTable& table) {
  std::vector<long> v(table.size(), 0);
  for (const Letter& l : w.letters()) {
    const auto idx = table.index_of(l.gen);
    if (!idx) throw std::invalid_argument("generator " + l.gen.name() + " is not in the " + table.describe());
    v[*idx] += l.exp;
  }
  return v;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const GeneratorTable& table) : text_(text), table_(table) {}

  Word parse() {
    Word w = word();
    skip_separators();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 0, pos_ + 1); }

  void skip_separators() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) {
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_word_end() {
    skip_separators();
    return pos_ >= text_.size() || text_[pos_] == ',' || text_[pos_] == ']' || text_[pos_] == ')';
  }

  Word word() {
    if (at_word_end()) fail("expected a generator, '[', '(' or '1'");
    Word w(table_);
    while (!at_word_end()) w *= term();
    return w;
  }

  Word term() {
    Word a = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      a = a.power(exponent());
    }
    return a;
  }

  long exponent() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("malformed exponent");
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed exponent");
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_separators();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word atom() {
    skip_separators();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return commutator(a, b);
    }
    if (c == '(') {
      ++pos_;
      Word a = word();
      expect(')');
      return a;
    }
    if (c == '1' && (pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return Word(table_);
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto g = table_.lookup(name);
    if (!g) {
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "' in " + table_.describe());
    }
    return Word::generator(table_, *g);
  }

  std::string_view text_;
  GeneratorTable table_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const GeneratorTable& table) { return WordParser(text, table).parse(); }

}  // namespace hcyl
