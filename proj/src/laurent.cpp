#include "hcyl/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "hcyl/errors.hpp"

namespace hcyl {

namespace {

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &c[i])) throw InternalError("exponent overflow");
  }
  return c;
}

Exponent sub_exp(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_sub_overflow(a[i], b[i], &c[i])) throw InternalError("exponent overflow");
  }
  return c;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int rank, const mpz_class& c) {
  LaurentPoly p(rank);
  p.add_term(Exponent(static_cast<std::size_t>(rank), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int rank, const Exponent& e, const mpz_class& c) {
  if (e.size() != static_cast<std::size_t>(rank)) throw std::invalid_argument("exponent length differs from rank");
  LaurentPoly p(rank);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int rank, int i) {
  if (i < 0 || i >= rank) throw std::out_of_range("variable index out of range");
  Exponent e(static_cast<std::size_t>(rank), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(rank, e);
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

bool LaurentPoly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

mpz_class LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(static_cast<std::size_t>(rank_), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent m(static_cast<std::size_t>(rank_), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

long LaurentPoly::degree(int var) const {
  long d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    d = first ? e[static_cast<std::size_t>(var)] : std::max(d, e[static_cast<std::size_t>(var)]);
    first = false;
  }
  return d;
}

long LaurentPoly::min_degree(int var) const {
  long d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    d = first ? e[static_cast<std::size_t>(var)] : std::min(d, e[static_cast<std::size_t>(var)]);
    first = false;
  }
  return d;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(add_exp(e, shift), c);
  return out;
}

LaurentPoly LaurentPoly::coefficient_in(int var, long k) const {
  LaurentPoly out(rank_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exponent f = e;
    f[v] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::derivative(int var) const {
  LaurentPoly out(rank_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent f = e;
    f[v] -= 1;
    out.add_term(f, c * e[v]);
  }
  return out;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (e.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("exponent length differs from rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_rank(const LaurentPoly& b) const {
  if (rank_ != b.rank_) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(b.rank_));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  check_rank(b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  check_rank(b);
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b);
  LaurentPoly out(a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exp(ea, eb), ca * cb);
  return out;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
  LaurentPoly out = constant(rank_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) out *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) out += "*g" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
    }
  }
  return out;
}

LaurentPoly bar(const LaurentPoly& f) {
  LaurentPoly out(f.rank());
  for (const auto& [e, c] : f.terms()) {
    Exponent n(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) n[i] = -e[i];
    out.add_term(n, c);
  }
  return out;
}

LaurentPoly substitute(const LaurentPoly& f, const IntMatrix& t) {
  const auto n = static_cast<std::size_t>(f.rank());
  if (t.rows() != n || t.cols() != n) throw std::invalid_argument("substitution matrix has the wrong size");
  if (!is_unimodular(t)) throw NotUnimodular("substitution matrix is not unimodular");
  LaurentPoly out(f.rank());
  for (const auto& [e, c] : f.terms()) {
    Exponent image(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) image[i] = checked_add(image[i], checked_mul(t(i, j), e[j]));
    out.add_term(image, c);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  LaurentPoly parse() {
    LaurentPoly out(rank_);
    skip();
    if (pos_ >= text_.size()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    out += negate ? -term() : term();
    for (;;) {
      skip();
      if (pos_ >= text_.size()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
      const bool minus = peek() == '-';
      ++pos_;
      out += minus ? -term() : term();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 0, pos_ + 1); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  LaurentPoly term() {
    skip();
    bool negate = false;
    while (pos_ < text_.size() && (peek() == '-' || peek() == '+')) {
      negate ^= peek() == '-';
      ++pos_;
      skip();
    }
    mpz_class coeff = 1;
    Exponent e(static_cast<std::size_t>(rank_), 0);
    bool any = false;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) fail("expected a coefficient or variable");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        coeff *= mpz_class(std::string(text_.substr(start, pos_ - start)));
      } else if (peek() == 'g') {
        const std::size_t start = pos_++;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        int index = 0;
        std::from_chars(text_.data() + digits, text_.data() + pos_, index);
        if (pos_ == digits || index < 1 || index > rank_) {
          pos_ = start;
          fail("unknown variable in rank " + std::to_string(rank_));
        }
        long exp = 1;
        skip();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          exp = integer();
        }
        e[static_cast<std::size_t>(index - 1)] += exp;
      } else {
        fail(std::string("unexpected '") + peek() + "'");
      }
      any = true;
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return LaurentPoly::monomial(rank_, e, negate ? mpz_class(-coeff) : coeff);
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (pos_ == digits || ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed exponent");
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, int rank) {
  if (rank < 1) throw std::invalid_argument("polynomial rank must be >= 1");
  return PolyParser(text, rank).parse();
}

mpz_class integer_content(const LaurentPoly& f) {
  mpz_class g = 0;
  for (const auto& [e, c] : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UnitDecomposition unit_decomposition(const LaurentPoly& f) {
  if (f.is_zero()) throw DivisionByZero("the zero polynomial has no unit class");
  const Exponent m = f.min_exponents();
  Exponent neg(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
  LaurentPoly form = f.shifted(neg);
  int sign = 1;
  if (form.leading_coefficient() < 0) {
    form = -form;
    sign = -1;
  }
  UnitDecomposition d;
  d.unit = LaurentPoly::monomial(f.rank(), m, sign);
  d.form = UnitClassForm(form);
  return d;
}

UnitClassForm::UnitClassForm(const LaurentPoly& f) {
  if (f.is_zero()) throw DivisionByZero("the zero polynomial has no unit class");
  const Exponent m = f.min_exponents();
  Exponent neg(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
  poly_ = f.shifted(neg);
  if (poly_.leading_coefficient() < 0) poly_ = -poly_;
}

bool equal_mod_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return UnitClassForm(a) == UnitClassForm(b);
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in division");
  LaurentPoly q(a.rank());
  if (a.is_zero()) return q;
  if (b.size() == 1) {
    const auto& [eb, cb] = *b.terms().begin();
    for (const auto& [e, c] : a.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
      q.add_term(sub_exp(e, eb), c / cb);
    }
    return q;
  }
  // Quotient exponents lie in the box [min a - min b, max a - max b].
  const Exponent lo = sub_exp(a.min_exponents(), b.min_exponents());
  const Exponent hi = sub_exp(a.max_exponents(), b.max_exponents());
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return std::nullopt;
  const Exponent& eb = b.leading_exponent();
  const mpz_class& cb = b.leading_coefficient();
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const Exponent e = sub_exp(r.leading_exponent(), eb);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    if (!mpz_divisible_p(r.leading_coefficient().get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    const LaurentPoly t = LaurentPoly::monomial(a.rank(), e, r.leading_coefficient() / cb);
    r -= t * b;
    q += t;
  }
  return q;
}

namespace {

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalError("expected exact division failed in gcd");
  return *q;
}

LaurentPoly positive_lead(LaurentPoly f) {
  if (!f.is_zero() && f.leading_coefficient() < 0) f = -f;
  return f;
}

int smallest_variable(const LaurentPoly& a, const LaurentPoly& b) {
  for (int v = 0; v < a.rank(); ++v) {
    if ((!a.is_zero() && a.degree(v) > 0) || (!b.is_zero() && b.degree(v) > 0)) return v;
  }
  return -1;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Content of a polynomial with respect to var (other variables as coefficients).
LaurentPoly poly_content(const LaurentPoly& f, int var) {
  LaurentPoly g(f.rank());
  const long d = f.degree(var);
  for (long k = d; k >= 0; --k) {
    const LaurentPoly c = f.coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly power(const LaurentPoly& f, long k) {
  LaurentPoly out = LaurentPoly::constant(f.rank(), 1);
  for (long i = 0; i < k; ++i) out = out * f;
  return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b, in var.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, int var) {
  const long db = b.degree(var);
  const LaurentPoly lcb = b.coefficient_in(var, db);
  long steps = a.degree(var) - db + 1;
  Exponent shift(static_cast<std::size_t>(a.rank()), 0);
  while (!a.is_zero() && a.degree(var) >= db) {
    const long da = a.degree(var);
    const LaurentPoly lca = a.coefficient_in(var, da);
    shift[static_cast<std::size_t>(var)] = da - db;
    a = lcb * a - lca * b.shifted(shift);
    --steps;
  }
  return steps > 0 ? power(lcb, steps) * a : a;
}

// gcd of polynomials (nonnegative exponents), positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  const int v = smallest_variable(a, b);
  if (v < 0) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.leading_coefficient().get_mpz_t(), b.leading_coefficient().get_mpz_t());
    return LaurentPoly::constant(a.rank(), g);
  }
  const LaurentPoly ca = poly_content(a, v);
  const LaurentPoly cb = poly_content(b, v);
  const LaurentPoly c = poly_gcd(ca, cb);
  LaurentPoly pa = exact(a, ca);
  LaurentPoly pb = exact(b, cb);
  if (pa.degree(v) == 0 || pb.degree(v) == 0) return c;
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  // Subresultant remainder sequence.
  LaurentPoly g = LaurentPoly::constant(a.rank(), 1), h = g;
  for (;;) {
    const long delta = pa.degree(v) - pb.degree(v);
    const LaurentPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) return c;
    pa = std::move(pb);
    pb = exact(r, g * power(h, delta));
    g = pa.coefficient_in(v, pa.degree(v));
    if (delta > 0) h = exact(power(g, delta), power(h, delta - 1));
  }
  return positive_lead(c * exact(pb, poly_content(pb, v)));
}

LaurentPoly to_polynomial(const LaurentPoly& f) {
  Exponent m = f.min_exponents();
  for (auto& x : m) x = -x;
  return f.shifted(m);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in gcd");
  if (a.is_zero() && b.is_zero()) return LaurentPoly(a.rank());
  if (a.is_zero()) return UnitClassForm(b).poly();
  if (b.is_zero()) return UnitClassForm(a).poly();
  return UnitClassForm(poly_gcd(to_polynomial(a), to_polynomial(b))).poly();
}

LaurentPoly content_in(const LaurentPoly& f, int var) {
  if (f.is_zero()) return f;
  const LaurentPoly p = to_polynomial(f);
  return UnitClassForm(poly_content(p, var)).poly();
}

}  // namespace hcyl
