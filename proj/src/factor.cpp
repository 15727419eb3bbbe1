#include "hcyl/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hcyl/errors.hpp"
#include "hcyl/upoly.hpp"

namespace hcyl {

void StepBudget::charge(std::uint64_t steps) {
  used_ += steps;
  if (used_ > limit_) {
    throw FactorizationIncomplete("factorization step budget of " + std::to_string(limit_) + " exhausted");
  }
}

LaurentPoly Factorization::expand() const {
  LaurentPoly out = unit;
  for (const auto& f : factors) out *= f.form.poly().pow(static_cast<unsigned long>(f.multiplicity));
  return out;
}

namespace {

using Collected = std::map<std::string, Factor>;

void record(Collected& out, const LaurentPoly& g, long mult, Certificate cert) {
  const UnitClassForm form(g);
  auto [it, inserted] = out.try_emplace(form.to_string(), Factor{form, mult, cert});
  if (!inserted) it->second.multiplicity += mult;
}

void factor_integer(mpz_class n, int rank, Collected& out, StepBudget& budget) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 1000000 && n > 1; p += (p == 2 ? 1 : 2)) {
    budget.charge();
    if (mpz_class(p) * p > n) break;
    long mult = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++mult;
    }
    if (mult) record(out, LaurentPoly::constant(rank, p), mult, Certificate::IntegerPrime);
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
    throw FactorizationIncomplete("integer content " + n.get_str() + " has large composite part");
  }
  record(out, LaurentPoly::constant(rank, n), 1, Certificate::IntegerPrime);
}

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalError("expected exact division failed in factorization");
  return *q;
}

// Collinear support: f = g^base * u(g^dir) with u univariate.
bool collinear(const LaurentPoly& f, Exponent& base, Exponent& dir, upoly::ZPoly& u) {
  const auto n = static_cast<std::size_t>(f.rank());
  const Exponent& p0 = f.terms().begin()->first;
  dir.assign(n, 0);
  for (const auto& [e, c] : f.terms()) {
    if (e == p0) continue;
    long g = 0;
    for (std::size_t i = 0; i < n; ++i) g = std::gcd(g, e[i] - p0[i]);
    for (std::size_t i = 0; i < n; ++i) dir[i] = (e[i] - p0[i]) / g;
    break;
  }
  std::vector<std::pair<long, mpz_class>> ts;
  std::size_t lead = 0;
  while (dir[lead] == 0) ++lead;
  for (const auto& [e, c] : f.terms()) {
    const long t = (e[lead] - p0[lead]) / dir[lead];
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] - p0[i] != t * dir[i]) return false;
    ts.emplace_back(t, c);
  }
  long tmin = ts.front().first, tmax = ts.front().first;
  for (const auto& [t, c] : ts) tmin = std::min(tmin, t), tmax = std::max(tmax, t);
  base.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) base[i] = p0[i] + tmin * dir[i];
  u.assign(static_cast<std::size_t>(tmax - tmin + 1), 0);
  for (const auto& [t, c] : ts) u[static_cast<std::size_t>(t - tmin)] = c;
  return true;
}

LaurentPoly from_univariate(const upoly::ZPoly& u, const Exponent& dir, int rank) {
  LaurentPoly out(rank);
  Exponent e(dir.size(), 0);
  for (std::size_t k = 0; k < u.size(); ++k) {
    for (std::size_t i = 0; i < dir.size(); ++i) e[i] = static_cast<long>(k) * dir[i];
    out.add_term(e, u[k]);
  }
  return out;
}

void factor_kronecker(LaurentPoly s, Collected& out, StepBudget& budget) {
  const auto n = static_cast<std::size_t>(s.rank());
  const Exponent deg = s.max_exponents();
  std::vector<long> weight(n, 0);
  long w = 1;
  for (std::size_t i = 0; i < n; ++i) {
    weight[i] = w;
    if (__builtin_mul_overflow(w, deg[i] + 1, &w) || w > 4096) {
      throw FactorizationIncomplete("Kronecker substitution degree too large for " + s.to_string());
    }
  }
  upoly::ZPoly image(static_cast<std::size_t>(w), 0);
  for (const auto& [e, c] : s.terms()) {
    long k = 0;
    for (std::size_t i = 0; i < n; ++i) k += e[i] * weight[i];
    image[static_cast<std::size_t>(k)] = c;
  }
  upoly::trim(image);

  // Powers of x in the image carry no information about the factors; they
  // are set aside and reattached as shifts when lifting candidates back.
  std::vector<upoly::ZPoly> pieces;
  long xcount = 0;
  for (auto& [g, mult] : upoly::factor(image, budget)) {
    if (g.size() == 2 && g[0] == 0) {
      xcount += mult;
      continue;
    }
    for (long m = 0; m < mult; ++m) pieces.push_back(g);
  }

  auto back = [&](const upoly::ZPoly& g, long shift) -> std::optional<LaurentPoly> {
    LaurentPoly p(s.rank());
    Exponent e(n);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k] == 0) continue;
      long rem = static_cast<long>(k) + shift;
      for (std::size_t i = n; i-- > 0;) {
        e[i] = rem / weight[i];
        rem %= weight[i];
        if (e[i] > deg[i]) return std::nullopt;
      }
      p.add_term(e, g[k]);
    }
    return p;
  };

  std::size_t size = 1;
  while (2 * size <= pieces.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      upoly::ZPoly g{1};
      for (std::size_t i : idx) g = upoly::mul(g, pieces[i]);
      for (long a = 0; a <= xcount && !hit; ++a) {
        budget.charge(s.size());
        auto cand = back(g, a);
        if (!cand || cand->size() < 2) continue;
        if (auto q = divide_exact(s, *cand)) {
          record(out, *cand, 1, Certificate::Kronecker);
          s = *q;
          xcount -= a;
          for (std::size_t i = size; i-- > 0;) pieces.erase(pieces.begin() + static_cast<long>(idx[i]));
          hit = true;
        }
      }
      if (hit) break;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == pieces.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++size;
  }
  if (s.size() > 1) record(out, s, 1, Certificate::Kronecker);
}

// s: squarefree polynomial, every irreducible factor involving every variable of s.
void factor_squarefree(const LaurentPoly& s, long mult, Collected& out, StepBudget& budget) {
  if (s.is_constant()) return;
  budget.charge(s.size());
  Exponent base, dir;
  upoly::ZPoly u;
  if (collinear(s, base, dir, u)) {
    for (const auto& [g, m] : upoly::factor(u, budget)) {
      record(out, from_univariate(g, dir, s.rank()), m * mult, Certificate::Univariate);
    }
    return;
  }
  for (int v = 0; v < s.rank(); ++v) {
    if (s.degree(v) == 1 && is_irreducible_linear_criterion(s, v)) {
      record(out, s, mult, Certificate::LinearCriterion);
      return;
    }
  }
  Collected local;
  factor_kronecker(s, local, budget);
  for (auto& [key, f] : local) {
    f.multiplicity *= mult;
    auto [it, inserted] = out.try_emplace(key, f);
    if (!inserted) it->second.multiplicity += f.multiplicity;
  }
}

// f: polynomial with minimum exponents 0, integer content 1.
void factor_primitive(const LaurentPoly& f, long mult, Collected& out, StepBudget& budget) {
  if (f.is_constant()) return;
  budget.charge(f.size());
  int var = -1;
  for (int v = 0; v < f.rank(); ++v) {
    if (f.degree(v) == 0) continue;
    if (var < 0) var = v;
    const LaurentPoly c = content_in(f, v);
    if (!c.is_one()) {
      factor_primitive(c, mult, out, budget);
      factor_primitive(UnitClassForm(exact(f, c)).poly(), mult, out, budget);
      return;
    }
  }
  // Yun's squarefree decomposition with respect to var.
  const LaurentPoly df = f.derivative(var);
  const LaurentPoly a0 = gcd(f, df);
  LaurentPoly b = exact(f, a0);
  LaurentPoly c = exact(df, a0);
  LaurentPoly d = c - b.derivative(var);
  for (long i = 1; !b.is_constant(); ++i) {
    budget.charge(b.size());
    const LaurentPoly a = gcd(b, d);
    if (!a.is_constant()) factor_squarefree(a, mult * i, out, budget);
    b = exact(b, a);
    c = exact(d, a);
    d = c - b.derivative(var);
  }
}

}  // namespace

Factorization factor(const LaurentPoly& f, StepBudget& budget) {
  const UnitDecomposition ud = unit_decomposition(f);
  LaurentPoly g = ud.form.poly();
  const mpz_class content = integer_content(g);
  if (content != 1) {
    LaurentPoly scaled(g.rank());
    for (const auto& [e, c] : g.terms()) scaled.add_term(e, c / content);
    g = scaled;
  }
  Collected collected;
  factor_integer(content, f.rank(), collected, budget);
  factor_primitive(g, 1, collected, budget);

  Factorization out;
  out.unit = ud.unit;
  for (auto& [key, fac] : collected) out.factors.push_back(fac);
  return out;
}

Factorization factor(const LaurentPoly& f) {
  StepBudget budget;
  return factor(f, budget);
}

bool is_irreducible_linear_criterion(const LaurentPoly& f, int var) {
  if (var < 0 || var >= f.rank()) throw std::out_of_range("variable index out of range");
  if (f.is_zero()) throw std::invalid_argument("linear criterion on the zero polynomial");
  const UnitDecomposition ud = unit_decomposition(f);
  const LaurentPoly& s = ud.form.poly();
  if (s.degree(var) > 1) {
    throw std::invalid_argument("polynomial has degree " + std::to_string(s.degree(var)) + " in g" +
                                std::to_string(var + 1));
  }
  if (s.degree(var) == 0) return false;
  if (integer_content(s) != 1) return false;
  if (!ud.unit.is_constant()) return false;
  const LaurentPoly b = s.coefficient_in(var, 1);
  const LaurentPoly c = s.coefficient_in(var, 0);
  if (c.is_zero()) return b.is_unit();
  return gcd(b, c).is_one();
}

}  // namespace hcyl
