#include "hcyl/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "hcyl/errors.hpp"
#include "hcyl/factor.hpp"

namespace hcyl::upoly {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

namespace {

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(d);
  return d;
}

ZPoly positive(ZPoly f) {
  if (!f.empty() && f.back() < 0)
    for (auto& c : f) c = -c;
  return f;
}

}  // namespace

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return f;
  const mpz_class g = content(f);
  ZPoly p = f;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return positive(std::move(p));
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) throw DivisionByZero("division by the zero polynomial");
  quotient.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  quotient.assign(a.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  for (long k = degree(a) - degree(b); k >= 0; --k) {
    const mpz_class& top = r[static_cast<std::size_t>(k) + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    const mpz_class q = top / lb;
    quotient[static_cast<std::size_t>(k)] = q;
    for (std::size_t j = 0; j < b.size(); ++j) r[static_cast<std::size_t>(k) + j] -= q * b[j];
  }
  trim(r);
  trim(quotient);
  return r.empty();
}

namespace {

ZPoly exact(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!divide_exact(a, b, q)) throw InternalError("expected exact univariate division failed");
  return q;
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

// Primitive gcd with positive leading coefficient (content ignored).
ZPoly gcd_primitive(ZPoly a, ZPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return positive(a);
}

}  // namespace

std::vector<std::pair<ZPoly, long>> squarefree(const ZPoly& f) {
  std::vector<std::pair<ZPoly, long>> out;
  if (degree(f) < 1) return out;
  const ZPoly df = derivative(f);
  const ZPoly a0 = gcd_primitive(f, df);
  ZPoly b = exact(f, a0);
  ZPoly c = exact(df, a0);
  ZPoly d = sub(c, derivative(b));
  for (long i = 1; degree(b) > 0; ++i) {
    const ZPoly a = gcd_primitive(b, d);
    if (degree(a) > 0) out.emplace_back(a, i);
    b = exact(b, a);
    c = exact(d, a);
    d = sub(c, derivative(b));
  }
  return out;
}

namespace {

// ---- arithmetic in F_p[x], p an odd prime below 2^31 ----

using FPoly = std::vector<std::uint64_t>;

struct Field {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  static void trim(FPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  FPoly reduce(const ZPoly& f) const {
    FPoly out(f.size());
    mpz_class r;
    for (std::size_t i = 0; i < f.size(); ++i) {
      mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
      out[i] = r.get_ui();
    }
    trim(out);
    return out;
  }

  FPoly monic(FPoly f) const {
    if (f.empty()) return f;
    const std::uint64_t li = inv(f.back());
    for (auto& c : f) c = mul(c, li);
    return f;
  }

  FPoly mulp(const FPoly& a, const FPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
  }

  FPoly subp(const FPoly& a, const FPoly& b) const {
    FPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = sub(c[i], b[i]);
    trim(c);
    return c;
  }

  FPoly addp(const FPoly& a, const FPoly& b) const {
    FPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = add(c[i], b[i]);
    trim(c);
    return c;
  }

  // a = q * b + r
  void divmod(const FPoly& a, const FPoly& b, FPoly& q, FPoly& r) const {
    r = a;
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    const std::uint64_t li = inv(b.back());
    for (std::size_t k = r.size() - b.size() + 1; k-- > 0;) {
      const std::uint64_t c = mul(r[k + b.size() - 1], li);
      q[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
    }
    trim(r);
    trim(q);
  }

  FPoly mod(const FPoly& a, const FPoly& b) const {
    FPoly q, r;
    divmod(a, b, q, r);
    return r;
  }

  FPoly div(const FPoly& a, const FPoly& b) const {
    FPoly q, r;
    divmod(a, b, q, r);
    return q;
  }

  FPoly gcd(FPoly a, FPoly b) const {
    while (!b.empty()) {
      FPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = 1 for coprime a, b.
  void bezout(const FPoly& a, const FPoly& b, FPoly& s, FPoly& t) const {
    FPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      FPoly q, r;
      divmod(r0, r1, q, r);
      FPoly s2 = subp(s0, mulp(q, s1));
      FPoly t2 = subp(t0, mulp(q, t1));
      r0 = std::move(r1), r1 = std::move(r);
      s0 = std::move(s1), s1 = std::move(s2);
      t0 = std::move(t1), t1 = std::move(t2);
    }
    if (r0.size() != 1) throw InternalError("Hensel factors are not coprime modulo p");
    const std::uint64_t ci = inv(r0[0]);
    s = mulp(s0, FPoly{ci});
    t = mulp(t0, FPoly{ci});
  }

  FPoly derivative(const FPoly& f) const {
    if (f.size() <= 1) return {};
    FPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul(f[i], i % p);
    trim(d);
    return d;
  }

  FPoly powmod(FPoly base, const mpz_class& e, const FPoly& m) const {
    FPoly r{1};
    base = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mulp(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mulp(r, base), m);
    }
    return r;
  }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct-degree then equal-degree splitting of a monic squarefree f.
std::vector<FPoly> factor_mod_p(const Field& F, FPoly f, StepBudget& budget, std::mt19937_64& rng) {
  std::vector<std::pair<FPoly, long>> ddf;
  const FPoly x{0, 1};
  FPoly h = x;
  for (long d = 1; 2 * d <= static_cast<long>(f.size()) - 1; ++d) {
    budget.charge(f.size() * f.size());
    h = F.powmod(h, mpz_class(static_cast<unsigned long>(F.p)), f);
    FPoly g = F.gcd(f, F.subp(h, x));
    if (g.size() > 1) {
      ddf.emplace_back(g, d);
      f = F.div(f, g);
      h = F.mod(h, f);
    }
  }
  if (f.size() > 1) ddf.emplace_back(f, static_cast<long>(f.size()) - 1);

  std::vector<FPoly> out;
  for (auto& [g, d] : ddf) {
    std::vector<FPoly> stack{g};
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (!stack.empty()) {
      FPoly u = std::move(stack.back());
      stack.pop_back();
      if (static_cast<long>(u.size()) - 1 == d) {
        out.push_back(F.monic(u));
        continue;
      }
      for (;;) {
        budget.charge(u.size() * u.size());
        FPoly a(u.size() - 1);
        for (auto& c : a) c = rng() % F.p;
        Field::trim(a);
        if (a.size() < 2) continue;
        FPoly b = F.subp(F.powmod(a, e, u), FPoly{1});
        FPoly s = F.gcd(u, b);
        if (s.size() > 1 && s.size() < u.size()) {
          stack.push_back(F.div(u, s));
          stack.push_back(s);
          break;
        }
      }
    }
  }
  return out;
}

// ---- Hensel lifting over Z / p^k ----

ZPoly mod_poly(const ZPoly& f, const mpz_class& m) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(out[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  trim(out);
  return out;
}

ZPoly from_fpoly(const FPoly& f) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = static_cast<unsigned long>(f[i]);
  return out;
}

// Lifts f = lc * g * h (mod p) with g, h monic to modulus p^k.
void hensel_pair(const ZPoly& f, const Field& F, unsigned k, ZPoly& g, ZPoly& h, StepBudget& budget) {
  const FPoly g0 = F.reduce(g), h0 = F.reduce(h);
  FPoly s, t;
  F.bezout(g0, h0, s, t);
  const mpz_class lc = f.back();
  mpz_class lcr;
  mpz_fdiv_r_ui(lcr.get_mpz_t(), lc.get_mpz_t(), F.p);
  const std::uint64_t lcinv = F.inv(lcr.get_ui());
  mpz_class q = F.p;
  for (unsigned j = 1; j < k; ++j) {
    budget.charge(f.size() * f.size());
    const mpz_class next = q * F.p;
    ZPoly prod = mul(g, h);
    for (auto& c : prod) c *= lc;
    ZPoly e = mod_poly(sub(f, prod), next);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    FPoly ep = F.mulp(F.reduce(e), FPoly{lcinv});
    FPoly quo, a;
    F.divmod(F.mulp(t, ep), g0, quo, a);
    FPoly b = F.addp(F.mulp(s, ep), F.mulp(quo, h0));
    ZPoly da = from_fpoly(a), db = from_fpoly(b);
    g.resize(std::max(g.size(), da.size()));
    h.resize(std::max(h.size(), db.size()));
    for (std::size_t i = 0; i < da.size(); ++i) g[i] += q * da[i];
    for (std::size_t i = 0; i < db.size(); ++i) h[i] += q * db[i];
    g = mod_poly(g, next);
    h = mod_poly(h, next);
    q = next;
  }
}

// f = lc * prod(factors) mod p; returns monic lifts mod p^k in the same order.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const Field& F, const std::vector<FPoly>& factors, unsigned k,
                               const mpz_class& modulus, StepBudget& budget) {
  if (factors.size() == 1) {
    mpz_class li;
    mpz_class lc = f.back();
    mpz_invert(li.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly m = f;
    for (auto& c : m) c *= li;
    return {mod_poly(m, modulus)};
  }
  const std::size_t half = factors.size() / 2;
  FPoly g0{1}, h0{1};
  for (std::size_t i = 0; i < half; ++i) g0 = F.mulp(g0, factors[i]);
  for (std::size_t i = half; i < factors.size(); ++i) h0 = F.mulp(h0, factors[i]);
  ZPoly g = from_fpoly(g0), h = from_fpoly(h0);
  hensel_pair(f, F, k, g, h, budget);
  std::vector<FPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<FPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  std::vector<ZPoly> out = hensel_lift(g, F, left, k, modulus, budget);
  std::vector<ZPoly> rest = hensel_lift(h, F, right, k, modulus, budget);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

ZPoly symmetric(const ZPoly& f, const mpz_class& m) {
  const mpz_class half = m / 2;
  ZPoly out = mod_poly(f, m);
  for (auto& c : out)
    if (c > half) c -= m;
  trim(out);
  return out;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& input, StepBudget& budget) {
  ZPoly f = primitive_part(input);
  if (degree(f) < 1) throw std::invalid_argument("factor_squarefree needs a nonconstant polynomial");
  if (degree(f) == 1) return {f};

  // Several good primes; keep the one giving the fewest modular factors.
  std::uint64_t best_p = 0;
  std::vector<FPoly> best;
  int good = 0;
  for (std::uint64_t p = 3; good < 5 && p < (1u << 20); p += 2) {
    if (!is_prime(p)) continue;
    budget.charge();
    const Field F{p};
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    const FPoly fp = F.reduce(f);
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    std::mt19937_64 rng(0x5eedULL + p);
    std::vector<FPoly> fac = factor_mod_p(F, F.monic(fp), budget, rng);
    ++good;
    if (best_p == 0 || fac.size() < best.size()) best_p = p, best = std::move(fac);
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw FactorizationIncomplete("no suitable prime for modular factorization");
  if (best.size() == 1) return {f};

  // Coefficient bound for lc * (any factor): |lc| * 2^deg * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  bound <<= static_cast<mp_bitcnt_t>(degree(f));
  bound *= abs(f.back());
  bound *= 2;
  mpz_class modulus = best_p;
  unsigned k = 1;
  while (modulus <= bound) modulus *= best_p, ++k;

  const Field F{best_p};
  std::vector<ZPoly> lifted = hensel_lift(f, F, best, k, modulus, budget);

  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      budget.charge(f.size());
      ZPoly g{f.back()};
      for (std::size_t i : idx) g = mod_poly(mul(g, lifted[i]), modulus);
      g = primitive_part(symmetric(g, modulus));
      ZPoly q;
      if (degree(g) > 0 && divide_exact(f, g, q)) {
        found.push_back(g);
        f = primitive_part(q);
        for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
        hit = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (degree(f) > 0) found.push_back(f);
  return found;
}

std::vector<std::pair<ZPoly, long>> factor(const ZPoly& f, StepBudget& budget) {
  std::vector<std::pair<ZPoly, long>> out;
  for (const auto& [s, mult] : squarefree(primitive_part(f))) {
    for (auto& g : factor_squarefree(s, budget)) out.emplace_back(std::move(g), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

}  // namespace hcyl::upoly
