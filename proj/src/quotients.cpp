#include "hcyl/quotients.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hcyl/errors.hpp"

namespace hcyl {

std::string to_string(QuotientLevel level) {
  switch (level) {
    case QuotientLevel::ModH: return "ModH";
    case QuotientLevel::ModHA: return "ModHA";
    case QuotientLevel::ModHAN: return "ModHAN";
  }
  return "?";
}

std::string to_string(Distinctness d) {
  switch (d) {
    case Distinctness::Distinct: return "Distinct";
    case Distinctness::Equal: return "Equal";
    case Distinctness::Indistinguishable: return "Indistinguishable";
  }
  return "?";
}

OrbitCertificate certify(const LaurentPoly& f) {
  OrbitCertificate c;
  c.representative = UnitClassForm(f);
  const LaurentPoly& p = c.representative.poly();
  c.monomial_count = p.size();
  std::vector<mpz_class> pos, neg;
  for (const auto& [e, x] : p.terms()) {
    pos.push_back(x);
    neg.push_back(-x);
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  c.coeff_multiset = std::min(pos, neg);
  if (p.size() > 1) {
    const Exponent& e0 = p.leading_exponent();
    IntMatrix diff(p.size() - 1, e0.size());
    std::size_t row = 0;
    for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it, ++row)
      for (std::size_t i = 0; i < e0.size(); ++i) diff(row, i) = it->first[i] - e0[i];
    for (auto d : smith_normal_form(diff).invariant_factors())
      if (d != 0) c.diff_lattice_snf.push_back(d);
  }
  return c;
}

std::string OrbitCertificate::invariant_text() const {
  std::string out = "{" + std::to_string(monomial_count) + ";";
  for (std::size_t i = 0; i < coeff_multiset.size(); ++i) out += (i ? "," : " ") + coeff_multiset[i].get_str();
  out += ";";
  for (std::size_t i = 0; i < diff_lattice_snf.size(); ++i) out += (i ? "," : " ") + std::to_string(diff_lattice_snf[i]);
  return out + "}";
}

bool OrbitCertificate::same_invariants(const OrbitCertificate& other) const {
  return monomial_count == other.monomial_count && coeff_multiset == other.coeff_multiset &&
         diff_lattice_snf == other.diff_lattice_snf;
}

std::string quotient_key(const UnitClassForm& f, QuotientLevel level) {
  if (level == QuotientLevel::ModH) return f.to_string();
  return certify(f.poly()).invariant_text();
}

std::string certificate_text(const UnitClassForm& f, QuotientLevel level) {
  if (level == QuotientLevel::ModH) return f.to_string();
  return f.to_string() + " " + certify(f.poly()).invariant_text();
}

long QuotientClass::exponent(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second.exponent;
}

void QuotientClass::add(const std::string& key, const std::string& representative, long exponent) {
  auto [it, inserted] = entries_.try_emplace(key, Entry{representative, 0});
  if (!inserted && representative < it->second.representative) it->second.representative = representative;
  it->second.exponent += exponent;
  if (level_ == QuotientLevel::ModHAN) it->second.exponent = ((it->second.exponent % 2) + 2) % 2;
  if (it->second.exponent == 0) entries_.erase(it);
}

QuotientClass operator+(const QuotientClass& a, const QuotientClass& b) {
  if (a.level_ != b.level_) throw std::invalid_argument("adding quotient classes of different levels");
  QuotientClass out = a;
  for (const auto& [key, e] : b.entries_) out.add(key, e.representative, e.exponent);
  return out;
}

QuotientClass operator-(const QuotientClass& a) { return a.scaled(-1); }

QuotientClass QuotientClass::scaled(long k) const {
  QuotientClass out(level_);
  for (const auto& [key, e] : entries_) out.add(key, e.representative, e.exponent * k);
  return out;
}

bool operator==(const QuotientClass& a, const QuotientClass& b) {
  if (a.level_ != b.level_ || a.entries_.size() != b.entries_.size()) return false;
  for (const auto& [key, e] : a.entries_)
    if (b.exponent(key) != e.exponent) return false;
  return true;
}

std::string QuotientClass::to_string() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [key, e] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += "(" + e.representative + ", " + std::to_string(e.exponent) + ")";
  }
  return out + "]";
}

QuotientClass reduce(const RationalFunction& f, QuotientLevel level, StepBudget& budget) {
  if (f.is_zero()) throw DivisionByZero("zero has no class in the unit group");
  QuotientClass out(level);
  for (const auto& [poly, sign] : {std::pair{&f.num(), 1L}, std::pair{&f.den(), -1L}}) {
    const Factorization fac = factor(*poly, budget);
    for (const Factor& x : fac.factors) {
      out.add(quotient_key(x.form, level), certificate_text(x.form, level), sign * x.multiplicity);
    }
  }
  return out;
}

QuotientClass reduce(const RationalFunction& f, QuotientLevel level) {
  StepBudget budget;
  return reduce(f, level, budget);
}

QuotientClass r_hat(const AdmissiblePresentation& p, StepBudget& budget) {
  return reduce(magnus_matrix(p).det(), QuotientLevel::ModH, budget);
}

QuotientClass tau_tilde(const AdmissiblePresentation& p, StepBudget& budget) {
  return reduce(RationalFunction(torsion(p).poly()), QuotientLevel::ModHAN, budget);
}

IntMatrix cfk_twist() { return {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}}; }

std::vector<CfkWitness> witness_family_cfk(long count, StepBudget& budget, Exec exec) {
  if (count < 1) throw std::invalid_argument("witness count must be >= 1");
  const RationalFunction base = magnus_matrix(ml_presentation()).det();
  const IntMatrix t = cfk_twist();
  std::vector<CfkWitness> out(static_cast<std::size_t>(count));
  parallel_for(out.size(), exec, [&](std::size_t k) {
    StepBudget local(budget.limit());
    CfkWitness& w = out[k];
    w.m = static_cast<long>(k);
    w.value = substitute(base, power(t, w.m));
    w.cls = reduce(w.value, QuotientLevel::ModH, local);
    w.numerator_irreducible = is_irreducible_linear_criterion(UnitClassForm(w.value.num()).poly(), 2);
  });
  return out;
}

namespace {

using Signature = std::set<std::pair<Exponent, mpz_class>>;

// Exponent offsets and coefficients relative to the lex-leading monomial,
// normalized so the leading coefficient is positive.
Signature ratio_signature(const LaurentPoly& f) {
  Signature s;
  const Exponent& e0 = f.leading_exponent();
  const int sign = f.leading_coefficient() < 0 ? -1 : 1;
  for (const auto& [e, c] : f.terms()) {
    Exponent d(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) d[i] = e[i] - e0[i];
    s.emplace(std::move(d), sign * c);
  }
  return s;
}

}  // namespace

Distinctness assert_distinct(const UnitClassForm& a, const UnitClassForm& b, QuotientLevel level) {
  if (level == QuotientLevel::ModH) {
    return ratio_signature(a.poly()) == ratio_signature(b.poly()) ? Distinctness::Equal : Distinctness::Distinct;
  }
  return certify(a.poly()).same_invariants(certify(b.poly())) ? Distinctness::Indistinguishable
                                                              : Distinctness::Distinct;
}

std::size_t independence_rank(const std::vector<QuotientClass>& classes) {
  if (classes.empty()) return 0;
  const QuotientLevel level = classes.front().level();
  std::vector<std::string> keys;
  for (const auto& c : classes) {
    if (c.level() != level) throw std::invalid_argument("independence_rank over classes of different levels");
    for (const auto& [k, e] : c.entries()) keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::vector<std::vector<mpq_class>> rows;
  for (const auto& c : classes) {
    std::vector<mpq_class> row(keys.size());
    for (std::size_t j = 0; j < keys.size(); ++j) row[j] = c.exponent(keys[j]);
    rows.push_back(std::move(row));
  }
  // ModHAN is a vector space over F_2: eliminate mod 2 there.
  const bool mod2 = level == QuotientLevel::ModHAN;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < keys.size() && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const mpq_class f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < keys.size(); ++j) {
        rows[i][j] -= f * rows[rank][j];
        if (mod2) {
          mpz_class num = rows[i][j].get_num();
          rows[i][j] = ((num % 2) + 2) % 2;
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace hcyl
