#include "hcyl/foxcalc.hpp"

#include <stdexcept>

#include "hcyl/errors.hpp"

namespace hcyl {

GroupRingElement::GroupRingElement(const Word& w, const mpz_class& c) { add_term(w, c); }

mpz_class GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement operator-(GroupRingElement a) {
  for (auto& [w, c] : a.terms_) c = -c;
  return a;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*(" + w.to_string() + ")";
  }
  return out;
}

RingMap::RingMap(GeneratorTable table, int rank)
    : table_(table), rank_(rank), images_(table.size()), assigned_(table.size(), false) {}

RingMap RingMap::abelianization(const GeneratorTable& free_table) {
  const int n = static_cast<int>(free_table.size());
  RingMap m(free_table, n);
  for (std::size_t i = 0; i < free_table.size(); ++i) {
    Exponent e(free_table.size(), 0);
    e[i] = 1;
    m.assign(free_table.at(i), e);
  }
  return m;
}

void RingMap::assign(const Generator& g, Exponent image) {
  const auto idx = table_.index_of(g);
  if (!idx) throw std::invalid_argument("generator " + g.name() + " is not in the " + table_.describe());
  if (image.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("ring map image has wrong rank");
  images_[*idx] = std::move(image);
  assigned_[*idx] = true;
}

const Exponent& RingMap::image(const Generator& g) const {
  const auto idx = table_.index_of(g);
  if (!idx || !assigned_[*idx]) throw UnassignedGenerator("ring map does not assign " + g.name());
  return images_[*idx];
}

Exponent RingMap::image(const Word& w) const {
  Exponent e(static_cast<std::size_t>(rank_), 0);
  for (const Letter& l : w.letters()) {
    const Exponent& x = image(l.gen);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += l.exp * x[i];
  }
  return e;
}

GroupRingElement fox_derivative(const Word& w, const Generator& x) {
  GroupRingElement out;
  const auto letters = w.letters();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k].gen != x) continue;
    if (letters[k].exp > 0) {
      out.add_term(w.prefix(k), 1);
    } else {
      out.add_term(w.prefix(k + 1), -1);
    }
  }
  return out;
}

LaurentPoly specialize(const GroupRingElement& e, const RingMap& m, bool apply_bar) {
  LaurentPoly out(m.rank());
  for (const auto& [w, c] : e.terms()) {
    Exponent v = m.image(w);
    if (apply_bar)
      for (auto& x : v) x = -x;
    out.add_term(v, c);
  }
  return out;
}

LaurentPoly fox_specialized(const Word& w, const Generator& x, const RingMap& m, bool apply_bar) {
  LaurentPoly out(m.rank());
  Exponent prefix(static_cast<std::size_t>(m.rank()), 0);
  const long sign = apply_bar ? -1 : 1;
  Exponent term(prefix.size());
  for (const Letter& l : w.letters()) {
    const Exponent& img = m.image(l.gen);
    if (l.exp < 0) {
      for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] -= img[i];
    }
    if (l.gen == x) {
      for (std::size_t i = 0; i < prefix.size(); ++i) term[i] = sign * prefix[i];
      out.add_term(term, l.exp > 0 ? 1 : -1);
    }
    if (l.exp > 0) {
      for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] += img[i];
    }
  }
  return out;
}

PolyMatrix fox_matrix(const std::vector<Word>& relators, const std::vector<Generator>& vars, const RingMap& m,
                      Exec exec) {
  PolyMatrix out(vars.size(), relators.size(), m.rank());
  const std::size_t cols = relators.size();
  parallel_for(vars.size() * cols, exec, [&](std::size_t k) {
    const std::size_t i = k / cols, j = k % cols;
    out(i, j) = fox_specialized(relators[j], vars[i], m, true);
  });
  return out;
}

}  // namespace hcyl
