#include "hcyl/autfree.hpp"

#include <sstream>
#include <stdexcept>

#include "hcyl/errors.hpp"
#include "hcyl/foxcalc.hpp"

namespace hcyl {

namespace {

Word rebind(const Word& w, const GeneratorTable& table) {
  if (w.context() == table) return w;
  if (w.context().mode() == GeneratorTable::Mode::Unbound && w.empty()) return Word(table);
  throw ContextMismatch("image word lives in " + w.context().describe() + ", expected " + table.describe());
}

Word gen(const GeneratorTable& t, int i, int exp = 1) { return Word::generator(t, {GenKind::Plain, i}, exp); }

}  // namespace

FreeEndomorphism::FreeEndomorphism(int rank, std::vector<Word> images) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  if (images.size() != static_cast<std::size_t>(rank)) {
    throw std::invalid_argument("expected " + std::to_string(rank) + " images, got " + std::to_string(images.size()));
  }
  const GeneratorTable t = table();
  images_.reserve(images.size());
  for (auto& w : images) images_.push_back(rebind(w, t));
}

FreeEndomorphism FreeEndomorphism::identity(int rank) {
  const GeneratorTable t = GeneratorTable::free(rank);
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(gen(t, i));
  return FreeEndomorphism(rank, std::move(images));
}

IntMatrix FreeEndomorphism::abelianization() const {
  const auto n = static_cast<std::size_t>(rank_);
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = abelianize(images_[j], table());
    for (std::size_t i = 0; i < n; ++i) m(i, j) = v[i];
  }
  return m;
}

bool FreeEndomorphism::is_two_connected() const { return is_unimodular(abelianization()); }

Word FreeEndomorphism::apply(const Word& w) const {
  const Word src = rebind(w, table());
  Word out(table());
  for (const Letter& l : src.letters()) {
    const Word& img = images_[static_cast<std::size_t>(l.gen.index - 1)];
    out *= l.exp > 0 ? img : img.inverse();
  }
  return out;
}

FreeEndomorphism compose(const FreeEndomorphism& phi, const FreeEndomorphism& psi) {
  if (phi.rank() != psi.rank()) throw std::invalid_argument("composing endomorphisms of different rank");
  std::vector<Word> images;
  for (const Word& w : psi.images()) images.push_back(phi.apply(w));
  return FreeEndomorphism(phi.rank(), std::move(images));
}

FreeEndomorphism parse_endomorphism(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  int rank = 0;
  std::vector<Word> images;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    const std::size_t kw_end = line.find_first_of(" \t\r", start);
    const std::string keyword = line.substr(start, kw_end == std::string::npos ? std::string::npos : kw_end - start);
    const std::size_t arg = kw_end == std::string::npos ? line.size() : kw_end;
    const std::string rest = line.substr(arg);
    if (keyword == "rank") {
      if (rank != 0) throw ParseError("duplicate rank line", lineno, start + 1);
      try {
        std::size_t used = 0;
        rank = std::stoi(rest, &used);
        if (rest.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("rank must be a positive integer", lineno, arg + 1);
      }
      if (rank < 1) throw ParseError("rank must be a positive integer", lineno, arg + 1);
    } else if (keyword == "img") {
      if (rank == 0) throw ParseError("img before rank", lineno, start + 1);
      if (images.size() == static_cast<std::size_t>(rank)) throw ParseError("too many img lines", lineno, start + 1);
      try {
        images.push_back(parse_word(rest, GeneratorTable::free(rank)));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), lineno, arg + e.column());
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineno, start + 1);
    }
  }
  if (rank == 0) throw ParseError("missing rank line", lineno == 0 ? 1 : lineno, 1);
  if (images.size() != static_cast<std::size_t>(rank)) {
    throw ParseError("expected " + std::to_string(rank) + " img lines, found " + std::to_string(images.size()),
                     lineno, 1);
  }
  return FreeEndomorphism(rank, std::move(images));
}

std::string to_text(const FreeEndomorphism& phi) {
  std::string out = "rank " + std::to_string(phi.rank()) + "\n";
  for (const Word& w : phi.images()) out += "img " + w.to_string() + "\n";
  return out;
}

PolyMatrix fox_matrix_of_endo(const FreeEndomorphism& phi, Exec exec) {
  const GeneratorTable t = phi.table();
  std::vector<Generator> vars;
  for (std::size_t i = 0; i < t.size(); ++i) vars.push_back(t.at(i));
  return fox_matrix(phi.images(), vars, RingMap::abelianization(t), exec);
}

MagnusMatrix magnus_of_endo(const FreeEndomorphism& phi, Exec exec) {
  if (!phi.is_two_connected()) throw NotUnimodular("endomorphism is not 2-connected: abelianization not unimodular");
  return {to_fractions(fox_matrix_of_endo(phi, exec)), phi.abelianization()};
}

FreeEndomorphism f_m(int rank, long m) {
  if (rank < 2) throw std::invalid_argument("f_m needs rank >= 2");
  if (m < 1) throw std::invalid_argument("f_m needs m >= 1");
  const GeneratorTable t = GeneratorTable::free(rank);
  const Word loop = gen(t, 1) * gen(t, 2, -1) * gen(t, 1, -1) * gen(t, 2, -1);
  std::vector<Word> images;
  images.push_back(loop.power(m) * gen(t, 1) * gen(t, 2).power(2 * m));
  for (int i = 2; i <= rank; ++i) images.push_back(gen(t, i));
  return FreeEndomorphism(rank, std::move(images));
}

QuotientClass r_tilde(const FreeEndomorphism& phi, StepBudget& budget) {
  if (!phi.is_two_connected()) throw NotUnimodular("endomorphism is not 2-connected: abelianization not unimodular");
  const LaurentPoly det = bareiss_det(fox_matrix_of_endo(phi));
  return reduce(RationalFunction(det), QuotientLevel::ModHA, budget);
}

std::vector<FmWitness> witness_family_fm(long count, StepBudget& budget, Exec exec) {
  if (count < 1) throw std::invalid_argument("witness count must be >= 1");
  std::vector<long> ms;
  for (long p = 3; static_cast<long>(ms.size()) < count; p += 2) {
    bool prime = true;
    for (long d = 3; d * d <= p; d += 2)
      if (p % d == 0) prime = false;
    if (prime) ms.push_back((p - 1) / 2);
  }
  std::vector<FmWitness> out(ms.size());
  parallel_for(ms.size(), exec, [&](std::size_t k) {
    StepBudget local(budget.limit());
    const FreeEndomorphism phi = f_m(2, ms[k]);
    out[k].m = ms[k];
    out[k].entry = fox_matrix_of_endo(phi)(0, 0);
    out[k].cls = r_tilde(phi, local);
  });
  return out;
}

std::vector<FreeEndomorphism> nielsen_generators(int rank) {
  const GeneratorTable t = GeneratorTable::free(rank);
  std::vector<FreeEndomorphism> out;
  auto base = [&] {
    std::vector<Word> images;
    for (int i = 1; i <= rank; ++i) images.push_back(gen(t, i));
    return images;
  };
  if (rank >= 2) {
    auto swap = base();
    std::swap(swap[0], swap[1]);
    out.emplace_back(rank, swap);
    auto cycle = base();
    for (int i = 0; i < rank; ++i) cycle[static_cast<std::size_t>(i)] = gen(t, (i + 1) % rank + 1);
    out.emplace_back(rank, cycle);
  }
  auto inv = base();
  inv[0] = gen(t, 1, -1);
  out.emplace_back(rank, inv);
  if (rank >= 2) {
    auto trans = base();
    trans[0] = gen(t, 1) * gen(t, 2);
    out.emplace_back(rank, trans);
  }
  return out;
}

FreeEndomorphism conjugation(int rank, const Word& w) {
  const GeneratorTable t = GeneratorTable::free(rank);
  const Word c = rebind(w, t);
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(c * gen(t, i) * c.inverse());
  return FreeEndomorphism(rank, std::move(images));
}

}  // namespace hcyl
