#include "hcyl/cylinder.hpp"

#include <functional>
#include <sstream>

#include "hcyl/autfree.hpp"
#include "hcyl/errors.hpp"

namespace hcyl {

AdmissiblePresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  AdmissiblePresentation p;
  bool have_rank = false, have_extras = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    const std::size_t kw_end = line.find_first_of(" \t\r", start);
    const std::string keyword = line.substr(start, kw_end == std::string::npos ? std::string::npos : kw_end - start);
    const std::size_t arg = kw_end == std::string::npos ? line.size() : kw_end;
    const std::string rest = line.substr(arg);

    auto integer = [&](int min) {
      int value = 0;
      try {
        std::size_t used = 0;
        value = std::stoi(rest, &used);
        if (rest.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(keyword + " expects an integer", lineno, arg + 1);
      }
      if (value < min) throw ParseError(keyword + " must be >= " + std::to_string(min), lineno, arg + 1);
      return value;
    };

    if (keyword == "rank") {
      if (have_rank) throw ParseError("duplicate rank line", lineno, start + 1);
      if (!p.relators.empty()) throw ParseError("rank after rel lines", lineno, start + 1);
      p.rank = integer(1);
      have_rank = true;
    } else if (keyword == "extras") {
      if (have_extras) throw ParseError("duplicate extras line", lineno, start + 1);
      if (!p.relators.empty()) throw ParseError("extras after rel lines", lineno, start + 1);
      p.extras = integer(0);
      have_extras = true;
    } else if (keyword == "rel") {
      if (!have_rank) throw ParseError("rel before rank", lineno, start + 1);
      try {
        p.relators.push_back(parse_word(rest, p.table()));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), lineno, arg + e.column());
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineno, start + 1);
    }
  }
  if (!have_rank) throw ParseError("missing rank line", lineno == 0 ? 1 : lineno, 1);
  if (p.relators.empty()) throw ParseError("no rel lines", lineno, 1);
  return p;
}

std::string to_text(const AdmissiblePresentation& p) {
  std::string out = "rank " + std::to_string(p.rank) + "\nextras " + std::to_string(p.extras) + "\n";
  for (const Word& w : p.relators) out += "rel " + w.to_string() + "\n";
  return out;
}

std::string to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::DeficiencyMismatch: return "DeficiencyMismatch";
    case ValidationErrorKind::HomologyNotFree: return "HomologyNotFree";
    case ValidationErrorKind::NotIsoOnH1: return "NotIsoOnH1";
  }
  return "?";
}

ValidationError::ValidationError(ValidationErrorKind kind, const std::string& message)
    : std::invalid_argument(to_string(kind) + ": " + message), kind_(kind) {}

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t i = from; i < to; ++i) r.push_back(i);
  return r;
}

IntMatrix relation_matrix(const AdmissiblePresentation& p) {
  const GeneratorTable t = p.table();
  IntMatrix r(p.relators.size(), t.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const auto v = abelianize(p.relators[i], t);
    for (std::size_t j = 0; j < v.size(); ++j) r(i, j) = v[j];
  }
  return r;
}

// Rows: classes of im1..imn, z1..zl in the ip basis.
IntMatrix ip_coordinates(const AdmissiblePresentation& p) {
  const auto n = static_cast<std::size_t>(p.rank), l = static_cast<std::size_t>(p.extras);
  const IntMatrix r = relation_matrix(p);
  const auto rows = range(0, n + l);
  const IntMatrix ra = r.submatrix(rows, range(0, n + l));
  const IntMatrix rb = r.submatrix(rows, range(n + l, 2 * n + l));
  return -(inverse_unimodular(ra) * rb);
}

}  // namespace

ValidationReport validate(const AdmissiblePresentation& p) {
  ValidationReport rep;
  const auto n = static_cast<std::size_t>(p.rank), l = static_cast<std::size_t>(p.extras);
  rep.relation_matrix = relation_matrix(p);
  const SmithForm snf = smith_normal_form(rep.relation_matrix);
  rep.invariant_factors = snf.invariant_factors();
  rep.h1_rank = p.table().size() - snf.rank();

  if (p.relators.size() != n + l) {
    rep.error = ValidationErrorKind::DeficiencyMismatch;
    rep.message = "expected " + std::to_string(n + l) + " relators (rank + extras), found " +
                  std::to_string(p.relators.size());
    return rep;
  }
  for (auto d : rep.invariant_factors) {
    if (d != 1) {
      rep.error = ValidationErrorKind::HomologyNotFree;
      rep.message = "H1 is not free of rank " + std::to_string(n) + ": invariant factor " + std::to_string(d);
      return rep;
    }
  }
  const auto rows = range(0, n + l);
  if (!is_unimodular(rep.relation_matrix.submatrix(rows, range(0, n + l)))) {
    rep.error = ValidationErrorKind::NotIsoOnH1;
    rep.message = "the ip classes do not form a basis of H1";
    return rep;
  }
  if (!is_unimodular(rep.relation_matrix.submatrix(rows, range(n, 2 * n + l)))) {
    rep.error = ValidationErrorKind::NotIsoOnH1;
    rep.message = "the im classes do not form a basis of H1";
    return rep;
  }
  rep.message = "H1 free of rank " + std::to_string(rep.h1_rank) + "; ip and im classes are bases";
  return rep;
}

void require_valid(const AdmissiblePresentation& p) {
  const ValidationReport rep = validate(p);
  if (!rep.valid()) throw ValidationError(*rep.error, rep.message);
}

IntMatrix sigma(const AdmissiblePresentation& p) {
  require_valid(p);
  const auto n = static_cast<std::size_t>(p.rank);
  const IntMatrix v = ip_coordinates(p);
  IntMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = v(j, i);
  return s;
}

RingMap ring_map(const AdmissiblePresentation& p) {
  require_valid(p);
  const auto n = static_cast<std::size_t>(p.rank), l = static_cast<std::size_t>(p.extras);
  const IntMatrix v = ip_coordinates(p);
  const GeneratorTable t = p.table();
  RingMap m(t, p.rank);
  for (std::size_t k = 0; k < n + l; ++k) {
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = v(k, i);
    m.assign(t.at(k), e);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    m.assign(t.at(n + l + i), e);
  }
  return m;
}

FoxBlocks fox_blocks(const AdmissiblePresentation& p, Exec exec) {
  const RingMap m = ring_map(p);
  const GeneratorTable t = p.table();
  const auto n = static_cast<std::size_t>(p.rank), l = static_cast<std::size_t>(p.extras);
  std::vector<Generator> vars;
  for (std::size_t i = 0; i < t.size(); ++i) vars.push_back(t.at(i));
  const PolyMatrix all = fox_matrix(p.relators, vars, m, exec);
  const std::size_t cols = p.relators.size();
  auto rows = [&](std::size_t from, std::size_t count) {
    PolyMatrix out(count, cols, p.rank);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = all(from + i, j);
    return out;
  };
  return {rows(0, n), rows(n, l), rows(n + l, n), rows(0, n + l)};
}

MagnusMatrix magnus_matrix(const AdmissiblePresentation& p, Exec exec) {
  const FoxBlocks fb = fox_blocks(p, exec);
  const auto n = static_cast<std::size_t>(p.rank), l = static_cast<std::size_t>(p.extras);
  PolyMatrix rhs(n + l, n, p.rank);
  for (std::size_t i = 0; i < n; ++i) rhs(i, i) = LaurentPoly::constant(p.rank, 1);
  const auto [y, d] = solve_fraction_free(fb.ab, rhs, exec);
  const PolyMatrix cy = fb.c * y;
  FracMatrix r(n, n, p.rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = RationalFunction(-cy(i, j), d);
  return {r, sigma(p)};
}

LaurentPoly torsion_exact(const AdmissiblePresentation& p, Exec exec) {
  return bareiss_det(fox_blocks(p, exec).ab, exec);
}

UnitClassForm torsion(const AdmissiblePresentation& p, Exec exec) {
  const LaurentPoly d = torsion_exact(p, exec);
  if (d.is_zero()) throw SingularMatrix("det(A;B) vanishes");
  return UnitClassForm(d);
}

namespace {

Word rename(const Word& w, const GeneratorTable& target, const std::function<Generator(const Generator&)>& f) {
  std::vector<Letter> letters;
  for (const Letter& l : w.letters()) letters.push_back({f(l.gen), l.exp});
  return Word(target, letters);
}

}  // namespace

AdmissiblePresentation compose(const AdmissiblePresentation& p1, const AdmissiblePresentation& p2) {
  if (p1.rank != p2.rank) {
    throw std::invalid_argument("cannot stack presentations of rank " + std::to_string(p1.rank) + " and " +
                                std::to_string(p2.rank));
  }
  const int n = p1.rank, l1 = p1.extras, l2 = p2.extras;
  AdmissiblePresentation out{n, l1 + 2 * n + l2, {}};
  const GeneratorTable t = out.table();
  auto first = [&](const Generator& g) -> Generator {
    if (g.kind == GenKind::IMinus) return {GenKind::Z, l1 + g.index};
    return g;
  };
  auto second = [&](const Generator& g) -> Generator {
    switch (g.kind) {
      case GenKind::IPlus: return {GenKind::Z, l1 + n + g.index};
      case GenKind::Z: return {GenKind::Z, l1 + 2 * n + g.index};
      default: return g;
    }
  };
  for (const Word& w : p1.relators) out.relators.push_back(rename(w, t, first));
  for (const Word& w : p2.relators) out.relators.push_back(rename(w, t, second));
  for (int j = 1; j <= n; ++j) {
    out.relators.push_back(Word::generator(t, {GenKind::Z, l1 + j}) *
                           Word::generator(t, {GenKind::Z, l1 + n + j}, -1));
  }
  return out;
}

AdmissiblePresentation from_automorphism(const FreeEndomorphism& phi) {
  if (!phi.is_two_connected()) throw NotUnimodular("abelianization of the endomorphism is not unimodular");
  const int n = phi.rank();
  AdmissiblePresentation out{n, 0, {}};
  const GeneratorTable t = out.table();
  auto to_ip = [](const Generator& g) -> Generator { return {GenKind::IPlus, g.index}; };
  for (int j = 1; j <= n; ++j) {
    const Word image = rename(phi.images()[static_cast<std::size_t>(j - 1)], t, to_ip);
    out.relators.push_back(Word::generator(t, {GenKind::IMinus, j}) * image.inverse());
  }
  return out;
}

AdmissiblePresentation trivial_cylinder(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  AdmissiblePresentation out{rank, 0, {}};
  const GeneratorTable t = out.table();
  for (int j = 1; j <= rank; ++j) {
    out.relators.push_back(Word::generator(t, {GenKind::IPlus, j}) * Word::generator(t, {GenKind::IMinus, j}, -1));
  }
  return out;
}

AdmissiblePresentation ml_presentation() {
  return parse_presentation(
      "rank 4\n"
      "extras 1\n"
      "rel ip1 im3^-1 ip4 im1^-1\n"
      "rel [ip1,ip3] ip2 z1 im2^-1 [im3,im1]\n"
      "rel ip4 im3 ip4^-1 z1^-1\n"
      "rel im3 ip3^-1 im3^-1 z1\n"
      "rel im4 z1^-1 ip4^-1 z1\n");
}

}  // namespace hcyl
