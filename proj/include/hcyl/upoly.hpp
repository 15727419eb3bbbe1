#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace hcyl {

class StepBudget;

namespace upoly {

/// Dense univariate polynomial over Z, coefficients low to high, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& f);
long degree(const ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
mpz_class content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);
/// a / b over Z when exact.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

/// Squarefree decomposition of a primitive polynomial with positive
/// leading coefficient: f = prod s_i^i.
std::vector<std::pair<ZPoly, long>> squarefree(const ZPoly& f);

/// Irreducible factors over Z of a primitive squarefree polynomial of
/// degree >= 1 with positive leading coefficient (Cantor-Zassenhaus mod p,
/// Hensel lifting, subset recombination). Factors are primitive with
/// positive leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f, StepBudget& budget);

/// Full factorization of a primitive polynomial with positive leading
/// coefficient into (irreducible, multiplicity).
std::vector<std::pair<ZPoly, long>> factor(const ZPoly& f, StepBudget& budget);

}  // namespace upoly
}  // namespace hcyl
