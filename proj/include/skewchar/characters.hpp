#pragma once

#include "skewchar/charpoly.hpp"
#include "skewchar/diagrams.hpp"
#include "skewchar/tableaux.hpp"

namespace skewchar {

// Sum over semistandard tableaux of prod D(T(i,j), c(i,j)).
CharPoly q_character(const SkewDiagram& d, int m, int n);
// Same sum restricted to entries in `range` (rules still those of gl(m|n)).
CharPoly restricted_character(const SkewDiagram& d, int m, int n, EntryRange range);

// Row (k) and column (1^k) characters, contents starting at 0, shifted by w.
// Zero for k < 0 and one for k = 0.
CharPoly row_character(int k, const Rat& w, const Signature& sig);
CharPoly column_character(int k, const Rat& w, const Signature& sig);

struct DivisibilityReport {
    SkewDiagram diagram;  // W(lambda) or S(mu)
    CharPoly quotient;    // K_diagram / K_Xi
    CharPoly expected;    // restricted character of the glued part
    bool ok = false;
};

DivisibilityReport check_divisibility_W(const Partition& lambda, int m, int n);
DivisibilityReport check_divisibility_S(const Partition& mu, int m, int n);

// prod_j zeta_j(u - kappa_j)^{s_j} for the l-weight of one monomial.
RatFunc central_eigenvalue(const Monomial& mono, const Signature& sig);
// prod over boxes of (1 + 1/(u + c)).
RatFunc box_product(const SkewDiagram& d);
// Checks every monomial of p against box_product(d); returns the common value.
// Throws MonomialMismatch on the first disagreeing monomial.
RatFunc central_eigenvalue(const CharPoly& p, const SkewDiagram& d);

GlWeight weight_of(const Monomial& mono, const Signature& sig);
// a >= b iff a - b is a non-negative integer combination of simple roots.
bool weight_geq(const GlWeight& a, const GlWeight& b);
// Throws NoUniqueLeading unless exactly one monomial dominates all others.
Monomial leading_monomial(const CharPoly& p);

}  // namespace skewchar
