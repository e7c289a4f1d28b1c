#include "skewchar/tsystems.hpp"

#include "skewchar/characters.hpp"
#include "skewchar/charpoly_io.hpp"
#include "skewchar/errors.hpp"

namespace skewchar {

CharPoly classical_T(int i, int j, const Rat& w, int m, int n) {
    Signature sig{m, n};
    if (i < 0 || j < 0 || (i > m && j > n)) return CharPoly(sig);
    if (i == 0 || j == 0) return CharPoly::constant(sig, 1);
    Rat top = w + Rat(i - j + 1, 2);
    top.canonicalize();
    return q_character(rectangle(i, j, -top), m, n);
}

static TSystemCheck finish(CharPoly lhs, CharPoly rhs) {
    TSystemCheck c;
    c.ok = lhs == rhs;
    if (!c.ok) {
        auto t = canonical_terms(lhs - rhs);
        c.detail = "first differing term " + term_to_text(t.front().first, t.front().second);
    }
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

TSystemCheck verify_classical_tsystem(int i, int j, int m, int n) {
    if (i < 0 || j < 0) throw InvalidArgument("T-system indices must be non-negative");
    if (i == 0 && j == 0) throw InvalidArgument("the relation does not hold at i = j = 0");
    Rat half(1, 2);
    CharPoly lhs = classical_T(i, j, -half, m, n) * classical_T(i, j, half, m, n);
    CharPoly rhs = classical_T(i, j - 1, 0, m, n) * classical_T(i, j + 1, 0, m, n) +
                   classical_T(i - 1, j, 0, m, n) * classical_T(i + 1, j, 0, m, n);
    return finish(std::move(lhs), std::move(rhs));
}

TSystemCheck verify_extended_tsystem(const SkewDiagram& d, int m, int n) {
    TSystemFamily f = tsystem_family(d);
    auto K = [&](const SkewDiagram& x) { return q_character(x, m, n); };
    return finish(K(f.U_plus) * K(f.U_minus), K(f.U_zero) * K(f.U) + K(f.X) * K(f.Y));
}

TSystemCheck verify_nonprime_product(const SkewDiagram& d, int m, int n) {
    if (is_prime(d)) throw InvalidArgument(d.to_string() + " is prime");
    TSystemFamily f = tsystem_family_unchecked(d);
    auto K = [&](const SkewDiagram& x) { return q_character(x, m, n); };
    return finish(K(f.U_plus) * K(f.U_minus), K(f.U_zero) * K(f.U));
}

}  // namespace skewchar
