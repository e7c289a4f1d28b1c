#include "skewchar/jacobi_trudi.hpp"

#include <unordered_map>

#include "skewchar/characters.hpp"
#include "skewchar/charpoly_io.hpp"
#include "skewchar/errors.hpp"

namespace skewchar {

std::string JTEntry::to_string() const {
    if (k < 0) return "0";
    if (k == 0) return "1";
    std::string s = std::string(1, kind) + std::to_string(k) + "(u";
    if (shift > 0) s += "+" + skewchar::to_string(shift);
    if (shift < 0) s += skewchar::to_string(shift);
    return s + ")";
}

std::vector<std::vector<JTEntry>> jt_symbols_S(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw ShapeError("mu is not contained in lambda");
    int N = lambda.length();
    std::vector<std::vector<JTEntry>> out(N, std::vector<JTEntry>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            out[i - 1][j - 1] = {'S', lambda.part(i) - mu.part(j) - i + j, Rat(mu.part(j) - j + 1)};
    return out;
}

std::vector<std::vector<JTEntry>> jt_symbols_A(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw ShapeError("mu is not contained in lambda");
    Partition lc = conjugate(lambda), mc = conjugate(mu);
    int N = lambda.part(1);
    std::vector<std::vector<JTEntry>> out(N, std::vector<JTEntry>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            out[i - 1][j - 1] = {'A', lc.part(i) - mc.part(j) - i + j, Rat(-mc.part(j) + j - 1)};
    return out;
}

static PolyMatrix realize(const std::vector<std::vector<JTEntry>>& sym, const Signature& sig) {
    PolyMatrix out;
    for (const auto& row : sym) {
        out.emplace_back();
        for (const auto& e : row)
            out.back().push_back(e.kind == 'S' ? row_character(e.k, e.shift, sig)
                                               : column_character(e.k, e.shift, sig));
    }
    return out;
}

PolyMatrix jt_matrix_S(const Partition& lambda, const Partition& mu, const Signature& sig) {
    return realize(jt_symbols_S(lambda, mu), sig);
}

PolyMatrix jt_matrix_A(const Partition& lambda, const Partition& mu, const Signature& sig) {
    return realize(jt_symbols_A(lambda, mu), sig);
}

CharPoly det(const PolyMatrix& mat, const Signature& sig) {
    const int N = static_cast<int>(mat.size());
    for (const auto& row : mat)
        if (static_cast<int>(row.size()) != N) throw InvalidArgument("matrix is not square");
    if (N == 0) return CharPoly::constant(sig, 1);
    if (N > 24) throw InvalidArgument("determinant too large for subset memoization");
    // minor[mask]: determinant of the last popcount(mask) rows on the columns in mask.
    std::unordered_map<unsigned, CharPoly> memo;
    auto minor = [&](auto&& self, unsigned mask) -> const CharPoly& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int k = __builtin_popcount(mask);
        CharPoly acc(sig);
        if (k == 0) {
            acc = CharPoly::constant(sig, 1);
        } else {
            int row = N - k;
            int sign = 1;
            for (int c = 0; c < N; ++c) {
                if (!(mask & (1u << c))) continue;
                const CharPoly& e = mat[row][c];
                if (!e.is_zero()) {
                    const CharPoly& sub = self(self, mask & ~(1u << c));
                    if (!sub.is_zero()) {
                        CharPoly t = e * sub;
                        if (sign > 0) acc += t;
                        else acc -= t;
                    }
                }
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return minor(minor, (N == 32 ? 0u : (1u << N)) - 1u);
}

JTReport verify_jt(const SkewDiagram& d, int m, int n) {
    Signature sig{m, n};
    JTReport r;
    r.character = q_character(d, m, n);
    Rat w = -d.anchor();
    r.det_S = poly_shift(det(jt_matrix_S(d.lambda(), d.mu(), sig), sig), w);
    r.det_A = poly_shift(det(jt_matrix_A(d.lambda(), d.mu(), sig), sig), w);
    r.s_ok = r.det_S == r.character;
    r.a_ok = r.det_A == r.character;
    for (const CharPoly* dp : {&r.det_S, &r.det_A}) {
        if (*dp == r.character) continue;
        CharPoly diff = *dp - r.character;
        const auto& [mono, c] = *diff.terms().begin();
        r.counterexample = term_to_text(mono, c) + (dp == &r.det_S ? " (S-form)" : " (A-form)");
        break;
    }
    return r;
}

}  // namespace skewchar
