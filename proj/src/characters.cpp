#include "skewchar/characters.hpp"

#include "skewchar/errors.hpp"

namespace skewchar {

CharPoly restricted_character(const SkewDiagram& d, int m, int n, EntryRange range) {
    Signature sig{m, n};
    CharPoly out(sig);
    auto boxes = d.boxes();
    // ids[k][e]: interned D(e, c(box k)).
    std::vector<std::vector<uint32_t>> ids(boxes.size(), std::vector<uint32_t>(m + n + 1));
    for (size_t k = 0; k < boxes.size(); ++k)
        for (int e = 1; e <= m + n; ++e) ids[k][e] = Monomial::intern(e, d.content(boxes[k]));
    std::vector<uint32_t> word(boxes.size());
    for_each_ssyt(d, m, n, [&](const Tableau& t) {
        int parity = 0;
        for (size_t k = 0; k < boxes.size(); ++k) {
            word[k] = ids[k][t.entries[k]];
            parity += sig.parity(t.entries[k]);
        }
        out.add_term(Monomial::from_ids(word, parity), 1);
        return true;
    }, range);
    return out;
}

CharPoly q_character(const SkewDiagram& d, int m, int n) {
    return restricted_character(d, m, n, EntryRange{});
}

CharPoly row_character(int k, const Rat& w, const Signature& sig) {
    if (k < 0) return CharPoly(sig);
    if (k == 0) return CharPoly::constant(sig, 1);
    return q_character(SkewDiagram(Partition({k}), {}, -w), sig.m, sig.n);
}

CharPoly column_character(int k, const Rat& w, const Signature& sig) {
    if (k < 0) return CharPoly(sig);
    if (k == 0) return CharPoly::constant(sig, 1);
    return q_character(SkewDiagram(Partition(std::vector<int>(k, 1)), {}, -w), sig.m, sig.n);
}

namespace {

DivisibilityReport divide_by_xi(const SkewDiagram& glued, const SkewDiagram& part, int m, int n,
                                EntryRange range) {
    DivisibilityReport r;
    r.diagram = glued;
    CharPoly whole = q_character(glued, m, n);
    CharPoly xi = q_character(rectangle(m, n), m, n);
    r.quotient = poly_div_exact(whole, xi);
    r.expected = restricted_character(part, m, n, range);
    r.ok = r.quotient == r.expected;
    return r;
}

}  // namespace

DivisibilityReport check_divisibility_W(const Partition& lambda, int m, int n) {
    SkewDiagram w = build_W(lambda, m, n);
    // lambda^- sits with its bottom-right box at content -m.
    SkewDiagram part = rotate180(lambda).shifted(Rat(-m));
    return divide_by_xi(w, part, m, n, EntryRange{1, m});
}

DivisibilityReport check_divisibility_S(const Partition& mu, int m, int n) {
    SkewDiagram s = build_S(mu, m, n);
    SkewDiagram part = SkewDiagram(mu, {}, Rat(0)).shifted(Rat(-m));
    return divide_by_xi(s, part, m, n, EntryRange{m + 1, m + n});
}

RatFunc central_eigenvalue(const Monomial& mono, const Signature& sig) {
    auto zeta = eval_lweight(mono, sig);
    RatFunc out(Rat(1));
    for (int j = 1; j <= sig.size(); ++j)
        out = out * zeta[j - 1].shifted(Rat(-sig.kappa(j))).pow(sig.sign(j));
    return out;
}

RatFunc box_product(const SkewDiagram& d) {
    RatFunc out(Rat(1));
    for (const auto& b : d.boxes()) {
        Rat c = d.content(b);
        out = out * RatFunc(UPoly::linear(c + 1), UPoly::linear(c));
    }
    return out;
}

RatFunc central_eigenvalue(const CharPoly& p, const SkewDiagram& d) {
    RatFunc expected = box_product(d);
    for (const auto& [mono, c] : p.terms()) {
        if (!(central_eigenvalue(mono, p.signature()) == expected))
            throw MonomialMismatch("monomial gives a different central value");
    }
    return expected;
}

GlWeight weight_of(const Monomial& mono, const Signature& sig) {
    GlWeight w;
    w.coords.assign(sig.size(), Rat(0));
    for (const auto& f : mono.factors()) {
        sig.check_index(f.sym.index);
        w.coords[f.sym.index - 1] += f.exp;
    }
    return w;
}

bool weight_geq(const GlWeight& a, const GlWeight& b) {
    if (a.coords.size() != b.coords.size()) throw InvalidArgument("weights of different rank");
    Rat partial(0);
    for (size_t k = 0; k < a.coords.size(); ++k) {
        partial += a.coords[k] - b.coords[k];
        if (!is_integer(partial) || partial < 0) return false;
    }
    return partial == 0;
}

Monomial leading_monomial(const CharPoly& p) {
    if (p.is_zero()) throw NoUniqueLeading("zero polynomial");
    const Signature& sig = p.signature();
    std::vector<std::pair<const Monomial*, GlWeight>> ws;
    for (const auto& [m, c] : p.terms()) ws.push_back({&m, weight_of(m, sig)});
    const Monomial* found = nullptr;
    for (const auto& [m, w] : ws) {
        bool top = true;
        for (const auto& [m2, w2] : ws)
            if (m2 != m && !weight_geq(w, w2)) {
                top = false;
                break;
            }
        if (!top) continue;
        // Another monomial of the same weight also dominates everything.
        if (found) throw NoUniqueLeading("maximal weight is attained by several monomials");
        found = m;
    }
    if (!found) throw NoUniqueLeading("no monomial dominates all others");
    return *found;
}

}  // namespace skewchar
