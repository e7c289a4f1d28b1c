#include "skewchar/diffops.hpp"

#include <functional>

#include "skewchar/characters.hpp"
#include "skewchar/charpoly_io.hpp"
#include "skewchar/errors.hpp"

namespace skewchar {

OperatorSeries OperatorSeries::one(const Signature& sig, int order) {
    if (order < 0) throw InvalidArgument("negative truncation order");
    OperatorSeries s{sig, order, std::vector<CharPoly>(order + 1, CharPoly(sig))};
    s.coeffs[0] = CharPoly::constant(sig, 1);
    return s;
}

OperatorSeries op_mul(const OperatorSeries& a, const OperatorSeries& b) {
    if (!(a.sig == b.sig)) throw SignatureMismatch("operator series over different algebras");
    int N = std::min(a.order, b.order);
    OperatorSeries out{a.sig, N, std::vector<CharPoly>(N + 1, CharPoly(a.sig))};
    for (int i = 0; i <= N; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (b.coeffs[j].is_zero()) continue;
            out.coeffs[i + j] += a.coeffs[i] * poly_shift(b.coeffs[j], Rat(-i));
        }
    }
    return out;
}

OperatorSeries op_inv(const OperatorSeries& a) {
    if (!(a.coeffs.at(0) == CharPoly::constant(a.sig, 1)))
        throw NotUnitNormalized("constant coefficient must be 1");
    OperatorSeries b = OperatorSeries::one(a.sig, a.order);
    for (int k = 1; k <= a.order; ++k) {
        CharPoly acc(a.sig);
        for (int j = 1; j <= k; ++j)
            if (!a.coeffs[j].is_zero()) acc += a.coeffs[j] * poly_shift(b.coeffs[k - j], Rat(-j));
        b.coeffs[k] = -acc;
    }
    return b;
}

OperatorSeries hc_berezinian(int m, int n, int order) {
    Signature sig{m, n};
    OperatorSeries acc = OperatorSeries::one(sig, order);
    for (int i = 1; i <= m + n; ++i) {
        OperatorSeries f = OperatorSeries::one(sig, order);
        if (!sig.odd(i)) {
            if (order >= 1) f.coeffs[1] = -CharPoly::symbol(sig, i, Rat(0));
        } else {
            // (1 - q d_i tau)^{-1} = sum_k d_i(u) d_i(u-1) ... d_i(u-k+1) q^k tau^k
            for (int k = 1; k <= order; ++k)
                f.coeffs[k] = f.coeffs[k - 1] * CharPoly::symbol(sig, i, Rat(1 - k));
        }
        acc = op_mul(acc, f);
    }
    return acc;
}

CharPoly hc_transfer(const SkewDiagram& d, int m, int n) { return signed_view(q_character(d, m, n)); }

CharPoly column_hc(int k, const Rat& w, const Signature& sig) {
    return signed_view(column_character(k, w, sig));
}

namespace {

CharPoly hc_at(const SkewDiagram& d, const Signature& sig, long w) {
    return poly_shift(hc_transfer(d, sig.m, sig.n), Rat(w));
}

Ratio make_ratio(CharPoly num, CharPoly den) {
    Ratio r{std::move(num), std::move(den), false, {}};
    try {
        r.quotient = poly_div_exact(r.num, r.den);
        r.exact = true;
    } catch (const NotDivisible&) {
        r.exact = false;
    }
    return r;
}

// Xi^+ / (1^k): the m x (n+1) rectangle with k boxes removed from column 1.
SkewDiagram xi_plus_minus_column(int m, int n, int k) {
    return SkewDiagram(Partition(std::vector<int>(m, n + 1)), Partition(std::vector<int>(k, 1)));
}

// Xi^- / (k): the (m+1) x n rectangle with k boxes removed from row 1.
SkewDiagram xi_minus_minus_row(int m, int n, int k) {
    return SkewDiagram(Partition(std::vector<int>(m + 1, n)), k > 0 ? Partition({k}) : Partition());
}

std::string first_difference(const CharPoly& a, const CharPoly& b) {
    if (a == b) return "";
    CharPoly d = a - b;
    auto terms = canonical_terms(d);
    return "first differing term " + term_to_text(terms.front().first, terms.front().second);
}

CheckResult compare(std::string name, const CharPoly& a, const CharPoly& b) {
    CheckResult c;
    c.name = std::move(name);
    c.ok = a == b;
    c.detail = first_difference(a, b);
    c.terms = a.size();
    return c;
}

CheckResult exactness(const std::string& name, const Ratio& r) {
    CheckResult c;
    c.name = name + " exact quotient";
    c.ok = r.exact;
    if (!r.exact) c.detail = "denominator does not divide numerator";
    c.terms = r.exact ? r.quotient.size() : r.num.size();
    return c;
}

// sum over j_1 < ... < j_k in [lo, hi] of prod D(j_a, shift(a)).
CharPoly strict_sum(const Signature& sig, int k, int lo, int hi, const std::function<Rat(int)>& shift) {
    CharPoly out(sig);
    std::vector<int> js;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(js.size()) == k) {
            std::vector<Factor> fs;
            for (int a = 1; a <= k; ++a) fs.push_back(Factor{DSymbol{js[a - 1], shift(a)}, 1});
            out.add_term(Monomial::from_factors(fs, sig), 1);
            return;
        }
        for (int j = next; j <= hi; ++j) {
            js.push_back(j);
            rec(j + 1);
            js.pop_back();
        }
    };
    rec(lo);
    return out;
}

}  // namespace

RatioCoefficients ratio_coefficients(int m, int n) {
    if (m < 0 || n < 0) throw InvalidArgument("negative signature");
    Signature sig{m, n};
    SkewDiagram xi = rectangle(m, n);
    RatioCoefficients rc;
    rc.E.resize(m + 1);
    rc.Ebar.resize(m + 1);
    rc.G.resize(n + 1);
    rc.Gbar.resize(n + 1);
    for (int i = 1; i <= m; ++i) {
        rc.E[i] = make_ratio(hc_at(xi_plus_minus_column(m, n, m - i), sig, m - i),
                             hc_at(xi, sig, m + 1 - i));
        rc.Ebar[i] = make_ratio(hc_at(build_upsilon(UpsilonKind::Minus, i, m, n), sig, -n),
                                hc_at(xi, sig, -n));
    }
    for (int i = 1; i <= n; ++i) {
        rc.G[i] = make_ratio(hc_at(build_upsilon(UpsilonKind::Plus, i, m, n), sig, m + 1 - i),
                             hc_at(xi, sig, m + 1 - i));
        rc.Gbar[i] = make_ratio(hc_at(xi_minus_minus_row(m, n, n - i), sig, 1 - n),
                                hc_at(xi, sig, -n));
    }
    return rc;
}

bool RatioReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return !checks.empty();
}

RatioReport verify_ratio(int m, int n, int order) {
    if (m < 0 || n < 0) throw InvalidArgument("negative signature");
    if (order < m + n + 2) throw InvalidArgument("order must be at least m+n+2");
    Signature sig{m, n};
    RatioReport rep;
    RatioCoefficients rc = ratio_coefficients(m, n);
    OperatorSeries D = hc_berezinian(m, n, order);

    for (int i = 1; i <= m; ++i)
        rep.checks.push_back(exactness("E_" + std::to_string(i), rc.E[i]));
    for (int i = 1; i <= n; ++i)
        rep.checks.push_back(exactness("G_" + std::to_string(i), rc.G[i]));
    if (!rep.ok() && !rep.checks.empty()) return rep;

    // Closed forms of the quotients.
    for (int i = 1; i <= m; ++i)
        rep.checks.push_back(compare("E_" + std::to_string(i) + " closed form", rc.E[i].quotient,
                                     strict_sum(sig, i, 1, m, [](int a) { return Rat(1 - a); })));
    for (int i = 1; i <= n; ++i) {
        CharPoly g = strict_sum(sig, i, m + 1, m + n, [i](int a) { return Rat(a - i); });
        if (i % 2) g = -g;
        rep.checks.push_back(compare("G_" + std::to_string(i) + " closed form", rc.G[i].quotient, g));
    }

    // D * (1 + sum G_j tau^j) = 1 + sum (-1)^i E_i tau^i.
    OperatorSeries Gs = OperatorSeries::one(sig, order), Es = OperatorSeries::one(sig, order);
    for (int j = 1; j <= n && j <= order; ++j) Gs.coeffs[j] = rc.G[j].quotient;
    for (int i = 1; i <= m && i <= order; ++i) Es.coeffs[i] = i % 2 ? -rc.E[i].quotient : rc.E[i].quotient;
    OperatorSeries lhs = op_mul(D, Gs);
    for (int k = 0; k <= order; ++k)
        rep.checks.push_back(compare("first decomposition, order " + std::to_string(k), lhs[k], Es[k]));

    // (1 + sum Gbar_j tau^j) D = 1 + sum (-1)^i Ebar_i tau^i, multiplied on the
    // left by the common denominator K_Xi(u-n).
    CharPoly den = hc_at(rectangle(m, n), sig, -n);
    for (int K = 0; K <= order; ++K) {
        CharPoly l(sig);
        for (int j = 0; j <= std::min(K, n); ++j) {
            const CharPoly& nj = j == 0 ? den : rc.Gbar[j].num;
            l += nj * poly_shift(D[K - j], Rat(-j));
        }
        CharPoly r(sig);
        if (K == 0) r = den;
        else if (K <= m) r = K % 2 ? -rc.Ebar[K].num : rc.Ebar[K].num;
        rep.checks.push_back(compare("second decomposition, order " + std::to_string(K), l, r));
    }

    // Recursions through column characters T^k(u).
    for (int i = 1; i <= order; ++i) {
        CharPoly acc(sig);
        for (int a = 0; a <= std::min(i, n); ++a) {
            CharPoly g = a == 0 ? CharPoly::constant(sig, 1) : poly_shift(rc.G[a].quotient, Rat(a - i));
            CharPoly t = column_hc(i - a, Rat(0), sig) * g;
            if (a % 2) acc -= t;
            else acc += t;
        }
        CharPoly expect = i <= m ? rc.E[i].quotient : CharPoly(sig);
        rep.checks.push_back(compare(std::string(i <= m ? "recursion for E_" : "vanishing recursion, i=") +
                                         std::to_string(i), acc, expect));
    }
    return rep;
}

CheckResult verify_center_ratio(int m, int n) {
    if (m < 0 || n < 0) throw InvalidArgument("negative signature");
    Signature sig{m, n};
    CharPoly even = CharPoly::constant(sig, 1), odd = CharPoly::constant(sig, 1);
    for (int i = 1; i <= m + n; ++i) {
        CharPoly d = CharPoly::symbol(sig, i, Rat(-sig.kappa(i)));
        if (sig.odd(i)) odd = odd * d;
        else even = even * d;
    }
    CharPoly lhs = even * poly_shift(hc_transfer(rectangle(m + 1, n), m, n), Rat(1));
    CharPoly rhs = odd * hc_transfer(rectangle(m, n + 1), m, n);
    if (n % 2) rhs = -rhs;
    return compare("center ratio gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", lhs, rhs);
}

}  // namespace skewchar
