#include "skewchar/bethe.hpp"

#include <map>

#include "skewchar/errors.hpp"

namespace skewchar {

UPoly BetheData::y(int i) const {
    if (i <= 0 || i >= sig.size()) return UPoly(Rat(1));
    return UPoly::from_roots(roots.at(i - 1));
}

void BetheData::validate() const {
    if (sig.m < 0 || sig.n < 0) throw InvalidArgument("negative signature");
    if (static_cast<int>(zeta.size()) != sig.size())
        throw InvalidArgument("expected m+n spectral functions");
    for (const auto& z : zeta)
        if (z.is_zero()) throw ZeroSpectral("spectral function is identically zero");
    if (static_cast<int>(roots.size()) != std::max(sig.size() - 1, 0))
        throw InvalidArgument("expected m+n-1 lists of Bethe roots");
}

namespace {

Rat json_rat(const nlohmann::json& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(Int(std::to_string(v.get<long long>())));
    throw ParseError("expected an exact rational (string \"p/q\" or integer)");
}

UPoly json_poly(const nlohmann::json& v) {
    std::vector<Rat> c;
    for (const auto& x : v) c.push_back(json_rat(x));
    return UPoly(std::move(c));
}

}  // namespace

BetheData bethe_from_json(const nlohmann::json& j) {
    try {
        BetheData d;
        d.sig = Signature{j.at("m").get<int>(), j.at("n").get<int>()};
        for (const auto& z : j.at("zeta")) {
            UPoly num = json_poly(z.at("num"));
            UPoly den = z.contains("den") ? json_poly(z.at("den")) : UPoly(Rat(1));
            if (den.is_zero()) throw ParseError("zero denominator in spectral function");
            d.zeta.emplace_back(num, den);
        }
        for (const auto& r : j.at("roots")) {
            d.roots.emplace_back();
            for (const auto& t : r) d.roots.back().push_back(json_rat(t));
        }
        d.validate();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed Bethe data: ") + e.what());
    }
}

namespace {

// The four factors of the Bethe equation for node i, each reduced.
std::vector<RatFunc> bae_factors(const BetheData& d, int i) {
    const Signature& sig = d.sig;
    if (i < 1 || i >= sig.size()) throw IndexOutOfRange("Bethe node outside 1..m+n-1");
    Rat si(sig.sign(i)), sn(sig.sign(i + 1));
    UPoly ym = d.y(i - 1), y0 = d.y(i), yp = d.y(i + 1);
    return {
        d.zeta[i - 1] / d.zeta[i],
        RatFunc(ym.shifted(si), ym),
        RatFunc(y0.shifted(-si), y0.shifted(sn)),
        RatFunc(yp, yp.shifted(-sn)),
    };
}

}  // namespace

Rat bae_residual(const BetheData& data, int i, int j) {
    data.validate();
    const auto& ts = data.roots.at(i - 1);
    if (j < 1 || j > static_cast<int>(ts.size())) throw IndexOutOfRange("Bethe root index");
    Rat value(1);
    for (const auto& f : bae_factors(data, i)) value *= f.eval(ts[j - 1]);
    return value - 1;
}

bool bae_satisfied(const BetheData& data) {
    for (int i = 1; i < data.sig.size(); ++i)
        for (size_t j = 1; j <= data.roots[i - 1].size(); ++j)
            if (bae_residual(data, i, static_cast<int>(j)) != 0) return false;
    return true;
}

std::complex<double> bae_residual_numeric(const BetheData& data,
                                          const std::vector<std::vector<std::complex<double>>>& roots,
                                          int i, int j) {
    const Signature& sig = data.sig;
    if (i < 1 || i >= sig.size()) throw IndexOutOfRange("Bethe node outside 1..m+n-1");
    using C = std::complex<double>;
    auto y = [&](int k, C x) {
        C acc(1.0);
        if (k <= 0 || k >= sig.size()) return acc;
        for (const auto& t : roots.at(k - 1)) acc *= x - t;
        return acc;
    };
    C t = roots.at(i - 1).at(j - 1);
    double si = sig.sign(i), sn = sig.sign(i + 1);
    C value = data.zeta[i - 1].eval(t) / data.zeta[i].eval(t);
    value *= y(i - 1, t + si) / y(i - 1, t);
    // The node's own root cancels when s_i = -s_{i+1}.
    if (si != -sn) value *= y(i, t - si) / y(i, t + sn);
    value *= y(i + 1, t) / y(i + 1, t - sn);
    return value - 1.0;
}

bool bae_satisfied_numeric(const BetheData& data,
                           const std::vector<std::vector<std::complex<double>>>& roots, double tol) {
    for (int i = 1; i < data.sig.size(); ++i)
        for (size_t j = 1; j <= roots.at(i - 1).size(); ++j)
            if (std::abs(bae_residual_numeric(data, roots, i, static_cast<int>(j))) > tol) return false;
    return true;
}

RatOperator RatOperator::one(int order) {
    if (order < 0) throw InvalidArgument("negative truncation order");
    RatOperator r{order, std::vector<RatFunc>(order + 1, RatFunc())};
    r.coeffs[0] = RatFunc(Rat(1));
    return r;
}

RatOperator rat_op_mul(const RatOperator& a, const RatOperator& b) {
    int N = std::min(a.order, b.order);
    RatOperator out{N, std::vector<RatFunc>(N + 1, RatFunc())};
    for (int i = 0; i <= N; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (b.coeffs[j].is_zero()) continue;
            out.coeffs[i + j] = out.coeffs[i + j] + a.coeffs[i] * b.coeffs[j].shifted(Rat(-i));
        }
    }
    return out;
}

RatOperator rat_op_inv(const RatOperator& a) {
    if (!a.coeffs.at(0).is_one()) throw NotUnitNormalized("constant coefficient must be 1");
    RatOperator b = RatOperator::one(a.order);
    for (int k = 1; k <= a.order; ++k) {
        RatFunc acc;
        for (int j = 1; j <= k; ++j)
            if (!a.coeffs[j].is_zero()) acc = acc + a.coeffs[j] * b.coeffs[k - j].shifted(Rat(-j));
        b.coeffs[k] = -acc;
    }
    return b;
}

RatFunc bethe_spectrum(const BetheData& data, int i) {
    const Signature& sig = data.sig;
    sig.check_index(i);
    Rat s(sig.sign(i));
    UPoly ym = data.y(i - 1), y0 = data.y(i);
    return data.zeta[i - 1] * RatFunc(ym.shifted(s), ym) * RatFunc(y0.shifted(-s), y0);
}

namespace {

// 1 - q X tau for an even index, (1 - q X tau)^{-1} for an odd one.
RatOperator spectral_factor(const RatFunc& X, bool odd, int order) {
    RatOperator f = RatOperator::one(order);
    if (!odd) {
        if (order >= 1) f.coeffs[1] = -X;
        return f;
    }
    for (int k = 1; k <= order; ++k) f.coeffs[k] = f.coeffs[k - 1] * X.shifted(Rat(1 - k));
    return f;
}

}  // namespace

RatOperator build_bethe_operator(const BetheData& data, int order) {
    data.validate();
    RatOperator acc = RatOperator::one(order);
    for (int i = 1; i <= data.sig.size(); ++i)
        acc = rat_op_mul(acc, spectral_factor(bethe_spectrum(data, i), data.sig.odd(i), order));
    return acc;
}

BetheFactors build_factors(const BetheData& data, int order) {
    data.validate();
    BetheFactors f{RatOperator::one(order), RatOperator::one(order)};
    for (int i = 1; i <= data.sig.m; ++i)
        f.D1 = rat_op_mul(f.D1, spectral_factor(bethe_spectrum(data, i), false, order));
    for (int i = data.sig.size(); i > data.sig.m; --i)
        f.D2 = rat_op_mul(f.D2, spectral_factor(bethe_spectrum(data, i), false, order));
    return f;
}

bool verify_factorization(const BetheData& data, int order) {
    RatOperator D = build_bethe_operator(data, order);
    BetheFactors f = build_factors(data, order);
    RatOperator lhs = rat_op_mul(D, f.D2);
    for (int k = 0; k <= order; ++k)
        if (!(lhs.coeffs[k] == f.D1.coeffs[k])) return false;
    return true;
}

RatFunc substitute_spectra(const CharPoly& p, const BetheData& data) {
    if (!(p.signature() == data.sig)) throw SignatureMismatch("polynomial and Bethe data differ");
    std::map<DSymbol, RatFunc> cache;
    std::vector<RatFunc> X;
    for (int i = 1; i <= data.sig.size(); ++i) X.push_back(bethe_spectrum(data, i));
    RatFunc out;
    for (const auto& [mono, c] : p.terms()) {
        RatFunc t{Rat(c)};
        for (const auto& f : mono.factors()) {
            auto it = cache.find(f.sym);
            if (it == cache.end()) it = cache.emplace(f.sym, X[f.sym.index - 1].shifted(f.sym.shift)).first;
            t = t * it->second.pow(f.exp);
        }
        out = out + t;
    }
    return out;
}

RatOperator substitute_operator(const OperatorSeries& s, const BetheData& data) {
    RatOperator out{s.order, {}};
    for (const auto& c : s.coeffs) out.coeffs.push_back(substitute_spectra(c, data));
    return out;
}

}  // namespace skewchar
