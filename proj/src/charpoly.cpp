#include "skewchar/charpoly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "skewchar/errors.hpp"

namespace skewchar {

void Signature::check_index(int index) const {
    if (m < 0 || n < 0) throw InvalidArgument("negative signature");
    if (index < 1 || index > m + n)
        throw IndexOutOfRange("index " + std::to_string(index) + " outside 1.." +
                              std::to_string(m + n));
}

namespace {

// Process-wide interning of (index, shift) pairs. Ids are handed out in
// first-seen order; nothing observable depends on that order.
class SymbolTable {
public:
    static SymbolTable& get() {
        static SymbolTable table;
        return table;
    }

    uint32_t intern(int index, const Rat& shift) {
        DSymbol key{index, shift};
        {
            std::shared_lock lock(mu_);
            auto it = ids_.find(key);
            if (it != ids_.end()) return it->second;
        }
        std::unique_lock lock(mu_);
        auto [it, inserted] = ids_.try_emplace(key, static_cast<uint32_t>(syms_.size()));
        if (inserted) syms_.push_back(key);
        return it->second;
    }

    DSymbol lookup(uint32_t id) {
        std::shared_lock lock(mu_);
        return syms_[id];
    }

private:
    std::shared_mutex mu_;
    std::map<DSymbol, uint32_t> ids_;
    std::deque<DSymbol> syms_;
};

inline uint32_t id_of(uint64_t w) { return static_cast<uint32_t>(w >> 32); }
inline int exp_of(uint64_t w) { return static_cast<int>(w & 0xffffffffu); }
inline uint64_t pack(uint32_t id, int e) { return (static_cast<uint64_t>(id) << 32) | static_cast<uint32_t>(e); }

}  // namespace

Monomial Monomial::from_factors(std::vector<Factor> factors, const Signature& sig) {
    Monomial out;
    int par = 0;
    for (const auto& f : factors) {
        sig.check_index(f.sym.index);
        if (f.exp < 0) throw InvalidArgument("negative exponent in monomial");
        if (f.exp == 0) continue;
        out.f_.push_back(pack(SymbolTable::get().intern(f.sym.index, f.sym.shift), f.exp));
        par += sig.parity(f.sym.index) * f.exp;
        out.deg_ += f.exp;
    }
    std::sort(out.f_.begin(), out.f_.end());
    // Merge repeated symbols.
    size_t w = 0;
    for (size_t r = 0; r < out.f_.size(); ++r) {
        if (w > 0 && id_of(out.f_[w - 1]) == id_of(out.f_[r]))
            out.f_[w - 1] = pack(id_of(out.f_[r]), exp_of(out.f_[w - 1]) + exp_of(out.f_[r]));
        else
            out.f_[w++] = out.f_[r];
    }
    out.f_.resize(w);
    out.parity_ = par & 1;
    return out;
}

Monomial Monomial::symbol(int index, const Rat& shift, const Signature& sig) {
    return from_factors({Factor{DSymbol{index, shift}, 1}}, sig);
}

uint32_t Monomial::intern(int index, const Rat& shift) {
    return SymbolTable::get().intern(index, shift);
}

Monomial Monomial::from_ids(std::vector<uint32_t> ids, int parity) {
    std::sort(ids.begin(), ids.end());
    Monomial out;
    out.f_.reserve(ids.size());
    for (uint32_t id : ids) {
        if (!out.f_.empty() && id_of(out.f_.back()) == id)
            out.f_.back() = pack(id, exp_of(out.f_.back()) + 1);
        else
            out.f_.push_back(pack(id, 1));
    }
    out.deg_ = static_cast<int>(ids.size());
    out.parity_ = parity & 1;
    return out;
}

std::vector<Factor> Monomial::factors() const {
    std::vector<Factor> out;
    out.reserve(f_.size());
    for (uint64_t w : f_) out.push_back(Factor{SymbolTable::get().lookup(id_of(w)), exp_of(w)});
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.sym < b.sym; });
    return out;
}

Monomial Monomial::shifted(const Rat& w) const {
    if (w == 0) return *this;
    Monomial out(*this);
    auto& table = SymbolTable::get();
    for (auto& x : out.f_) {
        DSymbol s = table.lookup(id_of(x));
        x = pack(table.intern(s.index, s.shift + w), exp_of(x));
    }
    std::sort(out.f_.begin(), out.f_.end());
    return out;
}

int Monomial::exponent(const DSymbol& s) const {
    uint32_t id = SymbolTable::get().intern(s.index, s.shift);
    for (uint64_t w : f_)
        if (id_of(w) == id) return exp_of(w);
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    size_t j = 0;
    for (uint64_t w : f_) {
        uint32_t id = id_of(w);
        while (j < other.f_.size() && id_of(other.f_[j]) < id) ++j;
        if (j == other.f_.size() || id_of(other.f_[j]) != id || exp_of(other.f_[j]) < exp_of(w))
            return false;
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.f_.reserve(a.f_.size() + b.f_.size());
    size_t i = 0, j = 0;
    while (i < a.f_.size() && j < b.f_.size()) {
        uint32_t ia = id_of(a.f_[i]), ib = id_of(b.f_[j]);
        if (ia < ib) {
            out.f_.push_back(a.f_[i++]);
        } else if (ib < ia) {
            out.f_.push_back(b.f_[j++]);
        } else {
            out.f_.push_back(pack(ia, exp_of(a.f_[i]) + exp_of(b.f_[j])));
            ++i;
            ++j;
        }
    }
    out.f_.insert(out.f_.end(), a.f_.begin() + i, a.f_.end());
    out.f_.insert(out.f_.end(), b.f_.begin() + j, b.f_.end());
    out.parity_ = (a.parity_ + b.parity_) & 1;
    out.deg_ = a.deg_ + b.deg_;
    return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t j = 0;
    for (uint64_t w : a.f_) {
        int e = exp_of(w);
        if (j < b.f_.size() && id_of(b.f_[j]) == id_of(w)) e -= exp_of(b.f_[j++]);
        if (e < 0) throw NotDivisible("monomial quotient with negative exponent");
        if (e > 0) out.f_.push_back(pack(id_of(w), e));
    }
    if (j != b.f_.size()) throw NotDivisible("monomial does not divide");
    out.parity_ = (a.parity_ + b.parity_) & 1;
    out.deg_ = a.deg_ - b.deg_;
    return out;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
    size_t n = std::min(a.f_.size(), b.f_.size());
    for (size_t k = 0; k < n; ++k) {
        uint64_t x = a.f_[k], y = b.f_[k];
        if (x == y) continue;
        // The smaller symbol occurs only in one of them: that one is larger.
        if (id_of(x) != id_of(y)) return id_of(x) < id_of(y) ? 1 : -1;
        return exp_of(x) < exp_of(y) ? -1 : 1;
    }
    if (a.f_.size() != b.f_.size()) return a.f_.size() < b.f_.size() ? -1 : 1;
    return 0;
}

int compare_canonical(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
    auto fa = a.factors(), fb = b.factors();
    size_t n = std::min(fa.size(), fb.size());
    for (size_t k = 0; k < n; ++k) {
        if (!(fa[k].sym == fb[k].sym)) return fa[k].sym < fb[k].sym ? 1 : -1;
        if (fa[k].exp != fb[k].exp) return fa[k].exp < fb[k].exp ? -1 : 1;
    }
    if (fa.size() != fb.size()) return fa.size() < fb.size() ? -1 : 1;
    return 0;
}

std::vector<std::pair<Monomial, Int>> canonical_terms(const CharPoly& p) {
    std::vector<std::pair<Monomial, Int>> out(p.terms().begin(), p.terms().end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return compare_canonical(x.first, y.first) < 0;
    });
    return out;
}

CharPoly CharPoly::constant(const Signature& sig, const Int& c) {
    CharPoly p(sig);
    p.add_term(Monomial(), c);
    return p;
}

CharPoly CharPoly::monomial(const Signature& sig, const Monomial& mono, const Int& c) {
    CharPoly p(sig);
    p.add_term(mono, c);
    return p;
}

CharPoly CharPoly::symbol(const Signature& sig, int index, const Rat& shift) {
    return monomial(sig, Monomial::symbol(index, shift, sig));
}

Int CharPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void CharPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void require_same(const Signature& a, const Signature& b) {
    if (!(a == b))
        throw SignatureMismatch("gl(" + std::to_string(a.m) + "|" + std::to_string(a.n) +
                                ") vs gl(" + std::to_string(b.m) + "|" + std::to_string(b.n) + ")");
}

CharPoly& CharPoly::operator+=(const CharPoly& o) {
    require_same(sig_, o.sig_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CharPoly& CharPoly::operator-=(const CharPoly& o) {
    require_same(sig_, o.sig_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CharPoly CharPoly::operator-() const {
    CharPoly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    require_same(a.sig_, b.sig_);
    CharPoly out(a.sig_);
    if (a.is_zero() || b.is_zero()) return out;
    // Collect all products, sort once, then merge equal monomials.
    std::vector<std::pair<Monomial, Int>> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
    std::sort(prods.begin(), prods.end(),
              [](const auto& x, const auto& y) { return compare_grlex(x.first, y.first) < 0; });
    for (size_t k = 0; k < prods.size();) {
        size_t e = k + 1;
        Int c = std::move(prods[k].second);
        while (e < prods.size() && prods[e].first == prods[k].first) c += prods[e++].second;
        if (c != 0) out.terms_.emplace_hint(out.terms_.end(), std::move(prods[k].first), std::move(c));
        k = e;
    }
    return out;
}

CharPoly poly_mul(const CharPoly& a, const CharPoly& b) { return a * b; }

CharPoly poly_div_exact(const CharPoly& a, const CharPoly& b) {
    require_same(a.signature(), b.signature());
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    CharPoly q(a.signature());
    CharPoly r(a);
    const auto& [lm_b, lc_b] = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& [lm_r, lc_r] = *r.terms().rbegin();
        if (!lm_b.divides(lm_r) || !mpz_divisible_p(lc_r.get_mpz_t(), lc_b.get_mpz_t()))
            throw NotDivisible("leading term of remainder is not divisible");
        Monomial t = lm_r / lm_b;
        Int c = lc_r / lc_b;
        q.add_term(t, c);
        for (const auto& [mb, cb] : b.terms()) r.add_term(t * mb, -c * cb);
    }
    return q;
}

CharPoly poly_shift(const CharPoly& p, const Rat& w) {
    if (w == 0) return p;
    CharPoly out(p.signature());
    for (const auto& [m, c] : p.terms()) out.add_term(m.shifted(w), c);
    return out;
}

CharPoly signed_view(const CharPoly& p) {
    CharPoly out(p.signature());
    for (const auto& [m, c] : p.terms()) out.add_term(m, m.parity() ? Int(-c) : c);
    return out;
}

std::vector<RatFunc> eval_lweight(const Monomial& mono, const Signature& sig) {
    std::vector<RatFunc> comps(sig.size(), RatFunc(Rat(1)));
    for (const auto& f : mono.factors()) {
        int i = f.sym.index;
        sig.check_index(i);
        // Component i of X_{i,a}: (1 + 1/(u + a + kappa_i))^{s_i}.
        Rat a = f.sym.shift + sig.kappa(i);
        RatFunc base(UPoly::linear(a + 1), UPoly::linear(a));
        comps[i - 1] = comps[i - 1] * base.pow(sig.sign(i) * f.exp);
    }
    return comps;
}

}  // namespace skewchar
