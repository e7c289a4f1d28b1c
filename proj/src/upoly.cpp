#include "skewchar/upoly.hpp"

#include <sstream>

#include "skewchar/errors.hpp"

namespace skewchar {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

UPoly UPoly::variable() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

UPoly UPoly::linear(const Rat& a) { return UPoly(std::vector<Rat>{a, Rat(1)}); }

UPoly UPoly::from_roots(const std::vector<Rat>& roots) {
    UPoly p(Rat(1));
    for (const auto& r : roots) p = p * linear(-r);
    return p;
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rat(0);
    return c_[k];
}

Rat UPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat UPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> UPoly::eval(std::complex<double> x) const {
    std::complex<double> acc(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

UPoly UPoly::shifted(const Rat& a) const {
    if (a == 0 || c_.size() <= 1) return *this;
    // Horner in the basis (u + a).
    std::vector<Rat> out(c_.size(), Rat(0));
    for (int k = degree(); k >= 0; --k) {
        for (int j = degree(); j >= 1; --j) out[j] = out[j] * a + out[j - 1];
        out[0] = out[0] * a + c_[k];
    }
    return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    Rat lc = c_.back();
    if (lc == 1) return *this;
    std::vector<Rat> out(c_);
    for (auto& x : out) x /= lc;
    return UPoly(std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
    std::vector<Rat> out(c_);
    for (auto& x : out) x = -x;
    return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    std::vector<Rat> rem(a.c_);
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) {
        q = UPoly();
        r = a;
        return;
    }
    std::vector<Rat> quo(dq + 1, Rat(0));
    Rat lb = b.leading();
    for (int k = dq; k >= 0; --k) {
        Rat t = rem[k + db] / lb;
        quo[k] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= t * b.c_[j];
    }
    rem.resize(db);
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        UPoly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x;
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = c_[k];
        if (c == 0) continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << skewchar::to_string(mag);
            if (k > 0) os << "*";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

RatFunc::RatFunc(const UPoly& num, const UPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UPoly(Rat(1));
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        UPoly q, r;
        UPoly::divmod(num_, g, q, r);
        num_ = q;
        UPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rat lc = den_.leading();
    if (lc != 1) {
        num_ = num_ * UPoly(1 / lc);
        den_ = den_.monic();
    }
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw PoleAtRoot("denominator vanishes at " + skewchar::to_string(x));
    return num_.eval(x) / d;
}

std::complex<double> RatFunc::eval(std::complex<double> x) const {
    return num_.eval(x) / den_.eval(x);
}

RatFunc RatFunc::shifted(const Rat& a) const {
    RatFunc out;
    out.num_ = num_.shifted(a);
    out.den_ = den_.shifted(a);
    return out;  // shifting preserves coprimality and monicity
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw InvalidArgument("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc out(Rat(1)), base(*this);
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

RatFunc RatFunc::operator-() const {
    RatFunc out(*this);
    out.num_ = -num_;
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel first so the final reduction works on smaller operands.
    UPoly g1 = UPoly::gcd(a.num_, b.den_);
    UPoly g2 = UPoly::gcd(b.num_, a.den_);
    UPoly an, bd, bn, ad, r;
    UPoly::divmod(a.num_, g1, an, r);
    UPoly::divmod(b.den_, g1, bd, r);
    UPoly::divmod(b.num_, g2, bn, r);
    UPoly::divmod(a.den_, g2, ad, r);
    RatFunc out;
    out.num_ = an * bn;
    out.den_ = ad * bd;
    Rat lc = out.den_.leading();
    if (lc != 1) {
        out.num_ = out.num_ * UPoly(1 / lc);
        out.den_ = out.den_.monic();
    }
    return out;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace skewchar
