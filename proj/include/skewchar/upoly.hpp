#pragma once

#include <complex>
#include <string>
#include <vector>

#include "skewchar/rational.hpp"

namespace skewchar {

// Dense univariate polynomial in u over Q, coefficients low to high, no
// trailing zeros (the zero polynomial has no coefficients).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs);
    UPoly(const Rat& c);  // NOLINT: constants convert implicitly

    static UPoly variable();                       // u
    static UPoly linear(const Rat& a);             // u + a
    static UPoly from_roots(const std::vector<Rat>& roots);  // prod (u - r)

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;
    Rat leading() const;

    Rat eval(const Rat& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    UPoly shifted(const Rat& a) const;  // p(u + a)
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    static UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0)=0

    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Reduced fraction num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
    RatFunc(const UPoly& p) : num_(p), den_(Rat(1)) {}  // NOLINT
    RatFunc(const UPoly& num, const UPoly& den);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    // Throws PoleAtRoot when the reduced denominator vanishes at x.
    Rat eval(const Rat& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    RatFunc shifted(const Rat& a) const;  // f(u + a)
    RatFunc pow(int e) const;
    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "u") const;

private:
    void reduce();
    UPoly num_, den_;
};

}  // namespace skewchar
