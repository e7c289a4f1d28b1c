#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewchar/rational.hpp"
#include "skewchar/upoly.hpp"

namespace skewchar {

// Standard parity for gl(m|n): indices 1..m even, m+1..m+n odd.
struct Signature {
    int m = 0;
    int n = 0;

    int size() const { return m + n; }
    bool odd(int index) const { return index > m; }
    int parity(int index) const { return index > m ? 1 : 0; }
    int sign(int index) const { return index > m ? -1 : 1; }
    // kappa_i = i-1 for even indices, 2m-i for odd ones.
    int kappa(int index) const { return index <= m ? index - 1 : 2 * m - index; }
    void check_index(int index) const;

    friend bool operator==(const Signature&, const Signature&) = default;
};

// D(i,c): placeholder for the variable X_{i,c}; HC-side it is d_i(u+c).
struct DSymbol {
    int index = 1;
    Rat shift;

    friend bool operator==(const DSymbol& a, const DSymbol& b) {
        return a.index == b.index && a.shift == b.shift;
    }
    friend bool operator<(const DSymbol& a, const DSymbol& b) {
        if (a.index != b.index) return a.index < b.index;
        return cmp(a.shift, b.shift) < 0;
    }
};

struct Factor {
    DSymbol sym;
    int exp = 1;

    friend bool operator==(const Factor& a, const Factor& b) {
        return a.exp == b.exp && a.sym == b.sym;
    }
};

// Product of D-symbols with positive exponents plus the Z/2 parity (sum of
// odd exponents). Symbols are interned process-wide, so a factor is a packed
// (symbol id, exponent) word; factors() rebuilds the readable form sorted by
// (index, shift). The parity is stored because it is part of the serialized
// form; it always agrees with the signature used to build the monomial.
class Monomial {
public:
    Monomial() = default;
    static Monomial from_factors(std::vector<Factor> factors, const Signature& sig);
    static Monomial symbol(int index, const Rat& shift, const Signature& sig);
    // Fast path for hot loops: ids from intern(), repeats allowed. The caller
    // supplies the parity.
    static uint32_t intern(int index, const Rat& shift);
    static Monomial from_ids(std::vector<uint32_t> ids, int parity);

    std::vector<Factor> factors() const;
    int parity() const { return parity_; }
    int degree() const { return deg_; }
    bool is_one() const { return f_.empty(); }

    Monomial shifted(const Rat& w) const;
    int exponent(const DSymbol& s) const;
    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.parity_ == b.parity_ && a.f_ == b.f_;
    }
    friend int compare_grlex(const Monomial& a, const Monomial& b);
    friend int compare_canonical(const Monomial& a, const Monomial& b);

private:
    std::vector<uint64_t> f_;  // (id << 32) | exp, ascending id
    int parity_ = 0;
    int deg_ = 0;
};

// Graded lexicographic order on interned symbol ids: a monomial order used
// for storage and exact division. Not stable across processes.
int compare_grlex(const Monomial& a, const Monomial& b);
// Graded lexicographic order with symbols ordered by (index, shift); used for
// every printed or serialized listing.
int compare_canonical(const Monomial& a, const Monomial& b);
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) < 0; }
};

class CharPoly {
public:
    using Terms = std::map<Monomial, Int, MonomialLess>;

    CharPoly() = default;
    explicit CharPoly(const Signature& sig) : sig_(sig) {}
    static CharPoly constant(const Signature& sig, const Int& c);
    static CharPoly monomial(const Signature& sig, const Monomial& mono, const Int& c = 1);
    static CharPoly symbol(const Signature& sig, int index, const Rat& shift);

    const Signature& signature() const { return sig_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Int coeff(const Monomial& m) const;

    // Adds c*m in place; drops the term if it cancels.
    void add_term(const Monomial& m, const Int& c);

    CharPoly& operator+=(const CharPoly& o);
    CharPoly& operator-=(const CharPoly& o);
    friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
    friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a -= b; }
    friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
    CharPoly operator-() const;
    friend bool operator==(const CharPoly& a, const CharPoly& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

private:
    Signature sig_;
    Terms terms_;
};

// Terms sorted by compare_canonical.
std::vector<std::pair<Monomial, Int>> canonical_terms(const CharPoly& p);

CharPoly poly_mul(const CharPoly& a, const CharPoly& b);
// Exact quotient a/b; throws NotDivisible if b does not divide a.
CharPoly poly_div_exact(const CharPoly& a, const CharPoly& b);
// D(i,c) -> D(i,c+w) on every factor.
CharPoly poly_shift(const CharPoly& p, const Rat& w);
// Multiplies each monomial by prod_i s_i^{e_i} (the Harish-Chandra normalization).
CharPoly signed_view(const CharPoly& p);
// Image in rational l-weights: one rational function per index j.
std::vector<RatFunc> eval_lweight(const Monomial& mono, const Signature& sig);

}  // namespace skewchar
