#pragma once

#include <string>
#include <vector>

#include "skewchar/charpoly.hpp"
#include "skewchar/diagrams.hpp"

namespace skewchar {

// Truncated series sum_k coeffs[k] q^k tau^k with tau f(u) = f(u-1) tau.
// Coefficients live on the Harish-Chandra side: D(i,c) stands for d_i(u+c).
struct OperatorSeries {
    Signature sig;
    int order = 0;
    std::vector<CharPoly> coeffs;  // size order+1

    static OperatorSeries one(const Signature& sig, int order);
    const CharPoly& operator[](int k) const { return coeffs.at(k); }
};

// (A B)_k = sum_{i+j=k} A_i shift(B_j, -i); truncates at the smaller order.
OperatorSeries op_mul(const OperatorSeries& a, const OperatorSeries& b);
// Requires a_0 = 1 (NotUnitNormalized otherwise).
OperatorSeries op_inv(const OperatorSeries& a);

// Ordered product over i = 1..m+n of (1 - q d_i(u) tau)^{s_i}.
OperatorSeries hc_berezinian(int m, int n, int order);
// Harish-Chandra image of the transfer matrix of d.
CharPoly hc_transfer(const SkewDiagram& d, int m, int n);

// num / den; `exact` is set when den divides num.
struct Ratio {
    CharPoly num;
    CharPoly den;
    bool exact = false;
    CharPoly quotient;
};

struct RatioCoefficients {
    std::vector<Ratio> E;     // i = 1..m  (index 0 unused)
    std::vector<Ratio> G;     // i = 1..n
    std::vector<Ratio> Ebar;  // i = 1..m
    std::vector<Ratio> Gbar;  // i = 1..n
};

RatioCoefficients ratio_coefficients(int m, int n);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
    size_t terms = 0;  // terms on the left-hand side
};

struct RatioReport {
    std::vector<CheckResult> checks;
    bool ok() const;
};

// Both decompositions of the Berezinian series to the given order, and the
// recursions expressing E_i through column characters and G_a.
RatioReport verify_ratio(int m, int n, int order);
// Cross-multiplied identity for the ratio expression of the central series.
CheckResult verify_center_ratio(int m, int n);

// (-1)^k q^k tau^k coefficient of the Berezinian: signed column character.
CharPoly column_hc(int k, const Rat& w, const Signature& sig);

}  // namespace skewchar
