#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewchar/charpoly.hpp"
#include "skewchar/diffops.hpp"
#include "skewchar/upoly.hpp"

namespace skewchar {

// Spectral data zeta_1..zeta_{m+n} and Bethe roots t^{(i)}_j for i = 1..m+n-1.
struct BetheData {
    Signature sig;
    std::vector<RatFunc> zeta;
    std::vector<std::vector<Rat>> roots;

    // y_i(u) = prod_j (u - t^{(i)}_j); y_0 = y_{m+n} = 1.
    UPoly y(int i) const;
    void validate() const;
};

BetheData bethe_from_json(const nlohmann::json& j);

// Left-hand side of the Bethe equation at t^{(i)}_j, minus one.
// Throws PoleAtRoot when a reduced factor has a pole at the root.
Rat bae_residual(const BetheData& data, int i, int j);
bool bae_satisfied(const BetheData& data);

// Floating-point variant for complex roots (spectral data stays exact).
std::complex<double> bae_residual_numeric(const BetheData& data,
                                          const std::vector<std::vector<std::complex<double>>>& roots,
                                          int i, int j);
bool bae_satisfied_numeric(const BetheData& data,
                           const std::vector<std::vector<std::complex<double>>>& roots,
                           double tol = 1e-9);

// Truncated series over Q(u) with tau f(u) = f(u-1) tau.
struct RatOperator {
    int order = 0;
    std::vector<RatFunc> coeffs;

    static RatOperator one(int order);
};

RatOperator rat_op_mul(const RatOperator& a, const RatOperator& b);
RatOperator rat_op_inv(const RatOperator& a);

// X_i(u) = zeta_i(u) y_{i-1}(u+s_i) y_i(u-s_i) / (y_{i-1}(u) y_i(u)).
RatFunc bethe_spectrum(const BetheData& data, int i);
// Ordered product of (1 - q X_i(u) tau)^{s_i}.
RatOperator build_bethe_operator(const BetheData& data, int order);

struct BetheFactors {
    RatOperator D1;  // increasing product over even indices
    RatOperator D2;  // decreasing product over odd indices
};
BetheFactors build_factors(const BetheData& data, int order);
// D * D2 = D1 to the given order.
bool verify_factorization(const BetheData& data, int order);

// D(i,c) -> X_i(u + c); p is in the signed (Harish-Chandra) normalization.
RatFunc substitute_spectra(const CharPoly& p, const BetheData& data);
RatOperator substitute_operator(const OperatorSeries& s, const BetheData& data);

}  // namespace skewchar
