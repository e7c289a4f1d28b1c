#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewchar/charpoly.hpp"
#include "skewchar/diagrams.hpp"

namespace skewchar {

using PolyMatrix = std::vector<std::vector<CharPoly>>;

// Symbolic description of one entry: kind 'S' (row) or 'A' (column), index k,
// argument shift w, i.e. S_k(u + w).
struct JTEntry {
    char kind = 'S';
    int k = 0;
    Rat shift;
    std::string to_string() const;  // "S3(u+1)", "0", "1"
};

// Entry (i,j) = S_{lambda_i - mu_j - i + j}(u + mu_j - j + 1), size len(lambda).
std::vector<std::vector<JTEntry>> jt_symbols_S(const Partition& lambda, const Partition& mu);
// Entry (i,j) = A_{lambda'_i - mu'_j - i + j}(u - mu'_j + j - 1), size lambda_1.
std::vector<std::vector<JTEntry>> jt_symbols_A(const Partition& lambda, const Partition& mu);

PolyMatrix jt_matrix_S(const Partition& lambda, const Partition& mu, const Signature& sig);
PolyMatrix jt_matrix_A(const Partition& lambda, const Partition& mu, const Signature& sig);

// Cofactor expansion along rows, memoized over column subsets.
CharPoly det(const PolyMatrix& mat, const Signature& sig);

struct JTReport {
    bool s_ok = false;
    bool a_ok = false;
    CharPoly character;
    CharPoly det_S;
    CharPoly det_A;
    // First monomial on which a determinant and the character disagree.
    std::optional<std::string> counterexample;
    bool ok() const { return s_ok && a_ok; }
};

// Contents follow the diagram's anchor: both determinants are shifted by -anchor.
JTReport verify_jt(const SkewDiagram& d, int m, int n);

}  // namespace skewchar
