#pragma once

#include <string>

#include "skewchar/charpoly.hpp"
#include "skewchar/diagrams.hpp"

namespace skewchar {

// T_j^{(i)}(u + w): character of the i x j rectangle with upper-left content
// w + (i - j + 1)/2. Zero for i < 0, j < 0 or (i > m and j > n); one when ij = 0.
CharPoly classical_T(int i, int j, const Rat& w, int m, int n);

struct TSystemCheck {
    bool ok = false;
    CharPoly lhs;
    CharPoly rhs;
    std::string detail;
};

// T(u - 1/2) T(u + 1/2) = T_{j-1} T_{j+1} + T^{(i-1)} T^{(i+1)} at (i, j) != (0, 0).
TSystemCheck verify_classical_tsystem(int i, int j, int m, int n);
// K_{U+} K_{U-} = K_{U0} K_U + K_X K_Y for a prime diagram with >= 2 columns.
TSystemCheck verify_extended_tsystem(const SkewDiagram& d, int m, int n);
// K_{U+} K_{U-} = K_{U0} K_U for a non-prime diagram with consecutive columns.
TSystemCheck verify_nonprime_product(const SkewDiagram& d, int m, int n);

}  // namespace skewchar
