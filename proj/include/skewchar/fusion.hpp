#pragma once

#include <map>
#include <utility>
#include <vector>

#include "skewchar/charpoly.hpp"
#include "skewchar/tableaux.hpp"

namespace skewchar {

// Operator on (C^{m|n})^{(x)l}, stored as sparse rows. Basis vectors are
// words (a_1..a_l) with a_k in 1..m+n, slot 1 most significant.
class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(const Signature& sig, int l);
    static SuperMatrix identity(const Signature& sig, int l);

    const Signature& signature() const { return sig_; }
    int tensor_power() const { return l_; }
    size_t dim() const { return dim_; }

    std::vector<int> word(size_t index) const;
    size_t index(const std::vector<int>& word) const;
    int word_parity(size_t index) const;

    const std::map<size_t, Rat>& row(size_t r) const { return rows_[r]; }
    Rat at(size_t r, size_t c) const;
    void add(size_t r, size_t c, const Rat& v);

    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator*(const Rat& s, const SuperMatrix& a);
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);
    bool is_zero() const;

private:
    Signature sig_;
    int l_ = 0;
    size_t dim_ = 1;
    std::vector<std::map<size_t, Rat>> rows_;
};

// Graded permutation: the factor in slot k moves to slot perm[k-1]
// (perm lists images of 1..l), with the Koszul sign.
SuperMatrix permutation_operator(const Signature& sig, int l, const std::vector<int>& perm);
// v_a (x) v_b -> (-1)^{|a||b|} v_b (x) v_a in slots pos, pos+1.
SuperMatrix super_flip(const Signature& sig, int l, int pos);
// Graded transposition of slots i < j.
SuperMatrix flip(const Signature& sig, int l, int i, int j);
// R_ij(u) = 1 - P_ij / u.
SuperMatrix r_matrix(const Signature& sig, int l, int i, int j, const Rat& u);

SuperMatrix antisymmetrizer(const Signature& sig, int k);
SuperMatrix symmetrizer(const Signature& sig, int k);
// Reverses the order of the tensor factors.
SuperMatrix reversal_operator(const Signature& sig, int l);

// s_1 (s_2 s_1) (s_3 s_2 s_1) ... as a list of generator indices.
std::vector<int> staircase_word(int l);
// Transposition sequence (i<j) attached to a reduced word of the longest
// permutation; throws InvalidArgument otherwise.
std::vector<std::pair<int, int>> reduced_word_pairs(const std::vector<int>& word, int l);

// Ordered product of R_ij(c_i - c_j) for a standard tableau. Factors whose
// argument vanishes are resolved by deforming the contents by column*t and
// taking the regular value at t = 0; throws IllDefinedProduct if the limit
// does not exist. An empty word selects the staircase word.
SuperMatrix fusion_operator(const Tableau& omega, int m, int n, const std::vector<int>& word = {});

// Exact rank by fraction-free elimination over Z.
size_t rank(const SuperMatrix& a);
// Dimensions of the image restricted to each weight space (weights as
// multiplicity vectors of 1..m+n); valid for weight-preserving operators.
std::map<std::vector<int>, size_t> weight_space_dims(const SuperMatrix& a);
Rat supertrace(const SuperMatrix& a);

}  // namespace skewchar
