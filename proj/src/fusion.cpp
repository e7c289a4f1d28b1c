#include "skewchar/fusion.hpp"

#include <algorithm>
#include <numeric>

#include "skewchar/errors.hpp"

namespace skewchar {

SuperMatrix::SuperMatrix(const Signature& sig, int l) : sig_(sig), l_(l) {
    if (l < 0 || sig.size() < 1) throw InvalidArgument("tensor space needs l >= 0 and m+n >= 1");
    for (int k = 0; k < l; ++k) dim_ *= static_cast<size_t>(sig.size());
    rows_.resize(dim_);
}

SuperMatrix SuperMatrix::identity(const Signature& sig, int l) {
    SuperMatrix I(sig, l);
    for (size_t r = 0; r < I.dim_; ++r) I.rows_[r][r] = 1;
    return I;
}

std::vector<int> SuperMatrix::word(size_t index) const {
    std::vector<int> w(l_);
    size_t N = sig_.size();
    for (int k = l_ - 1; k >= 0; --k) {
        w[k] = static_cast<int>(index % N) + 1;
        index /= N;
    }
    return w;
}

size_t SuperMatrix::index(const std::vector<int>& w) const {
    size_t idx = 0;
    for (int a : w) idx = idx * sig_.size() + static_cast<size_t>(a - 1);
    return idx;
}

int SuperMatrix::word_parity(size_t index) const {
    int p = 0;
    for (int a : word(index)) p += sig_.parity(a);
    return p & 1;
}

Rat SuperMatrix::at(size_t r, size_t c) const {
    auto it = rows_.at(r).find(c);
    return it == rows_[r].end() ? Rat(0) : it->second;
}

void SuperMatrix::add(size_t r, size_t c, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = rows_.at(r).try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) rows_[r].erase(it);
    }
}

static void require_same(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.signature() == b.signature()) || a.tensor_power() != b.tensor_power())
        throw SignatureMismatch("operators on different tensor spaces");
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    require_same(a, b);
    SuperMatrix out(a.sig_, a.l_);
    for (size_t r = 0; r < a.dim_; ++r) {
        auto& acc = out.rows_[r];
        for (const auto& [k, x] : a.rows_[r])
            for (const auto& [c, y] : b.rows_[k]) {
                auto [it, inserted] = acc.try_emplace(c, x * y);
                if (!inserted) it->second += x * y;
            }
        for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
    }
    return out;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    require_same(a, b);
    SuperMatrix out(a);
    for (size_t r = 0; r < b.dim_; ++r)
        for (const auto& [c, v] : b.rows_[r]) out.add(r, c, v);
    return out;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) { return a + Rat(-1) * b; }

SuperMatrix operator*(const Rat& s, const SuperMatrix& a) {
    SuperMatrix out(a.sig_, a.l_);
    if (s == 0) return out;
    for (size_t r = 0; r < a.dim_; ++r)
        for (const auto& [c, v] : a.rows_[r]) out.rows_[r][c] = s * v;
    return out;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.sig_ == b.sig_ && a.l_ == b.l_ && a.rows_ == b.rows_;
}

bool SuperMatrix::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

SuperMatrix permutation_operator(const Signature& sig, int l, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != l) throw InvalidArgument("permutation of wrong length");
    std::vector<int> check(perm);
    std::sort(check.begin(), check.end());
    for (int k = 0; k < l; ++k)
        if (check[k] != k + 1) throw InvalidArgument("not a permutation of 1..l");
    SuperMatrix P(sig, l);
    for (size_t idx = 0; idx < P.dim(); ++idx) {
        auto w = P.word(idx);
        std::vector<int> out(l);
        int sign = 0;
        for (int k = 0; k < l; ++k) {
            out[perm[k] - 1] = w[k];
            for (int k2 = k + 1; k2 < l; ++k2)
                if (perm[k] > perm[k2]) sign += sig.parity(w[k]) * sig.parity(w[k2]);
        }
        // Column idx holds the image of basis vector idx.
        P.add(P.index(out), idx, Rat(sign % 2 ? -1 : 1));
    }
    return P;
}

SuperMatrix flip(const Signature& sig, int l, int i, int j) {
    if (i < 1 || j > l || i >= j) throw IndexOutOfRange("flip needs 1 <= i < j <= l");
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 1);
    std::swap(perm[i - 1], perm[j - 1]);
    return permutation_operator(sig, l, perm);
}

SuperMatrix super_flip(const Signature& sig, int l, int pos) { return flip(sig, l, pos, pos + 1); }

SuperMatrix r_matrix(const Signature& sig, int l, int i, int j, const Rat& u) {
    if (u == 0) throw IllDefinedProduct("R-matrix evaluated at its pole u = 0");
    return SuperMatrix::identity(sig, l) - Rat(1 / u) * flip(sig, l, i, j);
}

static SuperMatrix symmetrize(const Signature& sig, int k, bool alternating) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    SuperMatrix acc(sig, k);
    long count = 0;
    do {
        int inv = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) inv += perm[a] > perm[b];
        Rat s = (alternating && inv % 2) ? Rat(-1) : Rat(1);
        acc = acc + s * permutation_operator(sig, k, perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rat(1, count) * acc;
}

SuperMatrix antisymmetrizer(const Signature& sig, int k) { return symmetrize(sig, k, true); }
SuperMatrix symmetrizer(const Signature& sig, int k) { return symmetrize(sig, k, false); }

SuperMatrix reversal_operator(const Signature& sig, int l) {
    std::vector<int> perm(l);
    for (int k = 0; k < l; ++k) perm[k] = l - k;
    return permutation_operator(sig, l, perm);
}

std::vector<int> staircase_word(int l) {
    std::vector<int> w;
    for (int top = 1; top < l; ++top)
        for (int s = top; s >= 1; --s) w.push_back(s);
    return w;
}

std::vector<std::pair<int, int>> reduced_word_pairs(const std::vector<int>& word, int l) {
    if (static_cast<int>(word.size()) != l * (l - 1) / 2)
        throw InvalidArgument("word length differs from that of the longest permutation");
    std::vector<int> w(l + 1);  // w = s_{k_1} ... s_{k_{t-1}} as a map on 1..l
    std::iota(w.begin(), w.end(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (int k : word) {
        if (k < 1 || k >= l) throw InvalidArgument("generator index out of range");
        int a = w[k], b = w[k + 1];
        if (a > b) throw InvalidArgument("word is not reduced");
        pairs.push_back({a, b});
        std::swap(w[k], w[k + 1]);
    }
    return pairs;
}

namespace {

using Series = std::vector<SuperMatrix>;  // coefficients of t^0..t^K

Series series_mul(const Series& a, const Series& b) {
    size_t K = a.size() - 1;
    const SuperMatrix& proto = a[0];
    Series out(K + 1, SuperMatrix(proto.signature(), proto.tensor_power()));
    for (size_t i = 0; i <= K; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j <= K; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return out;
}

void validate_standard(const Tableau& t) {
    int l = t.diagram.size();
    std::vector<int> seen(t.entries);
    std::sort(seen.begin(), seen.end());
    for (int k = 0; k < l; ++k)
        if (seen[k] != k + 1) throw InvalidArgument("fusion needs a standard tableau");
    auto boxes = t.diagram.boxes();
    for (size_t a = 0; a < boxes.size(); ++a)
        for (size_t b = 0; b < boxes.size(); ++b) {
            bool right = boxes[b].row == boxes[a].row && boxes[b].col == boxes[a].col + 1;
            bool below = boxes[b].col == boxes[a].col && boxes[b].row == boxes[a].row + 1;
            if ((right || below) && t.entries[b] < t.entries[a])
                throw InvalidArgument("tableau entries must increase along rows and columns");
        }
}

}  // namespace

SuperMatrix fusion_operator(const Tableau& omega, int m, int n, const std::vector<int>& word) {
    validate_standard(omega);
    Signature sig{m, n};
    const int l = omega.diagram.size();
    if (l == 0) return SuperMatrix::identity(sig, 0);
    std::vector<Rat> c(l + 1);
    std::vector<int> col(l + 1);
    auto boxes = omega.diagram.boxes();
    for (size_t k = 0; k < boxes.size(); ++k) {
        c[omega.entries[k]] = omega.diagram.content(boxes[k]);
        col[omega.entries[k]] = boxes[k].col;
    }
    auto pairs = reduced_word_pairs(word.empty() ? staircase_word(l) : word, l);
    size_t K = 0;
    for (auto [i, j] : pairs) K += c[i] == c[j];

    SuperMatrix I = SuperMatrix::identity(sig, l), Z(sig, l);
    Series acc(K + 1, Z);
    acc[0] = I;
    for (auto [i, j] : pairs) {
        Rat cij = c[i] - c[j];
        Rat delta(col[i] - col[j]);
        SuperMatrix P = flip(sig, l, i, j);
        Series f(K + 1, Z);
        if (cij != 0) {
            // 1 - P/(c + delta t), expanded in t.
            f[0] = I - Rat(1 / cij) * P;
            Rat coef = -1 / cij;
            for (size_t r = 1; r <= K; ++r) {
                coef *= -delta / cij;
                f[r] = coef * P;
            }
        } else {
            if (delta == 0) throw IllDefinedProduct("coinciding contents in the same column");
            // (delta t) R(delta t) = delta t - P
            f[0] = Rat(-1) * P;
            if (K >= 1) f[1] = delta * I;
        }
        acc = series_mul(acc, f);
    }
    for (size_t r = 0; r < K; ++r)
        if (!acc[r].is_zero()) throw IllDefinedProduct("fusion product is singular at the tableau contents");
    return acc[K];
}

namespace {

using IntRow = std::map<size_t, Int>;

void make_primitive(IntRow& row) {
    Int g = 0;
    for (const auto& [c, v] : row) g = gcd(g, v);
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

size_t rank_of_rows(std::vector<IntRow> rows) {
    std::map<size_t, IntRow> pivots;  // leading column -> row
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin()->first;
            auto pit = pivots.find(lead);
            if (pit == pivots.end()) {
                make_primitive(row);
                pivots.emplace(lead, std::move(row));
                break;
            }
            const IntRow& p = pit->second;
            Int a = p.begin()->second, b = row.begin()->second;
            Int g = gcd(a, b);
            Int fa = a / g, fb = b / g;
            // row <- fa*row - fb*p eliminates the leading entry.
            for (auto& [c, v] : row) v *= fa;
            for (const auto& [c, v] : p) {
                auto [it, inserted] = row.try_emplace(c, -fb * v);
                if (!inserted) {
                    it->second -= fb * v;
                }
                if (it->second == 0) row.erase(it);
            }
            make_primitive(row);
        }
    }
    return pivots.size();
}

IntRow integer_row(const std::map<size_t, Rat>& r, const std::vector<size_t>* cols = nullptr) {
    Int l = 1;
    for (const auto& [c, v] : r) l = lcm(l, v.get_den());
    IntRow out;
    for (const auto& [c, v] : r) {
        if (cols && !std::binary_search(cols->begin(), cols->end(), c)) continue;
        Int x = v.get_num() * (l / v.get_den());
        if (x != 0) out.emplace(c, x);
    }
    return out;
}

}  // namespace

size_t rank(const SuperMatrix& a) {
    std::vector<IntRow> rows;
    for (size_t r = 0; r < a.dim(); ++r)
        if (!a.row(r).empty()) rows.push_back(integer_row(a.row(r)));
    return rank_of_rows(std::move(rows));
}

std::map<std::vector<int>, size_t> weight_space_dims(const SuperMatrix& a) {
    const int N = a.signature().size();
    std::map<std::vector<int>, std::vector<size_t>> blocks;
    for (size_t idx = 0; idx < a.dim(); ++idx) {
        std::vector<int> wt(N, 0);
        for (int x : a.word(idx)) ++wt[x - 1];
        blocks[wt].push_back(idx);
    }
    std::map<std::vector<int>, size_t> out;
    for (const auto& [wt, idxs] : blocks) {
        std::vector<IntRow> rows;
        for (size_t r : idxs)
            if (!a.row(r).empty()) rows.push_back(integer_row(a.row(r), &idxs));
        size_t rk = rank_of_rows(std::move(rows));
        if (rk) out[wt] = rk;
    }
    return out;
}

Rat supertrace(const SuperMatrix& a) {
    Rat s(0);
    for (size_t r = 0; r < a.dim(); ++r) {
        Rat d = a.at(r, r);
        if (d != 0) s += a.word_parity(r) ? Rat(-d) : d;
    }
    return s;
}

}  // namespace skewchar
