#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "skewchar/rational.hpp"

namespace skewchar {

// Weakly decreasing positive parts; trailing zeros are dropped on construction.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts);  // NOLINT
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int length() const { return static_cast<int>(p_.size()); }
    int size() const;
    bool empty() const { return p_.empty(); }
    // 1-based; 0 past the end.
    int part(int i) const { return (i >= 1 && i <= length()) ? p_[i - 1] : 0; }
    const std::vector<int>& parts() const { return p_; }
    bool contains(const Partition& mu) const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> p_;
};

Partition conjugate(const Partition& p);
Partition parse_partition(const std::string& text);  // "4,3,2" or "" for empty

struct Box {
    int row = 1;
    int col = 1;
    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

// lambda/mu with content c(i,j) = j - i - anchor.
class SkewDiagram {
public:
    SkewDiagram() = default;
    SkewDiagram(Partition lambda, Partition mu = {}, Rat anchor = Rat(0));

    const Partition& lambda() const { return lambda_; }
    const Partition& mu() const { return mu_; }
    const Rat& anchor() const { return anchor_; }

    int size() const { return lambda_.size() - mu_.size(); }
    bool empty() const { return size() == 0; }
    bool contains(const Box& b) const;
    Rat content(const Box& b) const { return Rat(b.col - b.row) - anchor_; }
    // Row-major order.
    std::vector<Box> boxes() const;
    // Translating every content by w.
    SkewDiagram shifted(const Rat& w) const { return SkewDiagram(lambda_, mu_, anchor_ - w); }
    std::string to_string() const;

    friend bool operator==(const SkewDiagram& a, const SkewDiagram& b) {
        return a.lambda_ == b.lambda_ && a.mu_ == b.mu_ && a.anchor_ == b.anchor_;
    }

private:
    Partition lambda_, mu_;
    Rat anchor_;
};

// Builds the skew diagram occupying exactly `boxes` (coordinates may be <= 0)
// in the plane whose content is col - row - anchor. Contents are preserved;
// the result is translated so its top row and left column are 1. Throws
// ShapeError if the set is not a skew shape.
SkewDiagram from_boxes(std::vector<Box> boxes, const Rat& anchor);
// Removes empty leading/trailing rows and columns, keeping contents.
SkewDiagram normalize(const SkewDiagram& d);

SkewDiagram rectangle(int rows, int cols, const Rat& anchor = Rat(0));

struct GlWeight {
    std::vector<Rat> coords;
    friend bool operator==(const GlWeight&, const GlWeight&) = default;
    std::string to_string() const;
};

bool is_hook(const Partition& p, int m, int n);
// Throws NotHook when p is not an (m|n)-hook partition.
GlWeight natural_weight(const Partition& p, int m, int n);
GlWeight circ_weight(const Partition& p, int mp, int np, int m, int n);

// 180-degree rotation with the bottom-right box at content 0.
SkewDiagram rotate180(const Partition& p);
// Xi (m x n, upper-left content 0) with lambda^- glued to its left along the
// bottom rows. lambda must fit in m rows.
SkewDiagram build_W(const Partition& lambda, int m, int n);
// Xi with mu attached below it (mu_1 <= n).
SkewDiagram build_S(const Partition& mu, int m, int n);

enum class UpsilonKind { Plus, Minus };
// Plus: (n^m, i), i = 0..n.  Minus: ((n+1)^i, n^(m-i)), i = 0..m.
SkewDiagram build_upsilon(UpsilonKind kind, int i, int m, int n);

bool contains_rectangle(const SkewDiagram& d, int rows, int cols);
bool is_prime(const SkewDiagram& d);

struct TSystemFamily {
    SkewDiagram U;        // normalized input
    SkewDiagram U_plus;   // leftmost column removed
    SkewDiagram U_minus;  // rightmost column removed
    SkewDiagram U_zero;   // both removed
    SkewDiagram X;
    SkewDiagram Y;
};

// Throws NotPrime / TooFewColumns.
TSystemFamily tsystem_family(const SkewDiagram& d);
// Column-deletion part of the family only; valid for any diagram whose
// columns are consecutive and number at least two.
TSystemFamily tsystem_family_unchecked(const SkewDiagram& d);

// Sufficient condition for L_z(lambda) (x) L_w(mu) to be irreducible, with
// a_i = lambda_i - i + 1 and b_i = mu_i - i + 1 (two unrelated partitions).
// Pairs i < j <= N are checked, N = max(len lambda, len mu) + |z - w| + slack
// (the |z - w| term only for integer z - w).
bool irreducibility_condition(const Partition& lambda, const Partition& mu, const Rat& z,
                              const Rat& w, int slack = 5);

}  // namespace skewchar
