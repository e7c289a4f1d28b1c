#include "skewchar/diagrams.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "skewchar/errors.hpp"

namespace skewchar {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0) throw ShapeError("negative part in partition");
        if (i > 0 && p_[i] > p_[i - 1]) throw ShapeError("partition parts must weakly decrease");
    }
}

int Partition::size() const {
    int s = 0;
    for (int x : p_) s += x;
    return s;
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
    os << ")";
    return os.str();
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(p.part(1), 0);
    for (int x : p.parts())
        for (int j = 0; j < x; ++j) ++out[j];
    return Partition(std::move(out));
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        parts.push_back(static_cast<int>(parse_int(tok).get_si()));
    }
    return Partition(std::move(parts));
}

SkewDiagram::SkewDiagram(Partition lambda, Partition mu, Rat anchor)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), anchor_(std::move(anchor)) {
    if (!lambda_.contains(mu_)) throw ShapeError("mu is not contained in lambda");
}

bool SkewDiagram::contains(const Box& b) const {
    return b.row >= 1 && b.col > mu_.part(b.row) && b.col <= lambda_.part(b.row);
}

std::vector<Box> SkewDiagram::boxes() const {
    std::vector<Box> out;
    for (int i = 1; i <= lambda_.length(); ++i)
        for (int j = mu_.part(i) + 1; j <= lambda_.part(i); ++j) out.push_back({i, j});
    return out;
}

std::string SkewDiagram::to_string() const {
    std::string s = lambda_.to_string();
    if (!mu_.empty()) s += "/" + mu_.to_string();
    if (anchor_ != 0) s += "@" + skewchar::to_string(anchor_);
    return s;
}

SkewDiagram from_boxes(std::vector<Box> boxes, const Rat& anchor) {
    if (boxes.empty()) return SkewDiagram();
    int rmin = boxes[0].row, cmin = boxes[0].col, rmax = boxes[0].row;
    for (const auto& b : boxes) {
        rmin = std::min(rmin, b.row);
        rmax = std::max(rmax, b.row);
        cmin = std::min(cmin, b.col);
    }
    int dr = 1 - rmin, dc = 1 - cmin;
    std::set<Box> cells;
    for (auto& b : boxes) cells.insert({b.row + dr, b.col + dc});
    int R = rmax + dr;
    std::vector<int> lo(R + 1, 0), hi(R + 1, -1);
    for (const auto& b : cells) {
        if (hi[b.row] < 0) lo[b.row] = b.col;
        hi[b.row] = std::max(hi[b.row], b.col);
        lo[b.row] = std::min(lo[b.row], b.col);
    }
    std::vector<int> lam(R), mu(R);
    // Empty rows get lambda_r = mu_r = lambda of the next non-empty row.
    int below = 0;
    for (int r = R; r >= 1; --r) {
        if (hi[r] >= 0) {
            lam[r - 1] = hi[r];
            mu[r - 1] = lo[r] - 1;
            below = hi[r];
        } else {
            lam[r - 1] = mu[r - 1] = below;
        }
    }
    SkewDiagram d;
    try {
        d = SkewDiagram(Partition(lam), Partition(mu), anchor + dc - dr);
    } catch (const ShapeError&) {
        throw ShapeError("box set is not a skew diagram");
    }
    auto got = d.boxes();
    if (got.size() != cells.size() || !std::equal(got.begin(), got.end(), cells.begin()))
        throw ShapeError("box set is not a skew diagram");
    return d;
}

SkewDiagram normalize(const SkewDiagram& d) { return from_boxes(d.boxes(), d.anchor()); }

SkewDiagram rectangle(int rows, int cols, const Rat& anchor) {
    if (rows < 0 || cols < 0) throw ShapeError("negative rectangle size");
    if (rows == 0 || cols == 0) return SkewDiagram({}, {}, anchor);
    return SkewDiagram(Partition(std::vector<int>(rows, cols)), {}, anchor);
}

std::string GlWeight::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + skewchar::to_string(coords[i]);
    return s + ")";
}

bool is_hook(const Partition& p, int m, int n) { return p.part(m + 1) <= n; }

GlWeight natural_weight(const Partition& p, int m, int n) {
    if (!is_hook(p, m, n)) throw NotHook(p.to_string() + " is not a hook partition");
    Partition c = conjugate(p);
    GlWeight w;
    for (int i = 1; i <= m; ++i) w.coords.emplace_back(p.part(i));
    for (int j = 1; j <= n; ++j) w.coords.emplace_back(std::max(c.part(j) - m, 0));
    return w;
}

GlWeight circ_weight(const Partition& p, int mp, int np, int m, int n) {
    if (!is_hook(p, mp + m, np + n)) throw NotHook(p.to_string() + " is not a hook partition");
    Partition c = conjugate(p);
    GlWeight w;
    w.coords.assign(mp + np + m + n, Rat(0));
    for (int i = 1; i <= mp; ++i) w.coords[i - 1] = p.part(i);
    for (int j = 1; j <= np; ++j) w.coords[mp + j - 1] = std::max(c.part(j) - mp, 0);
    for (int i = mp + 1; i <= mp + m; ++i) w.coords[np + i - 1] = std::max(p.part(i) - np, 0);
    for (int j = np + 1; j <= np + n; ++j)
        w.coords[mp + m + j - 1] = std::max(c.part(j) - mp - m, 0);
    return w;
}

SkewDiagram rotate180(const Partition& p) {
    if (p.empty()) return SkewDiagram();
    int L = p.part(1), len = p.length();
    std::vector<int> mu(len);
    for (int k = 1; k <= len; ++k) mu[k - 1] = L - p.part(len + 1 - k);
    return SkewDiagram(Partition(std::vector<int>(len, L)), Partition(mu), Rat(L - len));
}

SkewDiagram build_W(const Partition& lambda, int m, int n) {
    if (m < 0 || n < 0) throw InvalidArgument("negative signature");
    if (lambda.length() > m) throw ShapeError("lambda must have at most m rows");
    if (m == 0) return SkewDiagram();
    int L = lambda.part(1), len = lambda.length();
    std::vector<int> mu(m);
    for (int i = 1; i <= m; ++i) mu[i - 1] = i <= m - len ? L : L - lambda.part(len + 1 - (i - m + len));
    return SkewDiagram(Partition(std::vector<int>(m, L + n)), Partition(mu), Rat(L));
}

SkewDiagram build_S(const Partition& mu, int m, int n) {
    if (m < 0 || n < 0) throw InvalidArgument("negative signature");
    if (mu.part(1) > n) throw ShapeError("mu must have at most n columns");
    std::vector<int> lam(m, n);
    for (int x : mu.parts()) lam.push_back(x);
    return SkewDiagram(Partition(lam), {}, Rat(0));
}

SkewDiagram build_upsilon(UpsilonKind kind, int i, int m, int n) {
    if (m < 0 || n < 0) throw InvalidArgument("negative signature");
    std::vector<int> lam;
    if (kind == UpsilonKind::Plus) {
        if (i < 0 || i > n) throw IndexOutOfRange("Upsilon^+ index outside 0..n");
        lam.assign(m, n);
        lam.push_back(i);
    } else {
        if (i < 0 || i > m) throw IndexOutOfRange("Upsilon^- index outside 0..m");
        lam.assign(i, n + 1);
        lam.insert(lam.end(), m - i, n);
    }
    return SkewDiagram(Partition(lam), {}, Rat(0));
}

bool contains_rectangle(const SkewDiagram& d, int rows, int cols) {
    if (rows <= 0 || cols <= 0) return true;
    for (int i = 1; i + rows - 1 <= d.lambda().length(); ++i)
        if (d.lambda().part(i + rows - 1) - d.mu().part(i) >= cols) return true;
    return false;
}

namespace {

// Row range [top, bottom] of each column 1..C of a normalized diagram.
struct ColumnRanges {
    std::vector<int> top, bottom;  // 1-based columns; top > bottom means empty
};

ColumnRanges column_ranges(const SkewDiagram& d) {
    int C = d.lambda().part(1);
    ColumnRanges cr;
    cr.top.assign(C + 2, 1 << 29);
    cr.bottom.assign(C + 2, -1);
    for (const auto& b : d.boxes()) {
        cr.top[b.col] = std::min(cr.top[b.col], b.row);
        cr.bottom[b.col] = std::max(cr.bottom[b.col], b.row);
    }
    return cr;
}

}  // namespace

bool is_prime(const SkewDiagram& d) {
    if (d.empty()) return false;
    SkewDiagram u = normalize(d);
    int C = u.lambda().part(1);
    auto cr = column_ranges(u);
    for (int j = 1; j <= C; ++j)
        if (cr.bottom[j] < 0) return false;
    // Adjacent columns must share at least one row (an edge, not a corner).
    for (int j = 1; j < C; ++j)
        if (std::min(cr.bottom[j], cr.bottom[j + 1]) - std::max(cr.top[j], cr.top[j + 1]) < 0)
            return false;
    return true;
}

TSystemFamily tsystem_family_unchecked(const SkewDiagram& d) {
    TSystemFamily f;
    f.U = normalize(d);
    const auto& lam = f.U.lambda();
    const auto& mu = f.U.mu();
    int l = lam.part(1);
    if (l < 2) throw TooFewColumns("diagram needs at least two columns");
    auto cr = column_ranges(f.U);
    for (int j = 1; j <= l; ++j)
        if (cr.bottom[j] < 0) throw NotPrime("diagram has an empty column");

    std::vector<Box> plus, minus, zero, X, Y;
    for (const auto& b : f.U.boxes()) {
        if (b.col >= 2) plus.push_back(b);
        if (b.col <= l - 1) minus.push_back(b);
        if (b.col >= 2 && b.col <= l - 1) zero.push_back(b);
    }
    Partition lc = conjugate(lam), mc = conjugate(mu);
    for (int j = 1; j <= l - 1; ++j) {
        for (int i = mc.part(j) + 1; i <= lc.part(j + 1) - 1; ++i) X.push_back({i, j});
        for (int i = mc.part(j + 1); i <= lc.part(j); ++i) Y.push_back({i, j});
    }
    const Rat& z = f.U.anchor();
    f.U_plus = from_boxes(plus, z);
    f.U_minus = from_boxes(minus, z);
    f.U_zero = from_boxes(zero, z);
    f.X = from_boxes(X, z);
    f.Y = from_boxes(Y, z);
    return f;
}

TSystemFamily tsystem_family(const SkewDiagram& d) {
    if (d.empty()) throw NotPrime("empty diagram");
    SkewDiagram u = normalize(d);
    if (u.lambda().part(1) < 2) throw TooFewColumns("diagram needs at least two columns");
    if (!is_prime(u)) throw NotPrime(d.to_string() + " is not prime");
    return tsystem_family_unchecked(u);
}

namespace {

// <lo, hi> : the integers in [lo, hi] that are not among the listed values.
bool in_gap(const Rat& x, int lo, int hi, const std::vector<int>& listed) {
    if (!is_integer(x)) return false;
    long v = x.get_num().get_si();
    if (v < lo || v > hi) return false;
    return std::find(listed.begin(), listed.end(), v) == listed.end();
}

}  // namespace

bool irreducibility_condition(const Partition& lambda, const Partition& mu, const Rat& z,
                              const Rat& w, int slack) {
    if (slack < 1) throw InvalidArgument("slack must be positive");
    Rat d = z - w;
    // Tail values 1 - j +/- d reach the bounded gaps only while j <= len + |d|.
    long reach = is_integer(d) ? std::labs(d.get_num().get_si()) : 0;
    int N = std::max(lambda.length(), mu.length()) + static_cast<int>(reach) + slack;
    std::vector<int> a(N + 1), b(N + 1);
    for (int i = 1; i <= N; ++i) {
        a[i] = lambda.part(i) - i + 1;
        b[i] = mu.part(i) - i + 1;
    }
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            std::vector<int> as(a.begin() + i, a.begin() + j + 1);
            std::vector<int> bs(b.begin() + i, b.begin() + j + 1);
            bool first = !in_gap(b[j] + d, a[j], a[i], as) && !in_gap(b[i] + d, a[j], a[i], as);
            bool second = !in_gap(a[j] - d, b[j], b[i], bs) && !in_gap(a[i] - d, b[j], b[i], bs);
            if (!first && !second) return false;
        }
    }
    return true;
}

}  // namespace skewchar
