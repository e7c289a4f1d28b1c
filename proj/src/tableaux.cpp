#include "skewchar/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "skewchar/errors.hpp"

namespace skewchar {

int Tableau::at(const Box& b) const {
    auto bs = diagram.boxes();
    auto it = std::find(bs.begin(), bs.end(), b);
    if (it == bs.end()) throw IndexOutOfRange("box outside the diagram");
    return entries[it - bs.begin()];
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    os << "[";
    size_t k = 0;
    const auto& lam = diagram.lambda();
    const auto& mu = diagram.mu();
    for (int i = 1; i <= lam.length(); ++i) {
        os << (i > 1 ? "," : "") << "[";
        for (int j = mu.part(i) + 1; j <= lam.part(i); ++j)
            os << (j > mu.part(i) + 1 ? "," : "") << entries[k++];
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

struct Cell {
    int slot;   // position in row-major entries
    int above;  // slot of the box above, or -1
    int left;   // slot of the box to the left, or -1
};

std::vector<Cell> column_major_cells(const SkewDiagram& d) {
    auto bs = d.boxes();
    std::map<Box, int> slot;
    for (size_t k = 0; k < bs.size(); ++k) slot[bs[k]] = static_cast<int>(k);
    std::vector<Box> order(bs);
    std::sort(order.begin(), order.end(), [](const Box& a, const Box& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    std::vector<Cell> cells;
    for (const auto& b : order) {
        auto up = slot.find({b.row - 1, b.col});
        auto lf = slot.find({b.row, b.col - 1});
        cells.push_back({slot[b], up == slot.end() ? -1 : up->second,
                         lf == slot.end() ? -1 : lf->second});
    }
    return cells;
}

// Backtracking core shared by enumeration and counting.
template <class F>
void ssyt_core(const SkewDiagram& d, int m, int n, EntryRange range, std::vector<int>& entries,
               F&& on_complete) {
    if (m < 0 || n < 0) throw InvalidArgument("negative signature");
    int lo = range.lo, hi = range.hi < 0 ? m + n : range.hi;
    auto cells = column_major_cells(d);
    entries.assign(cells.size(), 0);
    auto rec = [&](auto&& self, size_t k) -> bool {
        if (k == cells.size()) return on_complete();
        const Cell& c = cells[k];
        int lb = lo;
        if (c.above >= 0) {
            int x = entries[c.above];
            lb = std::max(lb, x <= m ? x + 1 : x);  // even entries strict down columns
        }
        if (c.left >= 0) {
            int x = entries[c.left];
            lb = std::max(lb, x > m ? x + 1 : x);  // odd entries strict along rows
        }
        for (int v = lb; v <= hi; ++v) {
            entries[c.slot] = v;
            if (!self(self, k + 1)) return false;
        }
        return true;
    };
    rec(rec, 0);
}

}  // namespace

void for_each_ssyt(const SkewDiagram& d, int m, int n,
                   const std::function<bool(const Tableau&)>& visit, EntryRange range) {
    Tableau t{d, {}};
    ssyt_core(d, m, n, range, t.entries, [&] { return visit(t); });
}

std::vector<Tableau> enumerate_ssyt(const SkewDiagram& d, int m, int n, EntryRange range) {
    std::vector<Tableau> out;
    for_each_ssyt(d, m, n, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    }, range);
    return out;
}

Int count_ssyt(const SkewDiagram& d, int m, int n, EntryRange range) {
    Int count = 0;
    std::vector<int> entries;
    ssyt_core(d, m, n, range, entries, [&] {
        ++count;
        return true;
    });
    return count;
}

Tableau row_tableau(const SkewDiagram& d) {
    Tableau t{d, {}};
    for (size_t k = 0; k < d.boxes().size(); ++k) t.entries.push_back(static_cast<int>(k) + 1);
    return t;
}

Tableau column_tableau(const SkewDiagram& d) {
    Tableau t{d, std::vector<int>(d.size(), 0)};
    auto cells = column_major_cells(d);
    for (size_t k = 0; k < cells.size(); ++k) t.entries[cells[k].slot] = static_cast<int>(k) + 1;
    return t;
}

LatticePoint LatticePath::end() const {
    LatticePoint p = start;
    for (Step s : steps) {
        if (s != Step::North) ++p.x;
        if (s != Step::East) ++p.y;
    }
    return p;
}

void for_each_lgv_tuple(const Partition& lambda, const Partition& mu, int m, int n,
                        const std::function<bool(const PathTuple&)>& visit) {
    if (!lambda.contains(mu)) throw ShapeError("mu is not contained in lambda");
    if (m < 0 || n < 0) throw InvalidArgument("negative signature");
    const int l = lambda.length();
    const int top = m + n + 1;
    PathTuple t{m, n, std::vector<LatticePath>(l)};
    std::set<LatticePoint> used;

    std::function<bool(int, LatticePoint, int)> walk;
    auto next_path = [&](int i) -> bool {
        if (i > l) return visit(t);
        LatticePoint s{mu.part(i) - i + 1, 1};
        t.paths[i - 1] = LatticePath{s, {}};
        return walk(i, s, lambda.part(i) - i + 1);
    };
    auto try_step = [&](int i, Step s, LatticePoint q, int x1) {
        auto& steps = t.paths[i - 1].steps;
        steps.push_back(s);
        bool go = walk(i, q, x1);
        steps.pop_back();
        return go;
    };
    walk = [&](int i, LatticePoint p, int x1) -> bool {
        if (used.count(p)) return true;
        if (p.y == top) {
            if (p.x != x1) return true;
            used.insert(p);
            bool go = next_path(i + 1);
            used.erase(p);
            return go;
        }
        if (p.x > x1) return true;
        if (p.y > m && x1 - p.x > top - p.y) return true;
        used.insert(p);
        bool go;
        if (p.y <= m)
            go = try_step(i, Step::East, {p.x + 1, p.y}, x1) &&
                 try_step(i, Step::North, {p.x, p.y + 1}, x1);
        else
            go = try_step(i, Step::North, {p.x, p.y + 1}, x1) &&
                 try_step(i, Step::NorthEast, {p.x + 1, p.y + 1}, x1);
        used.erase(p);
        return go;
    };
    next_path(1);
}

Int count_lgv_tuples(const Partition& lambda, const Partition& mu, int m, int n) {
    Int count = 0;
    for_each_lgv_tuple(lambda, mu, m, n, [&](const PathTuple&) {
        ++count;
        return true;
    });
    return count;
}

Tableau tuple_to_tableau(const PathTuple& t, const Rat& anchor) {
    const int m = t.m, n = t.n, top = m + n + 1;
    std::set<LatticePoint> used;
    std::vector<int> lam, mu;
    std::vector<std::vector<int>> rows;
    for (size_t k = 0; k < t.paths.size(); ++k) {
        int i = static_cast<int>(k) + 1;
        const auto& path = t.paths[k];
        LatticePoint p = path.start;
        if (p.y != 1) throw MalformedTuple("path " + std::to_string(i) + " does not start at y=1");
        std::vector<int> labels;
        auto occupy = [&](LatticePoint q) {
            if (!used.insert(q).second)
                throw MalformedTuple("paths intersect at (" + std::to_string(q.x) + "," +
                                     std::to_string(q.y) + ")");
        };
        occupy(p);
        for (Step s : path.steps) {
            if (p.y >= top) throw MalformedTuple("step beyond the top row");
            bool even_band = p.y <= m;
            if (s == Step::East && !even_band) throw MalformedTuple("east step in odd band");
            if (s == Step::NorthEast && even_band) throw MalformedTuple("north-east step in even band");
            if (s != Step::North) labels.push_back(p.y);
            if (s != Step::North) ++p.x;
            if (s != Step::East) ++p.y;
            occupy(p);
        }
        if (p.y != top) throw MalformedTuple("path " + std::to_string(i) + " does not reach the top");
        mu.push_back(path.start.x + i - 1);
        lam.push_back(p.x + i - 1);
        rows.push_back(std::move(labels));
    }
    SkewDiagram d;
    try {
        d = SkewDiagram(Partition(lam), Partition(mu), anchor);
    } catch (const ShapeError& e) {
        throw MalformedTuple(std::string("endpoints do not form a skew diagram: ") + e.what());
    }
    Tableau tab{d, {}};
    for (auto& r : rows) tab.entries.insert(tab.entries.end(), r.begin(), r.end());
    return tab;
}

}  // namespace skewchar
