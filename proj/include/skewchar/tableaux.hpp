#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skewchar/diagrams.hpp"

namespace skewchar {

// Filling of a skew diagram; entries follow diagram.boxes() (row-major).
struct Tableau {
    SkewDiagram diagram;
    std::vector<int> entries;

    int at(const Box& b) const;
    // "[[1,2,2],[3,4],[2,3]]" ; rows with no boxes print as [].
    std::string to_string() const;
};

// Entries allowed in a tableau, inclusive. The default is 1..m+n.
struct EntryRange {
    int lo = 1;
    int hi = -1;  // -1: m+n
};

// Calls visit(t) for every semistandard tableau in column-major
// smallest-entry-first order; stops early when visit returns false.
void for_each_ssyt(const SkewDiagram& d, int m, int n,
                   const std::function<bool(const Tableau&)>& visit, EntryRange range = {});
std::vector<Tableau> enumerate_ssyt(const SkewDiagram& d, int m, int n, EntryRange range = {});
Int count_ssyt(const SkewDiagram& d, int m, int n, EntryRange range = {});

// Standard tableaux used by the fusion procedure.
Tableau row_tableau(const SkewDiagram& d);
Tableau column_tableau(const SkewDiagram& d);

// Lattice paths for the Lindstrom-Gessel-Viennot bijection.
enum class Step { North, East, NorthEast };

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticePath {
    LatticePoint start;
    std::vector<Step> steps;
    LatticePoint end() const;
};

struct PathTuple {
    int m = 0;
    int n = 0;
    std::vector<LatticePath> paths;  // path i runs from row i's start to its end
};

// Non-intersecting tuples with path i from (mu_i - i + 1, 1) to
// (lambda_i - i + 1, m + n + 1), i = 1..len(lambda).
void for_each_lgv_tuple(const Partition& lambda, const Partition& mu, int m, int n,
                        const std::function<bool(const PathTuple&)>& visit);
Int count_lgv_tuples(const Partition& lambda, const Partition& mu, int m, int n);
// Row i of the tableau lists the labels y of path i's east/north-east steps.
// Throws MalformedTuple for illegal steps, endpoints or intersections.
Tableau tuple_to_tableau(const PathTuple& t, const Rat& anchor = Rat(0));

}  // namespace skewchar
