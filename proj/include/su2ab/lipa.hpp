#pragma once

#include <vector>

#include "su2ab/pieces.hpp"
#include "su2ab/torus_sets.hpp"

namespace su2ab {

// A maximal arc of H whose closure endpoints extend abelianly.
struct LipaPath {
    Arc arc;
    PointUV endpoint0, endpoint1;
    TorusLine line;
    bool whole_line = false;  // H covers the line; any sub-arc between A-points works
};

std::vector<LipaPath> find_lipa_paths(const BoundaryTriple& t);

// max over lines carrying a LIPA path of measure_on_line(H, L); 0 if none
Rat weight_mu(const BoundaryTriple& t);

struct TableEntry {
    long long delta = 0, n = 0;  // lambda2 = delta*xi + n*lambda1, -delta < n < 0
    long long p = 0, q = 0;      // slope of the candidate line L
    Rat c;                       // 0 or 1/2
    long long m = 0;             // |A(Y2) cap L|
    long long l = 0;             // central points on both lines
    Rat value;                   // max{0, (m-2-l)/m}
    bool flagged = false;        // value >= 2/3
};

TableEntry table_value(long long delta, long long n, long long p, long long q, const Rat& c);

struct TableGrid {
    std::vector<std::pair<long long, long long>> rows;   // (delta, n)
    std::vector<std::pair<long long, long long>> cols;   // (p, q)
    std::vector<std::vector<TableEntry>> cells;
};

// The two 8x8 grids: c = 0 and c = 1/2, over the standard slope set S.
std::pair<TableGrid, TableGrid> generate_tables();

}  // namespace su2ab
