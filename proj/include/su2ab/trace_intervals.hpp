#pragma once

#include <vector>

#include "su2ab/rational.hpp"
#include "su2ab/torus_sets.hpp"

namespace su2ab {

// Angle folded into [0, 1/2]; the trace 2cos(2*pi*u) depends only on this.
struct FoldedAngle {
    Rat v;  // in [0, 1/2]
    FoldedAngle() = default;
    explicit FoldedAngle(const Rat& x) : v(x) {}
    bool degenerate() const { return v.num == 0 || v * Rat(2) == Rat(1); }
    friend bool operator==(const FoldedAngle& a, const FoldedAngle& b) { return a.v == b.v; }
    friend bool operator<(const FoldedAngle& a, const FoldedAngle& b) { return a.v < b.v; }
};

FoldedAngle fold(const Turn& u);

// Disjoint intervals in [0,1/2] with closure flags, plus isolated folded points.
struct FoldedSet {
    struct Iv {
        Rat lo, hi;    // 0 <= lo < hi <= 1/2
        bool c0 = false, c1 = false;
    };
    std::vector<Iv> ivs;
    std::vector<Rat> pts;

    bool empty() const { return ivs.empty() && pts.empty(); }
    static FoldedSet normalized(const FoldedSet& raw);
    friend bool operator==(const FoldedSet& a, const FoldedSet& b);
};

// Exact angle form of the product-trace interval I(2cos 2pi f1, 2cos 2pi f2):
// the open interval (|f1-f2|, min(f1+f2, 1-f1-f2)), empty in degenerate cases.
struct AngleInterval {
    bool nonempty = false;
    Rat lo, hi;  // open ends
};
AngleInterval product_angle_interval(const FoldedAngle& f1, const FoldedAngle& f2);

// Union of product_angle_interval over F1 x F2.
FoldedSet admissible_product_set(const FoldedSet& f1, const FoldedSet& f2);

// Arcs on the horizontal line {v = level} with u in F union (1-F).
TorusSet unfold_to_arcs(const FoldedSet& f, const Turn& level);

// Fold a subset of the u-circle into [0,1/2].
FoldedSet fold_circle_set(const CircleSet& cs);

}  // namespace su2ab
