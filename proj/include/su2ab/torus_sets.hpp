#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "su2ab/rational.hpp"

namespace su2ab {

// Primitive class on the boundary torus, canonical sign: a > 0, or a == 0 && b > 0.
struct Slope {
    long long a = 0, b = 0;

    Slope() = default;
    Slope(long long a_, long long b_);

    friend bool operator==(const Slope& x, const Slope& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Slope& x, const Slope& y) { return !(x == y); }
    friend bool operator<(const Slope& x, const Slope& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
    std::string str() const;
};

// Distance of slopes: |ps - rq|.
long long distance(const Slope& s1, const Slope& s2);

struct PointUV {
    Turn u, v;
    friend bool operator==(const PointUV& p, const PointUV& q) { return p.u == q.u && p.v == q.v; }
    friend bool operator<(const PointUV& p, const PointUV& q) {
        if (p.u != q.u) return p.u < q.u;
        return p.v < q.v;
    }
};

// The line {(u,v) : a*u + b*v = c mod 1}, with canonical parameterization
// point(t) = base + t*(-b, a), t in [0,1).
struct TorusLine {
    Slope n;   // normal (a,b), primitive, canonical sign
    Turn c;    // offset

    TorusLine() = default;
    TorusLine(const Slope& normal, const Turn& offset) : n(normal), c(offset) {}
    TorusLine(long long a, long long b, const Turn& offset);

    bool horizontal() const { return n.a == 0; }

    PointUV base() const;
    PointUV at(const Turn& t) const;
    // parameter of a point assumed to lie on the line
    Turn param_of(const PointUV& p) const;
    bool contains(const PointUV& p) const;

    friend bool operator==(const TorusLine& x, const TorusLine& y) { return x.n == y.n && x.c == y.c; }
    friend bool operator!=(const TorusLine& x, const TorusLine& y) { return !(x == y); }
    friend bool operator<(const TorusLine& x, const TorusLine& y) {
        if (x.n != y.n) return x.n < y.n;
        return x.c < y.c;
    }
};

// Proper sub-arc of a line, traversed from t0 in the +direction for `len`.
// len in (0,1); len == 1 is allowed only with both ends open and means the
// line punctured at t0. Zero length never appears (points are separate).
struct Arc {
    TorusLine line;
    Turn t0;
    Rat len;
    bool closed0 = false, closed1 = false;

    Turn t1() const { return Turn(t0.v + len); }
    bool contains_param(const Turn& t) const;
    PointUV start_point() const { return line.at(t0); }
    PointUV end_point() const { return line.at(t1()); }
};

// Subset of one parameter circle: intervals plus isolated points, or everything.
struct CircleSet {
    struct Iv {
        Turn s;
        Rat len;  // in (0,1]; len == 1 requires open-open (punctured circle)
        bool c0 = false, c1 = false;
    };
    bool full = false;
    std::vector<Iv> ivs;
    std::vector<Turn> pts;

    bool empty() const { return !full && ivs.empty() && pts.empty(); }
    bool contains(const Turn& t) const;
    Rat measure() const;

    // canonical disjoint representation (sorts, merges, absorbs points)
    static CircleSet normalized(const CircleSet& raw);
    static CircleSet unite(const CircleSet& x, const CircleSet& y);
    static CircleSet intersect(const CircleSet& x, const CircleSet& y);
    // exact Minkowski sum mod 1
    static CircleSet minkowski(const CircleSet& x, const CircleSet& y);

    friend bool operator==(const CircleSet& x, const CircleSet& y);
};

// Finite union of full rational lines, arcs, and isolated points on the
// character torus. Kept in a normal form: no arc on a listed line, arcs on a
// common line disjoint and merged, no point on a line or inside an arc.
struct TorusSet {
    std::vector<TorusLine> lines;
    std::vector<Arc> arcs;
    std::vector<PointUV> points;

    bool empty() const { return lines.empty() && arcs.empty() && points.empty(); }
    bool contains(const PointUV& p) const;

    static TorusSet empty_set() { return {}; }
    static TorusSet single_point(const PointUV& p);
    static TorusSet single_line(const TorusLine& l);

    TorusSet normalized() const;

    friend bool operator==(const TorusSet& x, const TorusSet& y);
};

// {(u,v) : order*(a*u + b*v) = 0 mod 1} -- `order` parallel lines.
TorusSet character_lines(const Slope& slope, long long order);

// {(u1+u2, v) : (u1,v) in S1, (u2,v) in S2}
TorusSet theta_sum(const TorusSet& s1, const TorusSet& s2);

// (u,v) -> (-u,-v)
TorusSet jewel(const TorusSet& s);

// componentwise shift mod 1
TorusSet translate(const TorusSet& s, const Turn& du, const Turn& dv);

// point map p -> M p + delta, M integer with det = +-1
TorusSet apply_matrix(const TorusSet& s, const long long m[2][2], const Turn& du = Turn(),
                      const Turn& dv = Turn());

// coordinates transform by the transpose of M (new basis = M applied to old)
TorusSet change_basis(const TorusSet& s, const long long m[2][2]);

TorusSet intersect(const TorusSet& s1, const TorusSet& s2);

bool is_empty(const TorusSet& s);

// a point inside S: isolated points first, then arc midpoints, then line base points
std::optional<PointUV> witness_point(const TorusSet& s);

// S restricted to L, in L's parameter coordinates
CircleSet restrict_to_line(const TorusSet& s, const TorusLine& l);

// fiber {u : (u, height) in S} as a subset of the u-circle
CircleSet horizontal_fiber(const TorusSet& s, const Turn& height);

// parameter-length ratio of S on L, a rational in [0,1]
Rat measure_on_line(const TorusSet& s, const TorusLine& l);

// the |det| intersection points of two non-parallel lines
std::vector<PointUV> line_line_points(const TorusLine& l1, const TorusLine& l2);

// arcs/points obtained from L by removing finitely many of its points
TorusSet punctured_line(const TorusLine& l, const std::vector<Turn>& removed_params);

}  // namespace su2ab
