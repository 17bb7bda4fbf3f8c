#pragma once

#include <random>
#include <set>
#include <vector>

#include "su2ab/torus_sets.hpp"

namespace su2ab::testing {

inline TorusLine hline(long long num, long long den) { return TorusLine(0, 1, Turn(num, den)); }
inline TorusLine vline(long long num, long long den) { return TorusLine(1, 0, Turn(num, den)); }

inline PointUV pt(long long un, long long ud, long long vn, long long vd) {
    return {Turn(un, ud), Turn(vn, vd)};
}

// arc on a horizontal line given by its u-interval
inline Arc harc(long long hn, long long hd, const Rat& ulo, const Rat& uhi, bool c0 = false,
                bool c1 = false) {
    TorusLine l(0, 1, Turn(hn, hd));
    // u = -t on horizontal lines
    Rat len = (uhi - ulo).mod1();
    return {l, Turn(-uhi), len, c1, c0};
}

struct RandomSetGen {
    std::mt19937 rng;
    explicit RandomSetGen(unsigned seed) : rng(seed) {}

    long long irange(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    }

    Slope random_slope() {
        while (true) {
            long long a = irange(-3, 3), b = irange(-3, 3);
            if (a == 0 && b == 0) continue;
            return Slope(a, b);
        }
    }

    Turn random_turn(long long maxden = 8) {
        long long d = irange(1, maxden);
        return Turn(irange(0, d - 1), d);
    }

    TorusLine random_line() { return TorusLine(random_slope(), random_turn(6)); }

    Arc random_arc() {
        TorusLine l = random_line();
        long long d = irange(2, 8);
        long long a = irange(0, d - 1);
        long long len = irange(1, d - 1);
        return {l, Turn(a, d), Rat(len, d), irange(0, 1) == 1, irange(0, 1) == 1};
    }

    TorusSet random_set(int maxlines = 2, int maxarcs = 2, int maxpoints = 2) {
        TorusSet s;
        int nl = (int)irange(0, maxlines), na = (int)irange(0, maxarcs),
            np = (int)irange(0, maxpoints);
        for (int i = 0; i < nl; ++i) s.lines.push_back(random_line());
        for (int i = 0; i < na; ++i) s.arcs.push_back(random_arc());
        for (int i = 0; i < np; ++i) s.points.push_back({random_turn(), random_turn()});
        if (s.empty()) s.points.push_back({random_turn(), random_turn()});
        return s.normalized();
    }
};

// heights at which the sets have structure, plus two generic heights per gap
inline std::vector<Rat> probe_heights(const std::vector<const TorusSet*>& sets) {
    std::set<Rat> crit;
    for (const auto* s : sets) {
        for (const auto& l : s->lines)
            if (l.horizontal()) crit.insert(l.c.v);
        for (const auto& a : s->arcs) {
            crit.insert(a.start_point().v.v);
            crit.insert(a.end_point().v.v);
            if (a.line.horizontal()) crit.insert(a.line.c.v);
        }
        for (const auto& p : s->points) crit.insert(p.v.v);
    }
    if (crit.empty()) crit = {Rat(0), Rat(1, 3), Rat(5, 7)};
    std::vector<Rat> hs(crit.begin(), crit.end());
    std::vector<Rat> out = hs;
    for (size_t i = 0; i < hs.size(); ++i) {
        Rat a = hs[i];
        Rat b = i + 1 < hs.size() ? hs[i + 1] : hs[0] + Rat(1);
        out.push_back(a + (b - a) / Rat(3));
        out.push_back(a + (b - a) * Rat(2, 3));
    }
    return out;
}

// fiberwise check that R = theta_sum(S1, S2)
inline bool theta_sum_matches_fibers(const TorusSet& s1, const TorusSet& s2, const TorusSet& r) {
    for (const Rat& h : probe_heights({&s1, &s2, &r})) {
        CircleSet f1 = horizontal_fiber(s1, Turn(h));
        CircleSet f2 = horizontal_fiber(s2, Turn(h));
        CircleSet fr = horizontal_fiber(r, Turn(h));
        if (!(CircleSet::minkowski(f1, f2) == fr)) return false;
    }
    return true;
}

}  // namespace su2ab::testing
