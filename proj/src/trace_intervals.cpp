#include "su2ab/trace_intervals.hpp"

#include <algorithm>
#include <set>

namespace su2ab {

FoldedAngle fold(const Turn& u) {
    Rat x = u.v;
    Rat half(1, 2);
    if (x <= half) return FoldedAngle(x);
    return FoldedAngle(Rat(1) - x);
}

FoldedSet FoldedSet::normalized(const FoldedSet& raw) {
    // atomic decomposition of [0,1/2] over all boundary values
    if (raw.ivs.empty() && raw.pts.empty()) return {};
    std::set<Rat> bset{Rat(0), Rat(1, 2)};
    for (const auto& iv : raw.ivs) { bset.insert(iv.lo); bset.insert(iv.hi); }
    for (const auto& p : raw.pts) bset.insert(p);
    std::vector<Rat> bs(bset.begin(), bset.end());

    auto covered_pt = [&](const Rat& x) {
        for (const auto& iv : raw.ivs) {
            if (x == iv.lo) { if (iv.c0) return true; continue; }
            if (x == iv.hi) { if (iv.c1) return true; continue; }
            if (iv.lo < x && x < iv.hi) return true;
        }
        for (const auto& p : raw.pts)
            if (p == x) return true;
        return false;
    };
    auto covered_gap = [&](size_t i) {
        Rat mid = (bs[i] + bs[i + 1]) / Rat(2);
        for (const auto& iv : raw.ivs)
            if (iv.lo < mid && mid < iv.hi) return true;
        return false;
    };

    const size_t m = bs.size();
    std::vector<bool> cov(2 * m - 1);
    for (size_t i = 0; i < m; ++i) cov[2 * i] = covered_pt(bs[i]);
    for (size_t i = 0; i + 1 < m; ++i) cov[2 * i + 1] = covered_gap(i);

    FoldedSet out;
    for (size_t k = 0; k < cov.size();) {
        if (!cov[k]) { ++k; continue; }
        size_t j = k;
        while (j < cov.size() && cov[j]) ++j;
        size_t first = k, last = j - 1;
        if (first == last && first % 2 == 0) {
            out.pts.push_back(bs[first / 2]);
        } else {
            Iv iv;
            iv.lo = bs[first / 2];
            iv.c0 = first % 2 == 0;
            iv.hi = last % 2 == 0 ? bs[last / 2] : bs[last / 2 + 1];
            iv.c1 = last % 2 == 0;
            out.ivs.push_back(iv);
        }
        k = j;
    }
    return out;
}

bool operator==(const FoldedSet& a, const FoldedSet& b) {
    FoldedSet x = FoldedSet::normalized(a), y = FoldedSet::normalized(b);
    if (x.ivs.size() != y.ivs.size() || x.pts.size() != y.pts.size()) return false;
    for (size_t i = 0; i < x.ivs.size(); ++i) {
        const auto &u = x.ivs[i], &v = y.ivs[i];
        if (!(u.lo == v.lo && u.hi == v.hi && u.c0 == v.c0 && u.c1 == v.c1)) return false;
    }
    return std::equal(x.pts.begin(), x.pts.end(), y.pts.begin());
}

AngleInterval product_angle_interval(const FoldedAngle& f1, const FoldedAngle& f2) {
    AngleInterval out;
    if (f1.degenerate() || f2.degenerate()) return out;
    Rat lo = f1.v < f2.v ? f2.v - f1.v : f1.v - f2.v;
    Rat s = f1.v + f2.v;
    Rat hi = s < Rat(1) - s ? s : Rat(1) - s;
    if (!(lo < hi)) return out;
    out.nonempty = true;
    out.lo = lo;
    out.hi = hi;
    return out;
}

namespace {

// closed hull [lo,hi] of one component (point -> degenerate hull)
struct Hull { Rat lo, hi; };

// union of I(f1,f2) over a product of two closed hulls; empty only if a hull
// is a single degenerate point
bool hull_product(const Hull& h1, const Hull& h2, Rat& lo, Rat& hi) {
    const Rat half(1, 2);
    if (h1.lo == h1.hi && (h1.lo.num == 0 || h1.lo == half)) return false;
    if (h2.lo == h2.hi && (h2.lo.num == 0 || h2.lo == half)) return false;
    // inf |f1-f2|
    lo = Rat(0);
    if (h2.lo > h1.hi) lo = h2.lo - h1.hi;
    else if (h1.lo > h2.hi) lo = h1.lo - h2.hi;
    // sup min(s, 1-s) for s in [h1.lo+h2.lo, h1.hi+h2.hi]
    Rat slo = h1.lo + h2.lo, shi = h1.hi + h2.hi;
    if (slo <= half && half <= shi) hi = half;
    else if (shi < half) hi = shi;
    else hi = Rat(1) - slo;
    return lo < hi;
}

}  // namespace

FoldedSet admissible_product_set(const FoldedSet& f1r, const FoldedSet& f2r) {
    FoldedSet f1 = FoldedSet::normalized(f1r), f2 = FoldedSet::normalized(f2r);
    std::vector<Hull> h1, h2;
    for (const auto& iv : f1.ivs) h1.push_back({iv.lo, iv.hi});
    for (const auto& p : f1.pts) h1.push_back({p, p});
    for (const auto& iv : f2.ivs) h2.push_back({iv.lo, iv.hi});
    for (const auto& p : f2.pts) h2.push_back({p, p});

    FoldedSet raw;
    for (const auto& a : h1)
        for (const auto& b : h2) {
            Rat lo, hi;
            if (hull_product(a, b, lo, hi)) raw.ivs.push_back({lo, hi, false, false});
        }
    return FoldedSet::normalized(raw);
}

TorusSet unfold_to_arcs(const FoldedSet& fr, const Turn& level) {
    FoldedSet f = FoldedSet::normalized(fr);
    TorusLine l(0, 1, level);
    TorusSet acc;
    CircleSet cs;
    for (const auto& iv : f.ivs) {
        cs.ivs.push_back({Turn(iv.lo), iv.hi - iv.lo, iv.c0, iv.c1});
        cs.ivs.push_back({Turn(Rat(1) - iv.hi), iv.hi - iv.lo, iv.c1, iv.c0});
    }
    for (const auto& p : f.pts) {
        cs.pts.push_back(Turn(p));
        cs.pts.push_back(Turn(Rat(1) - p));
    }
    CircleSet n = CircleSet::normalized(cs);
    if (n.full) { acc.lines.push_back(l); return acc.normalized(); }
    // u-interval -> arc on the horizontal line (u = -t there)
    for (const auto& iv : n.ivs) {
        Turn t0 = Turn(-iv.s.v - iv.len);
        acc.arcs.push_back({l, t0, iv.len, iv.c1, iv.c0});
    }
    for (const auto& p : n.pts) acc.points.push_back({p, level});
    return acc.normalized();
}

FoldedSet fold_circle_set(const CircleSet& crm) {
    CircleSet cs = CircleSet::normalized(crm);
    FoldedSet out;
    if (cs.full) {
        out.ivs.push_back({Rat(0), Rat(1, 2), true, true});
        return out;
    }
    const Rat half(1, 2), one(1);
    for (const auto& iv : cs.ivs) {
        // split the lifted interval [s, s+len] at integer multiples of 1/2
        Rat s = iv.s.v, e = iv.s.v + iv.len;
        Rat cut = s;
        while (cut < e) {
            // next half-integer strictly above cut
            Rat nxt = Rat((cut * Rat(2)).floor() + 1, 2);
            if (nxt > e) nxt = e;
            Rat a = cut, b = nxt;
            bool ca = (a == s) ? iv.c0 : true;
            bool cb = (b == e) ? iv.c1 : true;
            // piece [a,b] lies in one half-period; fold it
            Rat am = a.mod1(), bm = am + (b - a);
            if (bm <= half) {
                out.ivs.push_back({am, bm, ca, cb});
            } else {
                // lies in [1/2, 1]: u -> 1-u reverses
                out.ivs.push_back({one - bm, one - am, cb, ca});
            }
            cut = nxt;
        }
    }
    for (const auto& p : cs.pts) out.pts.push_back(fold(p).v);
    // degenerate zero-length intervals can appear from cuts at endpoints; purge
    FoldedSet clean;
    for (const auto& iv : out.ivs) {
        if (iv.lo == iv.hi) {
            if (iv.c0 || iv.c1) clean.pts.push_back(iv.lo);
        } else clean.ivs.push_back(iv);
    }
    clean.pts.insert(clean.pts.end(), out.pts.begin(), out.pts.end());
    return FoldedSet::normalized(clean);
}

}  // namespace su2ab
