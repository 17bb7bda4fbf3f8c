#include "su2ab/torus_sets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace su2ab {

namespace {

long long llabs2(long long x) { return x < 0 ? -x : x; }

long long lcm2(long long a, long long b) {
    a = llabs2(a); b = llabs2(b);
    return a / std::gcd(a, b) * b;
}

}  // namespace

Slope::Slope(long long a_, long long b_) : a(a_), b(b_) {
    if (a == 0 && b == 0) throw std::domain_error("slope (0,0)");
    long long g = std::gcd(llabs2(a), llabs2(b));
    a /= g; b /= g;
    if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; }
}

std::string Slope::str() const { return std::to_string(a) + "/" + std::to_string(b); }

long long distance(const Slope& s1, const Slope& s2) {
    return llabs2(s1.a * s2.b - s2.a * s1.b);
}

TorusLine::TorusLine(long long a, long long b, const Turn& offset) : n(), c(offset) {
    if (std::gcd(llabs2(a), llabs2(b)) != 1) throw std::domain_error("line normal not primitive");
    if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; c = -c; }
    n.a = a; n.b = b;
}

PointUV TorusLine::base() const {
    long long x0, y0;
    ext_gcd(n.a, n.b, x0, y0);  // a x0 + b y0 = 1
    return {Turn(c.v * Rat(x0)), Turn(c.v * Rat(y0))};
}

PointUV TorusLine::at(const Turn& t) const {
    PointUV b0 = base();
    return {Turn(b0.u.v - t.v * Rat(n.b)), Turn(b0.v.v + t.v * Rat(n.a))};
}

Turn TorusLine::param_of(const PointUV& p) const {
    // with r a - s b = 1:  t = s(px-bx) + r(py-by)
    long long x0, y0;
    ext_gcd(n.a, n.b, x0, y0);
    long long r = x0, s = -y0;
    PointUV b0 = base();
    return Turn(Rat(s) * (p.u.v - b0.u.v) + Rat(r) * (p.v.v - b0.v.v));
}

bool TorusLine::contains(const PointUV& p) const {
    Rat lhs = Rat(n.a) * p.u.v + Rat(n.b) * p.v.v - c.v;
    return lhs.mod1().num == 0;
}

bool Arc::contains_param(const Turn& t) const {
    Rat d = (t.v - t0.v).mod1();
    if (d.num == 0) {
        if (closed0) return true;
        // punctured circle misses exactly t0
        return false;
    }
    if (d == len) return closed1;
    return d < len;
}

// ---------------------------------------------------------------- CircleSet

bool CircleSet::contains(const Turn& t) const {
    if (full) return true;
    for (const auto& iv : ivs) {
        Rat d = (t.v - iv.s.v).mod1();
        if (d.num == 0) { if (iv.c0) return true; else continue; }
        if (d == iv.len) { if (iv.c1) return true; else continue; }
        if (d < iv.len) return true;
    }
    for (const auto& p : pts)
        if (p == t) return true;
    return false;
}

Rat CircleSet::measure() const {
    if (full) return Rat(1);
    Rat m(0);
    for (const auto& iv : ivs) m = m + iv.len;
    return m;
}

CircleSet CircleSet::normalized(const CircleSet& raw) {
    if (raw.full) return {true, {}, {}};
    if (raw.ivs.empty() && raw.pts.empty()) return {};

    // boundary params split the circle into atomic points and open gaps
    std::set<Rat> bset;
    for (const auto& iv : raw.ivs) {
        bset.insert(iv.s.v);
        bset.insert(Turn(iv.s.v + iv.len).v);
    }
    for (const auto& p : raw.pts) bset.insert(p.v);
    std::vector<Rat> bs(bset.begin(), bset.end());
    const size_t m = bs.size();

    auto covered_pt = [&](const Rat& x) {
        Turn t{Turn(x)};
        for (const auto& iv : raw.ivs) {
            Rat d = (t.v - iv.s.v).mod1();
            if (d.num == 0) {
                if (iv.c0) return true;
                if (iv.len == Rat(1)) continue;  // punctured circle misses s
                continue;
            }
            if (d == iv.len) { if (iv.c1) return true; else continue; }
            if (d < iv.len) return true;
        }
        for (const auto& p : raw.pts)
            if (p.v == x) return true;
        return false;
    };
    auto covered_gap = [&](size_t i) {
        // midpoint of the gap after bs[i]
        Rat gap = m == 1 ? Rat(1) : (bs[(i + 1) % m] - bs[i]).mod1();
        if (gap.num == 0) gap = Rat(1);
        Turn mid(bs[i] + gap / Rat(2));
        for (const auto& iv : raw.ivs) {
            Rat d = (mid.v - iv.s.v).mod1();
            if (d.num != 0 && d < iv.len) return true;
            if (d.num == 0 && iv.len == Rat(1)) return false;  // mid==s can't happen: s in bs
        }
        return false;
    };

    // atoms alternate point, gap, point, gap ... (2m atoms, circular)
    std::vector<bool> cov(2 * m);
    for (size_t i = 0; i < m; ++i) {
        cov[2 * i] = covered_pt(bs[i]);
        cov[2 * i + 1] = covered_gap(i);
    }
    bool all = true, none = true;
    for (bool b : cov) { all = all && b; none = none && !b; }
    if (all) return {true, {}, {}};
    if (none) return {};

    CircleSet out;
    const size_t n2 = 2 * m;
    // walk maximal covered runs starting after an uncovered atom
    size_t start = 0;
    while (cov[start]) ++start;
    for (size_t k = 0; k < n2;) {
        size_t i = (start + k) % n2;
        if (!cov[i]) { ++k; continue; }
        size_t j = k;
        while (j < n2 && cov[(start + j) % n2]) ++j;
        size_t first = (start + k) % n2, last = (start + j - 1) % n2;
        // single point atom
        if (first == last && first % 2 == 0) {
            out.pts.push_back(Turn(bs[first / 2]));
        } else {
            Iv iv;
            if (first % 2 == 0) { iv.s = Turn(bs[first / 2]); iv.c0 = true; }
            else { iv.s = Turn(bs[first / 2]); iv.c0 = false; }
            Rat end;
            if (last % 2 == 0) { end = bs[last / 2]; iv.c1 = true; }
            else { end = bs[(last / 2 + 1) % m]; iv.c1 = false; }
            iv.len = (end - iv.s.v).mod1();
            if (iv.len.num == 0) iv.len = Rat(1);
            out.ivs.push_back(iv);
        }
        k = j;
    }
    std::sort(out.ivs.begin(), out.ivs.end(), [](const Iv& x, const Iv& y) { return x.s.v < y.s.v; });
    std::sort(out.pts.begin(), out.pts.end(), [](const Turn& x, const Turn& y) { return x.v < y.v; });
    return out;
}

CircleSet CircleSet::unite(const CircleSet& x, const CircleSet& y) {
    if (x.full || y.full) return {true, {}, {}};
    CircleSet r = x;
    r.ivs.insert(r.ivs.end(), y.ivs.begin(), y.ivs.end());
    r.pts.insert(r.pts.end(), y.pts.begin(), y.pts.end());
    return normalized(r);
}

CircleSet CircleSet::intersect(const CircleSet& x, const CircleSet& y) {
    if (x.full) return normalized(y);
    if (y.full) return normalized(x);
    // atomic decomposition over the union of boundaries
    std::set<Rat> bset;
    for (const auto& s : {x, y}) {
        for (const auto& iv : s.ivs) { bset.insert(iv.s.v); bset.insert(Turn(iv.s.v + iv.len).v); }
        for (const auto& p : s.pts) bset.insert(p.v);
    }
    if (bset.empty()) return {};
    std::vector<Rat> bs(bset.begin(), bset.end());
    const size_t m = bs.size();
    CircleSet raw;
    for (size_t i = 0; i < m; ++i) {
        Turn pt{Turn(bs[i])};
        if (x.contains(pt) && y.contains(pt)) raw.pts.push_back(pt);
        Rat gap = m == 1 ? Rat(1) : (bs[(i + 1) % m] - bs[i]).mod1();
        if (gap.num == 0) gap = Rat(1);
        Turn mid(bs[i] + gap / Rat(2));
        if (x.contains(mid) && y.contains(mid)) {
            Iv iv;
            iv.s = pt; iv.len = gap; iv.c0 = false; iv.c1 = false;
            raw.ivs.push_back(iv);
        }
    }
    return normalized(raw);
}

CircleSet CircleSet::minkowski(const CircleSet& x, const CircleSet& y) {
    if (x.empty() || y.empty()) return {};
    if (x.full || y.full) return {true, {}, {}};
    CircleSet raw;
    for (const auto& i1 : x.ivs)
        for (const auto& i2 : y.ivs) {
            Rat len = i1.len + i2.len;
            Turn s = Turn(i1.s.v + i2.s.v);
            bool c0 = i1.c0 && i2.c0, c1 = i1.c1 && i2.c1;
            if (len > Rat(1) || (len == Rat(1) && (c0 || c1))) { raw.full = true; }
            else raw.ivs.push_back({s, len, c0, c1});
        }
    if (raw.full) return {true, {}, {}};
    for (const auto& i1 : x.ivs)
        for (const auto& p : y.pts)
            raw.ivs.push_back({Turn(i1.s.v + p.v), i1.len, i1.c0, i1.c1});
    for (const auto& p : x.pts)
        for (const auto& i2 : y.ivs)
            raw.ivs.push_back({Turn(p.v + i2.s.v), i2.len, i2.c0, i2.c1});
    for (const auto& p : x.pts)
        for (const auto& q : y.pts) raw.pts.push_back(Turn(p.v + q.v));
    return normalized(raw);
}

bool operator==(const CircleSet& x, const CircleSet& y) {
    CircleSet a = CircleSet::normalized(x), b = CircleSet::normalized(y);
    if (a.full != b.full) return false;
    if (a.ivs.size() != b.ivs.size() || a.pts.size() != b.pts.size()) return false;
    for (size_t i = 0; i < a.ivs.size(); ++i) {
        const auto &u = a.ivs[i], &v = b.ivs[i];
        if (!(u.s == v.s && u.len == v.len && u.c0 == v.c0 && u.c1 == v.c1)) return false;
    }
    for (size_t i = 0; i < a.pts.size(); ++i)
        if (!(a.pts[i] == b.pts[i])) return false;
    return true;
}

// ----------------------------------------------------------------- TorusSet

TorusSet TorusSet::single_point(const PointUV& p) {
    TorusSet s; s.points.push_back(p); return s;
}

TorusSet TorusSet::single_line(const TorusLine& l) {
    TorusSet s; s.lines.push_back(l); return s;
}

bool TorusSet::contains(const PointUV& p) const {
    for (const auto& l : lines)
        if (l.contains(p)) return true;
    for (const auto& a : arcs)
        if (a.line.contains(p) && a.contains_param(a.line.param_of(p))) return true;
    for (const auto& q : points)
        if (q == p) return true;
    return false;
}

TorusSet TorusSet::normalized() const {
    TorusSet out;
    // lines
    std::set<std::pair<std::pair<long long, long long>, Rat>> lineset;
    auto line_key = [](const TorusLine& l) {
        return std::make_pair(std::make_pair(l.n.a, l.n.b), l.c.v);
    };
    for (const auto& l : lines) lineset.insert(line_key(l));
    auto on_listed_line = [&](const TorusLine& l) { return lineset.count(line_key(l)) > 0; };

    // group arcs per carrying line
    std::map<std::pair<std::pair<long long, long long>, Rat>, std::pair<TorusLine, CircleSet>> groups;
    for (const auto& a : arcs) {
        if (a.len.num == 0) continue;
        if (on_listed_line(a.line)) continue;
        auto& g = groups[line_key(a.line)];
        g.first = a.line;
        g.second.ivs.push_back({a.t0, a.len, a.closed0, a.closed1});
    }
    // points: feed the ones on arc-carrying lines into those pools
    std::vector<PointUV> loose;
    for (const auto& p : points) {
        bool placed = false;
        for (auto& [k, g] : groups)
            if (g.first.contains(p)) { g.second.pts.push_back(g.first.param_of(p)); placed = true; }
        if (!placed) loose.push_back(p);
    }

    std::vector<Arc> keptArcs;
    std::vector<PointUV> keptPts;
    for (auto& [k, g] : groups) {
        CircleSet cs = CircleSet::normalized(g.second);
        if (cs.full) { lineset.insert(k); continue; }
        for (const auto& iv : cs.ivs) keptArcs.push_back({g.first, iv.s, iv.len, iv.c0, iv.c1});
        for (const auto& t : cs.pts) keptPts.push_back(g.first.at(t));
    }
    for (const auto& k : lineset) out.lines.push_back(TorusLine(Slope(k.first.first, k.first.second), Turn(k.second)));

    // purge arcs that landed on promoted lines
    for (const auto& a : keptArcs) {
        bool drop = false;
        for (const auto& l : out.lines)
            if (l == a.line) { drop = true; break; }
        if (!drop) out.arcs.push_back(a);
    }

    // points: drop those on any line or inside any arc
    keptPts.insert(keptPts.end(), loose.begin(), loose.end());
    std::set<std::pair<Rat, Rat>> seen;
    for (const auto& p : keptPts) {
        bool drop = false;
        for (const auto& l : out.lines)
            if (l.contains(p)) { drop = true; break; }
        if (!drop)
            for (const auto& a : out.arcs)
                if (a.line.contains(p) && a.contains_param(a.line.param_of(p))) { drop = true; break; }
        if (!drop && seen.insert({p.u.v, p.v.v}).second) out.points.push_back(p);
    }

    std::sort(out.lines.begin(), out.lines.end());
    std::sort(out.arcs.begin(), out.arcs.end(), [](const Arc& x, const Arc& y) {
        if (x.line != y.line) return x.line < y.line;
        return x.t0.v < y.t0.v;
    });
    std::sort(out.points.begin(), out.points.end());
    return out;
}

bool operator==(const TorusSet& x, const TorusSet& y) {
    TorusSet a = x.normalized(), b = y.normalized();
    if (a.lines.size() != b.lines.size() || a.arcs.size() != b.arcs.size() ||
        a.points.size() != b.points.size())
        return false;
    for (size_t i = 0; i < a.lines.size(); ++i)
        if (!(a.lines[i] == b.lines[i])) return false;
    for (size_t i = 0; i < a.arcs.size(); ++i) {
        const auto &u = a.arcs[i], &v = b.arcs[i];
        if (!(u.line == v.line && u.t0 == v.t0 && u.len == v.len && u.closed0 == v.closed0 &&
              u.closed1 == v.closed1))
            return false;
    }
    for (size_t i = 0; i < a.points.size(); ++i)
        if (!(a.points[i] == b.points[i])) return false;
    return true;
}

TorusSet character_lines(const Slope& slope, long long order) {
    if (order < 1) throw std::domain_error("order must be >= 1");
    TorusSet s;
    for (long long k = 0; k < order; ++k)
        s.lines.push_back(TorusLine(slope, Turn(k, order)));
    return s.normalized();
}

// ------------------------------------------------------------ theta_sum

namespace {

// u-circle interval carried by an arc on a horizontal line (u decreases with t)
CircleSet::Iv horiz_arc_uiv(const Arc& a) {
    Rat bu = a.line.base().u.v;  // u(t) = bu - t
    Turn s = Turn(bu - a.t0.v - a.len);
    return {s, a.len, a.closed1, a.closed0};
}

Arc uiv_to_horiz_arc(const Turn& height, const CircleSet::Iv& iv) {
    TorusLine l(0, 1, height);
    Rat bu = l.base().u.v;
    Turn t0 = Turn(bu - iv.s.v - iv.len);
    return {l, t0, iv.len, iv.c1, iv.c0};
}

void emit_circleset_on_horizontal(TorusSet& acc, const Turn& height, const CircleSet& cs) {
    CircleSet n = CircleSet::normalized(cs);
    if (n.full) { acc.lines.push_back(TorusLine(0, 1, height)); return; }
    for (const auto& iv : n.ivs) acc.arcs.push_back(uiv_to_horiz_arc(height, iv));
    for (const auto& p : n.pts) acc.points.push_back({Turn(p), height});
}

// params of a non-horizontal arc's carrier line at a given height
std::vector<Turn> line_params_at_height(const TorusLine& l, const Turn& h) {
    // v(t) = by + a t = h  (a != 0)
    std::vector<Turn> out;
    Rat by = l.base().v.v;
    long long a = l.n.a;
    Rat t0 = (h.v - by) / Rat(a);
    long long aa = a < 0 ? -a : a;
    for (long long k = 0; k < aa; ++k) out.push_back(Turn(t0 + Rat(k, aa)));
    return out;
}

struct ImageMap {
    TorusLine line;
    Rat kappa;  // d(result param)/d(source param)
};

// line family of a fiberwise sum of two non-horizontal carriers
Slope sum_normal(const Slope& n1, const Slope& n2) {
    return Slope(n1.a * n2.a, n1.b * n2.a + n2.b * n1.a);
}

// emit image of an affine curve E(t), t in [t0, t0+len] with closure flags,
// onto the torus; E given by endpoint evaluation and constant velocity ratio kappa
void emit_affine_arc(TorusSet& acc, const TorusLine& l, const Rat& kappa, const PointUV& e0,
                     const PointUV& e1, const Rat& len, bool c0, bool c1) {
    Rat newlen = kappa < Rat(0) ? -kappa * len : kappa * len;
    if (newlen > Rat(1) || (newlen == Rat(1) && (c0 || c1))) {
        acc.lines.push_back(l);
        return;
    }
    if (newlen.num == 0) { acc.points.push_back(e0); return; }
    if (kappa > Rat(0))
        acc.arcs.push_back({l, l.param_of(e0), newlen, c0, c1});
    else
        acc.arcs.push_back({l, l.param_of(e1), newlen, c1, c0});
}

void sum_line_line(TorusSet& acc, const TorusLine& l1, const TorusLine& l2) {
    if (l1.horizontal() && l2.horizontal()) {
        if (l1.c == l2.c) acc.lines.push_back(l1);
        return;
    }
    if (l1.horizontal()) { acc.lines.push_back(l1); return; }  // other meets every height
    if (l2.horizontal()) { acc.lines.push_back(l2); return; }
    long long a1 = l1.n.a, b1 = l1.n.b, a2 = l2.n.a, b2 = l2.n.b;
    long long L = lcm2(a1, a2);
    long long beta = (L / a1) * b1 + (L / a2) * b2;
    Rat gamma = l1.c.v * Rat(L / a1) + l2.c.v * Rat(L / a2);
    long long g = std::gcd(L, beta < 0 ? -beta : beta);
    if (g == 0) g = L;
    for (long long j = 0; j < g; ++j)
        acc.lines.push_back(TorusLine(L / g, beta / g, Turn((gamma + Rat(j)) / Rat(g))));
}

void sum_line_arc(TorusSet& acc, const TorusLine& l1, const Arc& a2) {
    if (l1.horizontal()) {
        if (a2.line.horizontal()) {
            if (a2.line.c == l1.c) acc.lines.push_back(l1);
            return;
        }
        for (const auto& t : line_params_at_height(a2.line, l1.c))
            if (a2.contains_param(t)) { acc.lines.push_back(l1); return; }
        return;
    }
    if (a2.line.horizontal()) {
        Turn h = a2.line.c;
        CircleSet::Iv uiv = horiz_arc_uiv(a2);
        CircleSet shifted;
        // fiber of l1 at height h: |a1| points
        Rat ubase = (l1.c.v - Rat(l1.n.b) * h.v) / Rat(l1.n.a);
        long long aa = llabs2(l1.n.a);
        for (long long k = 0; k < aa; ++k)
            shifted.ivs.push_back({Turn(uiv.s.v + ubase + Rat(k, aa)), uiv.len, uiv.c0, uiv.c1});
        emit_circleset_on_horizontal(acc, h, shifted);
        return;
    }
    // both non-horizontal
    long long a1 = l1.n.a, b1 = l1.n.b, a2n = a2.line.n.a, b2 = a2.line.n.b;
    Slope ns = sum_normal(l1.n, a2.line.n);
    long long g = std::gcd(llabs2(a1 * a2n), llabs2(b1 * a2n + b2 * a1));
    Rat kappa = Rat((a2n < 0 ? -1 : 1) * g, llabs2(a1));
    long long aa = llabs2(a1);
    for (long long k = 0; k < aa; ++k) {
        auto eval = [&](const Turn& t) -> PointUV {
            PointUV p2 = a2.line.at(t);
            Rat u1 = (l1.c.v - Rat(b1) * p2.v.v) / Rat(a1) + Rat(k, aa);
            return {Turn(u1 + p2.u.v), p2.v};
        };
        PointUV e0 = eval(a2.t0), e1 = eval(a2.t1());
        Turn off = Turn(Rat(ns.a) * e0.u.v + Rat(ns.b) * e0.v.v);
        TorusLine lr(ns, off);
        emit_affine_arc(acc, lr, kappa, e0, e1, a2.len, a2.closed0, a2.closed1);
    }
}

// intersection of the affine image phi([s, s+L]) with circular interval [s2, s2+L2]
struct ParamIv {
    Rat a, b;     // interval [a, b] in the universal cover, a <= b
    bool c0, c1;
};

void sum_arc_arc(TorusSet& acc, const Arc& x, const Arc& y) {
    if (x.line.horizontal() && y.line.horizontal()) {
        if (!(x.line.c == y.line.c)) return;
        CircleSet cx, cy;
        cx.ivs.push_back(horiz_arc_uiv(x));
        cy.ivs.push_back(horiz_arc_uiv(y));
        emit_circleset_on_horizontal(acc, x.line.c, CircleSet::minkowski(cx, cy));
        return;
    }
    if (x.line.horizontal() || y.line.horizontal()) {
        const Arc& h = x.line.horizontal() ? x : y;
        const Arc& o = x.line.horizontal() ? y : x;
        Turn height = h.line.c;
        CircleSet::Iv uiv = horiz_arc_uiv(h);
        CircleSet shifted;
        for (const auto& t : line_params_at_height(o.line, height))
            if (o.contains_param(t)) {
                Rat u1 = o.line.at(t).u.v;
                shifted.ivs.push_back({Turn(uiv.s.v + u1), uiv.len, uiv.c0, uiv.c1});
            }
        emit_circleset_on_horizontal(acc, height, shifted);
        return;
    }
    // general case: parametrize by t1 on x, solve height matching on y
    long long a1 = x.line.n.a, b1 = x.line.n.b, a2 = y.line.n.a, b2 = y.line.n.b;
    Rat dB = x.line.base().v.v - y.line.base().v.v;
    Slope ns = sum_normal(x.line.n, y.line.n);
    long long g = std::gcd(llabs2(a1 * a2), llabs2(b1 * a2 + b2 * a1));
    Rat kappa = Rat((a1 < 0 ? -1 : 1) * g, llabs2(a2));
    long long aa2 = llabs2(a2);

    // x params in cover: [s, s+L]
    Rat s = x.t0.v, L = x.len;
    for (long long k = 0; k < aa2; ++k) {
        // t2 = phi(t1) = (dB + a1 t1)/a2 + k/|a2|
        auto phi = [&](const Rat& t1) { return (dB + Rat(a1) * t1) / Rat(a2) + Rat(k, aa2); };
        auto phi_inv = [&](const Rat& t2) { return ((t2 - Rat(k, aa2)) * Rat(a2) - dB) / Rat(a1); };
        Rat pa = phi(s), pb = phi(s + L);
        Rat lo = pa < pb ? pa : pb, hi = pa < pb ? pb : pa;
        bool increasing = Rat(a1) / Rat(a2) > Rat(0);
        // lifted copies of y's param interval [s2+m, s2+L2+m] meeting [lo,hi]
        Rat s2 = y.t0.v, L2 = y.len;
        long long mlo = (lo - s2 - L2).floor();
        long long mhi = (hi - s2).floor() + 1;
        for (long long m = mlo; m <= mhi; ++m) {
            Rat ya = s2 + Rat(m), yb = s2 + L2 + Rat(m);
            // pull back to t1
            Rat t1a = phi_inv(ya), t1b = phi_inv(yb);
            bool ca = y.closed0, cb = y.closed1;
            if (!increasing) { std::swap(t1a, t1b); std::swap(ca, cb); }
            // clip with [s, s+L] and x's flags
            Rat A = t1a, B = t1b; bool CA = ca, CB = cb;
            if (A < s) { A = s; CA = x.closed0; }
            else if (A == s) { CA = CA && x.closed0; }
            if (B > s + L) { B = s + L; CB = x.closed1; }
            else if (B == s + L) { CB = CB && x.closed1; }
            if (A > B) continue;
            if (A == B && !(CA && CB)) continue;
            auto eval = [&](const Rat& t1) -> PointUV {
                PointUV p1 = x.line.at(Turn(t1));
                PointUV p2 = y.line.at(Turn(phi(t1)));
                return {Turn(p1.u.v + p2.u.v), p1.v};
            };
            PointUV e0 = eval(A), e1 = eval(B);
            if (A == B) { acc.points.push_back(e0); continue; }
            Turn off = Turn(Rat(ns.a) * e0.u.v + Rat(ns.b) * e0.v.v);
            TorusLine lr(ns, off);
            emit_affine_arc(acc, lr, kappa, e0, e1, B - A, CA, CB);
        }
    }
}

void sum_point_line(TorusSet& acc, const PointUV& p, const TorusLine& l) {
    if (l.horizontal()) {
        if (l.c == p.v) acc.lines.push_back(l);
        return;
    }
    Rat ubase = (l.c.v - Rat(l.n.b) * p.v.v) / Rat(l.n.a);
    long long aa = llabs2(l.n.a);
    for (long long k = 0; k < aa; ++k)
        acc.points.push_back({Turn(p.u.v + ubase + Rat(k, aa)), p.v});
}

void sum_point_arc(TorusSet& acc, const PointUV& p, const Arc& a) {
    if (a.line.horizontal()) {
        if (!(a.line.c == p.v)) return;
        CircleSet::Iv uiv = horiz_arc_uiv(a);
        CircleSet shifted;
        shifted.ivs.push_back({Turn(uiv.s.v + p.u.v), uiv.len, uiv.c0, uiv.c1});
        emit_circleset_on_horizontal(acc, p.v, shifted);
        return;
    }
    for (const auto& t : line_params_at_height(a.line, p.v))
        if (a.contains_param(t)) acc.points.push_back({Turn(p.u.v + a.line.at(t).u.v), p.v});
}

}  // namespace

TorusSet theta_sum(const TorusSet& s1n, const TorusSet& s2n) {
    TorusSet s1 = s1n.normalized(), s2 = s2n.normalized();
    TorusSet acc;
    for (const auto& l1 : s1.lines) {
        for (const auto& l2 : s2.lines) sum_line_line(acc, l1, l2);
        for (const auto& a2 : s2.arcs) sum_line_arc(acc, l1, a2);
        for (const auto& p2 : s2.points) sum_point_line(acc, p2, l1);
    }
    for (const auto& a1 : s1.arcs) {
        for (const auto& l2 : s2.lines) sum_line_arc(acc, l2, a1);
        for (const auto& a2 : s2.arcs) sum_arc_arc(acc, a1, a2);
        for (const auto& p2 : s2.points) sum_point_arc(acc, p2, a1);
    }
    for (const auto& p1 : s1.points) {
        for (const auto& l2 : s2.lines) sum_point_line(acc, p1, l2);
        for (const auto& a2 : s2.arcs) sum_point_arc(acc, p1, a2);
        for (const auto& p2 : s2.points)
            if (p1.v == p2.v) acc.points.push_back({Turn(p1.u.v + p2.u.v), p1.v});
    }
    return acc.normalized();
}

// --------------------------------------------------- affine maps of the torus

TorusSet apply_matrix(const TorusSet& s, const long long m[2][2], const Turn& du, const Turn& dv) {
    long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det != 1 && det != -1) throw std::domain_error("matrix must have det +-1");
    // inverse transpose times det sign: integer matrix with M^T * nt = n
    long long nt[2][2] = {{det * m[1][1], det * -m[1][0]}, {det * -m[0][1], det * m[0][0]}};
    auto map_pt = [&](const PointUV& p) -> PointUV {
        return {Turn(Rat(m[0][0]) * p.u.v + Rat(m[0][1]) * p.v.v + du.v),
                Turn(Rat(m[1][0]) * p.u.v + Rat(m[1][1]) * p.v.v + dv.v)};
    };
    auto map_line = [&](const TorusLine& l) -> TorusLine {
        long long a2 = nt[0][0] * l.n.a + nt[0][1] * l.n.b;
        long long b2 = nt[1][0] * l.n.a + nt[1][1] * l.n.b;
        Rat c2 = l.c.v + Rat(a2) * du.v + Rat(b2) * dv.v;
        return TorusLine(a2, b2, Turn(c2));
    };
    TorusSet out;
    for (const auto& l : s.lines) out.lines.push_back(map_line(l));
    for (const auto& a : s.arcs) {
        TorusLine l2 = map_line(a.line);
        // orientation: M * dir vs dir of image
        long long dx = -m[0][0] * a.line.n.b + m[0][1] * a.line.n.a;
        long long dy = -m[1][0] * a.line.n.b + m[1][1] * a.line.n.a;
        bool pos = (dx == -l2.n.b && dy == l2.n.a);
        if (!pos && !(dx == l2.n.b && dy == -l2.n.a))
            throw std::logic_error("arc image direction mismatch");
        PointUV e0 = map_pt(a.start_point()), e1 = map_pt(a.end_point());
        if (pos)
            out.arcs.push_back({l2, l2.param_of(e0), a.len, a.closed0, a.closed1});
        else
            out.arcs.push_back({l2, l2.param_of(e1), a.len, a.closed1, a.closed0});
    }
    for (const auto& p : s.points) out.points.push_back(map_pt(p));
    return out.normalized();
}

TorusSet jewel(const TorusSet& s) {
    static const long long neg[2][2] = {{-1, 0}, {0, -1}};
    return apply_matrix(s, neg);
}

TorusSet translate(const TorusSet& s, const Turn& du, const Turn& dv) {
    static const long long id[2][2] = {{1, 0}, {0, 1}};
    return apply_matrix(s, id, du, dv);
}

TorusSet change_basis(const TorusSet& s, const long long m[2][2]) {
    const long long mt[2][2] = {{m[0][0], m[1][0]}, {m[0][1], m[1][1]}};
    return apply_matrix(s, mt);
}

// -------------------------------------------------------------- intersection

std::vector<PointUV> line_line_points(const TorusLine& l1, const TorusLine& l2) {
    long long D = l1.n.a * l2.n.b - l2.n.a * l1.n.b;
    std::vector<PointUV> out;
    if (D == 0) return out;
    long long AD = llabs2(D);
    std::set<std::pair<Rat, Rat>> seen;
    for (long long i = 0; i < AD; ++i)
        for (long long j = 0; j < AD; ++j) {
            Rat c1 = l1.c.v + Rat(i), c2 = l2.c.v + Rat(j);
            Rat u = (Rat(l2.n.b) * c1 - Rat(l1.n.b) * c2) / Rat(D);
            Rat v = (Rat(-l2.n.a) * c1 + Rat(l1.n.a) * c2) / Rat(D);
            PointUV p{Turn(u), Turn(v)};
            if (seen.insert({p.u.v, p.v.v}).second) out.push_back(p);
        }
    return out;
}

TorusSet intersect(const TorusSet& s1n, const TorusSet& s2n) {
    TorusSet s1 = s1n.normalized(), s2 = s2n.normalized();
    TorusSet acc;
    auto add_pt_if = [&](const PointUV& p, const TorusSet& other) {
        if (other.contains(p)) acc.points.push_back(p);
    };
    for (const auto& l1 : s1.lines) {
        for (const auto& l2 : s2.lines) {
            if (l1 == l2) acc.lines.push_back(l1);
            else if (l1.n == l2.n) continue;
            else for (const auto& p : line_line_points(l1, l2)) acc.points.push_back(p);
        }
        for (const auto& a2 : s2.arcs) {
            if (a2.line == l1) acc.arcs.push_back(a2);
            else if (a2.line.n == l1.n) continue;
            else
                for (const auto& p : line_line_points(l1, a2.line))
                    if (a2.contains_param(a2.line.param_of(p))) acc.points.push_back(p);
        }
        for (const auto& p2 : s2.points)
            if (l1.contains(p2)) acc.points.push_back(p2);
    }
    for (const auto& a1 : s1.arcs) {
        for (const auto& l2 : s2.lines) {
            if (a1.line == l2) acc.arcs.push_back(a1);
            else if (a1.line.n == l2.n) continue;
            else
                for (const auto& p : line_line_points(l2, a1.line))
                    if (a1.contains_param(a1.line.param_of(p))) acc.points.push_back(p);
        }
        for (const auto& a2 : s2.arcs) {
            if (a1.line == a2.line) {
                CircleSet c1, c2;
                c1.ivs.push_back({a1.t0, a1.len, a1.closed0, a1.closed1});
                c2.ivs.push_back({a2.t0, a2.len, a2.closed0, a2.closed1});
                CircleSet c = CircleSet::intersect(c1, c2);
                for (const auto& iv : c.ivs) acc.arcs.push_back({a1.line, iv.s, iv.len, iv.c0, iv.c1});
                for (const auto& t : c.pts) acc.points.push_back(a1.line.at(t));
            } else if (a1.line.n == a2.line.n) {
                continue;
            } else {
                for (const auto& p : line_line_points(a1.line, a2.line))
                    if (a1.contains_param(a1.line.param_of(p)) &&
                        a2.contains_param(a2.line.param_of(p)))
                        acc.points.push_back(p);
            }
        }
        for (const auto& p2 : s2.points)
            if (a1.line.contains(p2) && a1.contains_param(a1.line.param_of(p2)))
                acc.points.push_back(p2);
    }
    for (const auto& p1 : s1.points) add_pt_if(p1, s2);
    return acc.normalized();
}

bool is_empty(const TorusSet& s) { return s.normalized().empty(); }

std::optional<PointUV> witness_point(const TorusSet& sn) {
    TorusSet s = sn.normalized();
    if (!s.points.empty()) return s.points.front();
    if (!s.arcs.empty()) {
        const Arc& a = s.arcs.front();
        return a.line.at(Turn(a.t0.v + a.len / Rat(2)));
    }
    if (!s.lines.empty()) return s.lines.front().base();
    return std::nullopt;
}

CircleSet restrict_to_line(const TorusSet& sn, const TorusLine& l) {
    TorusSet s = sn.normalized();
    CircleSet raw;
    for (const auto& l2 : s.lines) {
        if (l2 == l) return {true, {}, {}};
        if (l2.n == l.n) continue;
        for (const auto& p : line_line_points(l, l2)) raw.pts.push_back(l.param_of(p));
    }
    for (const auto& a : s.arcs) {
        if (a.line == l) raw.ivs.push_back({a.t0, a.len, a.closed0, a.closed1});
        else if (a.line.n == l.n) continue;
        else
            for (const auto& p : line_line_points(l, a.line))
                if (a.contains_param(a.line.param_of(p))) raw.pts.push_back(l.param_of(p));
    }
    for (const auto& p : s.points)
        if (l.contains(p)) raw.pts.push_back(l.param_of(p));
    return CircleSet::normalized(raw);
}

CircleSet horizontal_fiber(const TorusSet& s, const Turn& height) {
    CircleSet cs = restrict_to_line(s, TorusLine(0, 1, height));
    if (cs.full) return cs;
    // param t <-> u = -t on the horizontal line
    CircleSet out;
    for (const auto& iv : cs.ivs) out.ivs.push_back({Turn(-iv.s.v - iv.len), iv.len, iv.c1, iv.c0});
    for (const auto& p : cs.pts) out.pts.push_back(Turn(-p.v));
    return CircleSet::normalized(out);
}

Rat measure_on_line(const TorusSet& s, const TorusLine& l) {
    return restrict_to_line(s, l).measure();
}

TorusSet punctured_line(const TorusLine& l, const std::vector<Turn>& removed) {
    TorusSet out;
    if (removed.empty()) { out.lines.push_back(l); return out; }
    std::set<Rat> ps;
    for (const auto& t : removed) ps.insert(t.v);
    std::vector<Rat> v(ps.begin(), ps.end());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i];
        Rat len = (v[(i + 1) % v.size()] - s).mod1();
        if (len.num == 0) len = Rat(1);
        out.arcs.push_back({l, Turn(s), len, false, false});
    }
    return out.normalized();
}

}  // namespace su2ab
