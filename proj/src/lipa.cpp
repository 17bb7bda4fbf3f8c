#include "su2ab/lipa.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace su2ab {

std::vector<LipaPath> find_lipa_paths(const BoundaryTriple& t) {
    std::vector<LipaPath> out;
    TorusSet H = t.H.normalized();
    TorusSet A = t.A.normalized();

    // candidate carrier lines
    std::vector<TorusLine> carriers;
    auto add_carrier = [&](const TorusLine& l) {
        for (const auto& c : carriers)
            if (c == l) return;
        carriers.push_back(l);
    };
    for (const auto& l : H.lines) add_carrier(l);
    for (const auto& a : H.arcs) add_carrier(a.line);

    for (const auto& l : carriers) {
        bool full_line = false;
        for (const auto& hl : H.lines)
            if (hl == l) { full_line = true; break; }
        // arcs of H cannot lie inside A: A is a union of full lines, so an
        // arc is inside A only when its carrier line is one of them
        bool carrier_in_A = false;
        for (const auto& al : A.lines)
            if (al == l) { carrier_in_A = true; break; }
        if (carrier_in_A) continue;

        CircleSet a_on_l = restrict_to_line(A, l);
        if (full_line) {
            if (a_on_l.empty()) continue;
            Turn p = !a_on_l.pts.empty() ? a_on_l.pts.front()
                                         : a_on_l.ivs.front().s;
            LipaPath lp;
            lp.whole_line = true;
            lp.line = l;
            lp.arc = {l, p, Rat(1), false, false};
            lp.endpoint0 = lp.endpoint1 = l.at(p);
            out.push_back(lp);
            continue;
        }
        for (const auto& a : H.arcs) {
            if (!(a.line == l)) continue;
            PointUV e0 = a.start_point(), e1 = a.end_point();
            if (!A.contains(e0) || !A.contains(e1)) continue;
            LipaPath lp;
            lp.arc = a;
            lp.line = l;
            lp.endpoint0 = e0;
            lp.endpoint1 = e1;
            out.push_back(lp);
        }
    }
    return out;
}

Rat weight_mu(const BoundaryTriple& t) {
    auto paths = find_lipa_paths(t);
    Rat best(0);
    std::set<std::pair<std::pair<long long, long long>, Rat>> seen;
    for (const auto& lp : paths) {
        auto key = std::make_pair(std::make_pair(lp.line.n.a, lp.line.n.b), lp.line.c.v);
        if (!seen.insert(key).second) continue;
        Rat m = measure_on_line(t.H, lp.line);
        if (m > best) best = m;
    }
    return best;
}

TableEntry table_value(long long delta, long long n, long long p, long long q, const Rat& c) {
    if (!(n < 0 && -delta < n)) throw std::domain_error("need -delta < n < 0");
    if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1) throw std::domain_error("p/q not coprime");
    if (std::gcd(n < 0 ? -n : n, delta) != 1) throw std::domain_error("n, delta not coprime");
    TableEntry e;
    e.delta = delta; e.n = n; e.p = p; e.q = q; e.c = c;
    e.m = p * n - delta * q;
    if (e.m < 0) e.m = -e.m;
    if (e.m == 0) throw std::domain_error("degenerate line");
    TorusLine L(p, q, Turn(c));
    TorusLine A2(delta, n, Turn(Rat(0)));
    e.l = 0;
    const Rat half(1, 2);
    for (const Rat& uu : {Rat(0), half})
        for (const Rat& vv : {Rat(0), half}) {
            PointUV pt{Turn(uu), Turn(vv)};
            if (L.contains(pt) && A2.contains(pt)) ++e.l;
        }
    Rat raw = Rat(e.m - 2 - e.l, e.m);
    e.value = raw < Rat(0) ? Rat(0) : raw;
    e.flagged = e.value >= Rat(2, 3);
    return e;
}

std::pair<TableGrid, TableGrid> generate_tables() {
    std::vector<std::pair<long long, long long>> rows = {
        {3, -1}, {3, -2}, {4, -1}, {4, -3}, {5, -1}, {5, -2}, {5, -3}, {5, -4}};
    std::vector<std::pair<long long, long long>> cols = {
        {-2, 1}, {2, 1}, {-1, 1}, {1, 1}, {-1, 2}, {1, 2}, {0, 1}, {1, 0}};
    TableGrid t0, t1;
    t0.rows = t1.rows = rows;
    t0.cols = t1.cols = cols;
    for (const auto& [d, n] : rows) {
        std::vector<TableEntry> r0, r1;
        for (const auto& [p, q] : cols) {
            r0.push_back(table_value(d, n, p, q, Rat(0)));
            r1.push_back(table_value(d, n, p, q, Rat(1, 2)));
        }
        t0.cells.push_back(r0);
        t1.cells.push_back(r1);
    }
    return {t0, t1};
}

}  // namespace su2ab
