#include "su2ab/pieces.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace su2ab {

namespace {

Presentation solid_torus_presentation(const Slope& meridian) {
    // pi_1 = <c>; boundary x -> c^{-q}, h -> c^{p}, so the meridian
    // x^p h^q maps to the trivial element.
    Presentation pres;
    pres.gens = {"c"};
    PortWords port;
    port.x = Word{{0, 1}}.power(-meridian.b);
    port.h = Word{{0, 1}}.power(meridian.a);
    pres.ports.push_back(port);
    return pres;
}

// C3 = <x1, x2, x3, h | [xj,h], x1 x2 x3^{-1}> amalgamated with the two
// filled sides along ports 1 and 2 (identity identifications).
Presentation c3_glued_presentation(const Presentation& p1, int port1, const Presentation& p2,
                                   int port2, PortWords& out_port) {
    Presentation out;
    out.gens = p1.gens;
    const int off1 = 0;
    (void)off1;
    const int off2 = static_cast<int>(out.gens.size());
    for (const auto& g : p2.gens) out.gens.push_back(g + "'");
    const int ix3 = static_cast<int>(out.gens.size());
    out.gens.push_back("x3");
    const int ih = ix3 + 1;
    out.gens.push_back("hf");

    auto shift = [&](const Word& w, int off) {
        Word r;
        for (const auto& [g, e] : w.syl) r.syl.push_back({g + off, e});
        return r;
    };
    out.relators = p1.relators;
    for (const auto& r : p2.relators) out.relators.push_back(shift(r, off2));

    Word x1 = p1.ports[port1].x;
    Word h1 = p1.ports[port1].h;
    Word x2 = shift(p2.ports[port2].x, off2);
    Word h2 = shift(p2.ports[port2].h, off2);
    Word x3w{{ix3, 1}}, hw{{ih, 1}};
    // h identified across the three tori
    out.relators.push_back(h1.concat(hw.inverse()));
    out.relators.push_back(h2.concat(hw.inverse()));
    // x1 x2 = x3
    out.relators.push_back(x1.concat(x2).concat(x3w.inverse()));
    // the fiber is central in C3
    out.relators.push_back(x3w.concat(hw).concat(x3w.inverse()).concat(hw.inverse()));
    out.relators.push_back(x1.concat(hw).concat(x1.inverse()).concat(hw.inverse()));
    out.relators.push_back(x2.concat(hw).concat(x2.inverse()).concat(hw.inverse()));

    out_port.x = x3w;
    out_port.h = hw;
    out.ports.push_back(out_port);
    return out;
}

// C2 = <x1, x2, z, h | [xj,h], x1 x2 z^2, z h z^{-1} h> with the filled side
// along port 1.
Presentation c2_glued_presentation(const Presentation& p1, int port1, PortWords& out_port) {
    Presentation out;
    out.gens = p1.gens;
    const int ix2 = static_cast<int>(out.gens.size());
    out.gens.push_back("x2");
    const int iz = ix2 + 1;
    out.gens.push_back("z");
    const int ih = iz + 1;
    out.gens.push_back("hf");

    out.relators = p1.relators;
    Word x1 = p1.ports[port1].x;
    Word h1 = p1.ports[port1].h;
    Word x2w{{ix2, 1}}, zw{{iz, 1}}, hw{{ih, 1}};
    out.relators.push_back(h1.concat(hw.inverse()));
    out.relators.push_back(x1.concat(x2w).concat(zw).concat(zw));
    out.relators.push_back(zw.concat(hw).concat(zw.inverse()).concat(hw));
    out.relators.push_back(x1.concat(hw).concat(x1.inverse()).concat(hw.inverse()));
    out.relators.push_back(x2w.concat(hw).concat(x2w.inverse()).concat(hw.inverse()));

    out_port.x = x2w;
    out_port.h = hw;
    out.ports.push_back(out_port);
    return out;
}

TorusSet union_sets(const TorusSet& a, const TorusSet& b) {
    TorusSet u = a;
    u.lines.insert(u.lines.end(), b.lines.begin(), b.lines.end());
    u.arcs.insert(u.arcs.end(), b.arcs.begin(), b.arcs.end());
    u.points.insert(u.points.end(), b.points.begin(), b.points.end());
    return u.normalized();
}

}  // namespace

TorusSet negate_u(const TorusSet& s) {
    static const long long m[2][2] = {{-1, 0}, {0, 1}};
    return apply_matrix(s, m);
}

void validate_coefficients(const SeifertCoefficients& coeffs) {
    for (const auto& c : coeffs) {
        if (c.p < 1) throw std::domain_error("Seifert coefficient needs p >= 1");
        if (std::gcd(c.p < 0 ? -c.p : c.p, c.q < 0 ? -c.q : c.q) != 1)
            throw std::domain_error("Seifert coefficient not coprime");
    }
}

BoundaryTriple solid_torus_triple(const Slope& meridian) {
    BoundaryTriple t;
    t.A = character_lines(meridian, 1);
    t.h_exact = true;
    t.pres = solid_torus_presentation(meridian);
    t.port = 0;
    return t;
}

BoundaryTriple c3_compose(const BoundaryTriple& t1, const BoundaryTriple& t2) {
    if (t1.basis_h != t2.basis_h)
        throw std::domain_error("c3_compose: fiber basis mismatch (" + t1.basis_h +
                                " vs " + t2.basis_h + ")");
    BoundaryTriple out;
    out.basis_x = "x3";
    out.basis_h = t1.basis_h;

    out.A = theta_sum(t1.A, t2.A);

    TorusSet h = theta_sum(t1.A, t2.H);
    h = union_sets(h, theta_sum(t1.H, t2.A));
    h = union_sets(h, theta_sum(t1.H, t2.H));
    h = union_sets(h, theta_sum(t1.P, t2.P));

    TorusSet T1 = union_sets(t1.A, t1.H);
    TorusSet T2 = union_sets(t2.A, t2.H);
    for (const Rat& eps : {Rat(0), Rat(1, 2)}) {
        FoldedSet s1 = fold_circle_set(horizontal_fiber(T1, Turn(eps)));
        FoldedSet s2 = fold_circle_set(horizontal_fiber(T2, Turn(eps)));
        FoldedSet j = admissible_product_set(s1, s2);
        h = union_sets(h, unfold_to_arcs(j, Turn(eps)));
    }
    out.H = h;

    PortWords port;
    port.x_label = "x3";
    port.h_label = out.basis_h;
    out.pres = c3_glued_presentation(t1.pres, t1.port, t2.pres, t2.port, port);
    out.port = 0;
    out.P = central_extension_set(out.pres, 0);
    out.h_exact = t1.h_exact && t2.h_exact;
    return out;
}

BoundaryTriple c2_compose(const BoundaryTriple& t1) {
    BoundaryTriple out;
    out.basis_x = "x2";
    out.basis_h = t1.basis_h;

    const TorusLine lv0(0, 1, Turn(Rat(0)));
    const TorusLine lvh(0, 1, Turn(Rat(1, 2)));

    // A = {psi2 = 0}, plus {psi2 = pi} exactly when A1 meets {psi1 = pi}
    out.A.lines.push_back(lv0);
    if (!is_empty(intersect(t1.A, TorusSet::single_line(lvh)))) out.A.lines.push_back(lvh);
    out.A = out.A.normalized();

    TorusSet T1 = union_sets(t1.A, t1.H);

    // H_{Y,t}: T1 off the central levels, mapped by (u,v) -> (1/2 - u, v)
    TorusSet offlevels;
    for (const auto& l : T1.lines) {
        if (l.horizontal()) {
            if (l.c.is_central()) continue;
            offlevels.lines.push_back(l);
            continue;
        }
        std::vector<Turn> cut;
        for (const Rat& eps : {Rat(0), Rat(1, 2)})
            for (const auto& p : line_line_points(l, TorusLine(0, 1, Turn(eps))))
                cut.push_back(l.param_of(p));
        TorusSet pieces = punctured_line(l, cut);
        offlevels.arcs.insert(offlevels.arcs.end(), pieces.arcs.begin(), pieces.arcs.end());
    }
    for (const auto& a : T1.arcs) {
        if (a.line.horizontal()) {
            if (a.line.c.is_central()) continue;
            offlevels.arcs.push_back(a);
            continue;
        }
        // intersect the arc with the line punctured at the central heights
        std::vector<Turn> cut;
        for (const Rat& eps : {Rat(0), Rat(1, 2)})
            for (const auto& p : line_line_points(a.line, TorusLine(0, 1, Turn(eps))))
                cut.push_back(a.line.param_of(p));
        CircleSet arcset;
        arcset.ivs.push_back({a.t0, a.len, a.closed0, a.closed1});
        CircleSet comp;  // complement of the cut points
        {
            std::set<Rat> ps;
            for (const auto& t : cut) ps.insert(t.v);
            std::vector<Rat> v(ps.begin(), ps.end());
            for (size_t i = 0; i < v.size(); ++i) {
                Rat len = (v[(i + 1) % v.size()] - v[i]).mod1();
                if (len.num == 0) len = Rat(1);
                comp.ivs.push_back({Turn(v[i]), len, false, false});
            }
        }
        CircleSet kept = CircleSet::intersect(arcset, comp);
        for (const auto& iv : kept.ivs) offlevels.arcs.push_back({a.line, iv.s, iv.len, iv.c0, iv.c1});
        // isolated leftover params cannot occur: removing points from an
        // interval leaves intervals only
    }
    for (const auto& p : T1.points)
        if (!p.v.is_central()) offlevels.points.push_back(p);

    static const long long refl[2][2] = {{-1, 0}, {0, 1}};
    TorusSet hyt = apply_matrix(offlevels.normalized(), refl, Turn(Rat(1, 2)), Turn(Rat(0)));

    TorusSet h = hyt;
    // H_{Y,eps}
    for (const Rat& eps : {Rat(0), Rat(1, 2)}) {
        TorusLine level(0, 1, Turn(eps));
        if (!is_empty(intersect(t1.H, TorusSet::single_line(level)))) {
            h = union_sets(h, TorusSet::single_line(level));
            continue;
        }
        CircleSet fiber = horizontal_fiber(T1, Turn(eps));
        bool noncentral = fiber.full || !fiber.ivs.empty();
        if (!noncentral)
            for (const auto& p : fiber.pts)
                if (!Turn(p).is_central()) { noncentral = true; break; }
        if (noncentral) {
            std::vector<Turn> cut = {level.param_of({Turn(Rat(0)), Turn(eps)}),
                                     level.param_of({Turn(Rat(1, 2)), Turn(eps)})};
            h = union_sets(h, punctured_line(level, cut));
        }
    }
    out.H = h.normalized();

    PortWords port;
    port.x_label = "x2";
    port.h_label = out.basis_h;
    out.pres = c2_glued_presentation(t1.pres, t1.port, port);
    out.port = 0;
    out.P = central_extension_set(out.pres, 0);
    out.h_exact = false;  // the C2 recipe only certifies containment
    return out;
}

namespace {

BoundaryTriple fold_disk(const SeifertCoefficients& coeffs) {
    BoundaryTriple acc = solid_torus_triple(Slope(coeffs[0].p, coeffs[0].q));
    for (size_t i = 1; i < coeffs.size(); ++i) {
        BoundaryTriple next = solid_torus_triple(Slope(coeffs[i].p, coeffs[i].q));
        acc = c3_compose(acc, next);
    }
    return acc;
}

}  // namespace

BoundaryTriple seifert_disk_triple_unnormalized(const SeifertCoefficients& coeffs) {
    validate_coefficients(coeffs);
    if (coeffs.empty()) return solid_torus_triple(Slope(1, 0));
    return fold_disk(coeffs);
}

BoundaryTriple seifert_disk_triple(const SeifertCoefficients& coeffs) {
    validate_coefficients(coeffs);
    if (coeffs.empty()) return solid_torus_triple(Slope(1, 0));
    if (coeffs.size() == 1) return solid_torus_triple(Slope(coeffs[0].p, coeffs[0].q));
    // normalize even q to odd via the shear x -> x + k h; undo at the end
    SeifertCoefficients norm = coeffs;
    long long K = 0;
    for (auto& c : norm) {
        if (c.q % 2 == 0) {
            // p odd here since gcd(p,q) = 1
            long long k = c.q > 0 ? 1 : -1;
            c.q -= k * c.p;
            K += k;
        }
    }
    BoundaryTriple t = fold_disk(norm);
    if (K != 0) {
        // the shears set x_i' = x_i + k_i h, so x3' = mu h^K: undo with -K
        const long long shear[2][2] = {{1, -K}, {0, 1}};
        t.A = apply_matrix(t.A, shear);
        t.H = apply_matrix(t.H, shear);
        t.P = apply_matrix(t.P, shear);
        PortWords& port = t.pres.ports[t.port];
        port.x = port.x.concat(port.h.power(-K));
    }
    t.basis_x = "mu";
    return t;
}

BoundaryTriple seifert_mobius_triple(const SeifertCoefficients& coeffs) {
    validate_coefficients(coeffs);
    if (coeffs.empty()) {
        // twisted I-bundle over the Klein bottle: disk refibration with
        // coefficients 2/1, 2/-1; bases exchanged by the swap
        BoundaryTriple d = seifert_disk_triple({{2, 1}, {2, -1}});
        static const long long swap[2][2] = {{0, 1}, {1, 0}};
        BoundaryTriple out;
        out.A = apply_matrix(d.A, swap);
        out.H = apply_matrix(d.H, swap);
        out.P = apply_matrix(d.P, swap);
        out.h_exact = d.h_exact;
        out.basis_x = "x";
        out.basis_h = "h";
        // honest group of the bundle: <z, h | z h z^{-1} h>, port (z^2, h)
        Presentation pres;
        pres.gens = {"z", "hf"};
        pres.relators.push_back(Word{{0, 1}, {1, 1}, {0, -1}, {1, 1}});
        PortWords port;
        port.x = Word{{0, 2}};
        port.h = Word{{1, 1}};
        pres.ports.push_back(port);
        out.pres = pres;
        out.port = 0;
        return out;
    }
    return c2_compose(seifert_disk_triple(coeffs));
}

}  // namespace su2ab
