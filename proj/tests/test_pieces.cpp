#include <doctest.h>

#include "su2ab/pieces.hpp"
#include "test_helpers.hpp"

using namespace su2ab;
using namespace su2ab::testing;

TEST_CASE("solid torus triples") {
    BoundaryTriple t = solid_torus_triple(Slope(1, 0));
    CHECK(t.A == TorusSet::single_line(vline(0, 1)));
    CHECK(is_empty(t.H));
    CHECK(is_empty(t.P));
    CHECK(t.h_exact);

    BoundaryTriple t31 = solid_torus_triple(Slope(3, 1));
    REQUIRE(t31.A.lines.size() == 1);
    CHECK(t31.A.lines[0].n == Slope(3, 1));
    CHECK(t31.A.lines[0].c == Turn(0, 1));
}

TEST_CASE("c3_compose builds the trefoil piece D2(2/1,3/1)") {
    BoundaryTriple t1 = solid_torus_triple(Slope(2, 1));
    BoundaryTriple t2 = solid_torus_triple(Slope(3, 1));
    BoundaryTriple t = c3_compose(t1, t2);

    CHECK(t.A == TorusSet::single_line(TorusLine(6, 5, Turn(0, 1))));

    TorusSet expectH;
    expectH.arcs.push_back(harc(1, 2, Rat(1, 12), Rat(5, 12)));
    expectH.arcs.push_back(harc(1, 2, Rat(7, 12), Rat(11, 12)));
    CHECK(t.H == expectH.normalized());
    CHECK(is_empty(intersect(t.H, TorusSet::single_line(hline(0, 1)))));
    CHECK(measure_on_line(t.H, hline(1, 2)) == Rat(2, 3));

    CHECK(is_empty(t.P));
    CHECK(t.h_exact);
}

TEST_CASE("c3_compose with a fiber-meridian side degenerates horizontally") {
    BoundaryTriple t1 = solid_torus_triple(Slope(2, 1));
    BoundaryTriple t2 = solid_torus_triple(Slope(0, 1));  // A = {v = 0}
    BoundaryTriple t = c3_compose(t1, t2);
    // A = {2u+v=0} + {v=0} = full horizontal absorption at height 0
    CHECK(t.A == TorusSet::single_line(hline(0, 1)));
}

TEST_CASE("c3_compose sums central pillars into H") {
    BoundaryTriple t1 = solid_torus_triple(Slope(2, 1));
    BoundaryTriple t2 = solid_torus_triple(Slope(3, 1));
    for (long long i = 0; i < 2; ++i)
        for (long long j = 0; j < 2; ++j) {
            t1.P.points.push_back(pt(i, 2, j, 2));
            t2.P.points.push_back(pt(i, 2, j, 2));
        }
    t1.P = t1.P.normalized();
    t2.P = t2.P.normalized();
    BoundaryTriple t = c3_compose(t1, t2);
    for (long long i = 0; i < 2; ++i)
        for (long long j = 0; j < 2; ++j) CHECK(t.H.contains(pt(i, 2, j, 2)));
}

TEST_CASE("c3_compose basis mismatch is an error") {
    BoundaryTriple t1 = solid_torus_triple(Slope(2, 1));
    BoundaryTriple t2 = solid_torus_triple(Slope(3, 1));
    t2.basis_h = "g";
    CHECK_THROWS(c3_compose(t1, t2));
}

TEST_CASE("c3_compose is symmetric in its inputs") {
    BoundaryTriple a = seifert_disk_triple({{2, 1}, {3, 1}});
    BoundaryTriple b = solid_torus_triple(Slope(5, 2));
    BoundaryTriple ab = c3_compose(a, b);
    BoundaryTriple ba = c3_compose(b, a);
    CHECK(ab.A == ba.A);
    CHECK(ab.H == ba.H);
    CHECK(ab.P == ba.P);
}

TEST_CASE("seifert_disk_triple") {
    BoundaryTriple t1 = seifert_disk_triple({{2, 1}});
    CHECK(t1.A == solid_torus_triple(Slope(2, 1)).A);

    BoundaryTriple t = seifert_disk_triple({{2, 1}, {3, 1}});
    CHECK(t.A == TorusSet::single_line(TorusLine(6, 5, Turn(0, 1))));
    CHECK(measure_on_line(t.H, hline(1, 2)) == Rat(2, 3));

    CHECK_THROWS(seifert_disk_triple({{4, 2}}));
}

TEST_CASE("q-parity normalization does not change the computed sets") {
    for (auto coeffs : {SeifertCoefficients{{3, 2}, {3, 1}}, SeifertCoefficients{{5, 2}, {2, 1}},
                        SeifertCoefficients{{3, -2}, {4, 1}},
                        SeifertCoefficients{{5, 4}, {3, 2}, {2, 1}}}) {
        BoundaryTriple norm = seifert_disk_triple(coeffs);
        BoundaryTriple plain = seifert_disk_triple_unnormalized(coeffs);
        CHECK(norm.A == plain.A);
        CHECK(norm.H == plain.H);
        CHECK(norm.P == plain.P);
    }
}

TEST_CASE("H of a disk piece sits on the central levels") {
    for (long long p1 = 2; p1 <= 5; ++p1)
        for (long long p2 = 2; p2 <= 5; ++p2) {
            BoundaryTriple t = seifert_disk_triple({{p1, 1}, {p2, 1}});
            TorusSet rest = t.H;
            for (const auto& l : rest.lines) CHECK(l.c.is_central());
            for (const auto& a : rest.arcs) {
                CHECK(a.line.horizontal());
                CHECK(a.line.c.is_central());
            }
            for (const auto& q : rest.points) CHECK(q.v.is_central());
        }
}

TEST_CASE("jewel symmetry of constructed triples") {
    for (auto coeffs : {SeifertCoefficients{{2, 1}, {3, 1}}, SeifertCoefficients{{3, 2}, {4, 3}},
                        SeifertCoefficients{{2, 1}, {4, 1}, {5, 2}}}) {
        BoundaryTriple t = seifert_disk_triple(coeffs);
        CHECK(jewel(t.A) == t.A);
        CHECK(jewel(t.H) == t.H);
        CHECK(jewel(t.P) == t.P);
    }
    BoundaryTriple m = seifert_mobius_triple({{3, 1}});
    CHECK(jewel(m.A) == m.A);
    CHECK(jewel(m.H) == m.H);
    CHECK(jewel(m.P) == m.P);
}

TEST_CASE("translation symmetry in a (xi, lambda) basis with odd order") {
    // D2(2/1,3/1): lambda = (6,5), o = 1; basis (xi, lambda) with xi = (1,1)
    BoundaryTriple t = seifert_disk_triple({{2, 1}, {3, 1}});
    const long long n[2][2] = {{1, 1}, {6, 5}};  // point map to (eta(xi), eta(lambda))
    TorusSet A2 = apply_matrix(t.A, n);
    TorusSet H2 = apply_matrix(t.H, n);
    CHECK(translate(A2, Turn(1, 2), Turn(0, 1)) == A2);
    CHECK(translate(H2, Turn(1, 2), Turn(0, 1)) == H2);
}

TEST_CASE("c2_compose of the core solid torus") {
    BoundaryTriple st = solid_torus_triple(Slope(1, 0));
    BoundaryTriple t = c2_compose(st);

    TorusSet expectA;
    expectA.lines.push_back(hline(0, 1));
    expectA.lines.push_back(hline(1, 2));
    CHECK(t.A == expectA.normalized());

    // H contains the vertical line {u=1/2} minus the two central points
    CHECK(t.H.contains(pt(1, 2, 1, 3)));
    CHECK(!t.H.contains(pt(1, 2, 0, 1)));
    CHECK(!t.H.contains(pt(1, 2, 1, 2)));
    CHECK(!t.h_exact);

    // P = {(1/2, 0), (1/2, 1/2)}
    TorusSet expectP;
    expectP.points.push_back(pt(1, 2, 0, 1));
    expectP.points.push_back(pt(1, 2, 1, 2));
    CHECK(t.P == expectP.normalized());
}

TEST_CASE("c2_compose with no central-fiber abelian character") {
    BoundaryTriple t1 = solid_torus_triple(Slope(1, 0));
    t1.A = TorusSet::single_line(hline(1, 4));  // synthetic: A = {v = 1/4} only
    BoundaryTriple t = c2_compose(t1);
    CHECK(t.A == TorusSet::single_line(hline(0, 1)));
}

TEST_CASE("c2_compose promotes an H point on a central level to a full line") {
    BoundaryTriple t1 = solid_torus_triple(Slope(1, 0));
    t1.H = TorusSet::single_point(pt(1, 3, 0, 1));
    BoundaryTriple t = c2_compose(t1);
    bool has_v0 = false;
    for (const auto& l : t.H.lines) has_v0 = has_v0 || l == hline(0, 1);
    CHECK(has_v0);
}

TEST_CASE("seifert_mobius_triple") {
    // n = 0: the twisted I-bundle over the Klein bottle
    BoundaryTriple k = seifert_mobius_triple({});
    TorusSet expectA;
    expectA.lines.push_back(hline(0, 1));
    expectA.lines.push_back(hline(1, 2));
    CHECK(k.A == expectA.normalized());
    CHECK(k.h_exact);
    CHECK(k.H.contains(pt(1, 2, 1, 5)));
    CHECK(!k.H.contains(pt(1, 2, 0, 1)));
    TorusSet expectP;
    expectP.points.push_back(pt(1, 2, 0, 1));
    expectP.points.push_back(pt(1, 2, 1, 2));
    CHECK(k.P == expectP.normalized());
    // homology of the honest Klein presentation agrees
    LongitudeData l = longitude_of(k.pres, k.port);
    CHECK(l.longitude == Slope(0, 1));
    CHECK(l.order == 2);
    CHECK(l.torsion == 2);

    // n = 1 inexact flag propagation
    BoundaryTriple m = seifert_mobius_triple({{3, 1}});
    CHECK(!m.h_exact);

    // A always sits on the central levels
    for (auto coeffs : {SeifertCoefficients{}, SeifertCoefficients{{3, 1}},
                        SeifertCoefficients{{2, 1}, {5, 2}}}) {
        BoundaryTriple t = seifert_mobius_triple(coeffs);
        for (const auto& l2 : t.A.lines) {
            CHECK(l2.horizontal());
            CHECK(l2.c.is_central());
        }
        CHECK(t.A.arcs.empty());
        CHECK(t.A.points.empty());
    }
}
