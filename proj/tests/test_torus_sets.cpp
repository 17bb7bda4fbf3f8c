#include <doctest.h>

#include "su2ab/torus_sets.hpp"
#include "test_helpers.hpp"

using namespace su2ab;
using namespace su2ab::testing;

TEST_CASE("turn normalization") {
    CHECK(turn_normalize(Rat(5, 4)) == Turn(1, 4));
    CHECK(turn_normalize(Rat(-1, 3)) == Turn(2, 3));
    CHECK(turn_normalize(Rat(0)) == Turn(0, 1));
    CHECK(Turn(7, 2) == Turn(1, 2));
}

TEST_CASE("slope canonical form and distance") {
    CHECK(Slope(-6, -5) == Slope(6, 5));
    CHECK(Slope(0, -3) == Slope(0, 1));
    CHECK(Slope(4, 6) == Slope(2, 3));
    CHECK(distance(Slope(1, 0), Slope(0, 1)) == 1);
    CHECK(distance(Slope(6, 5), Slope(1, 0)) == 5);
    CHECK(distance(Slope(2, 1), Slope(2, 1)) == 0);
}

TEST_CASE("line parameterization roundtrip") {
    RandomSetGen gen(11);
    for (int i = 0; i < 50; ++i) {
        TorusLine l = gen.random_line();
        Turn t = gen.random_turn(12);
        PointUV p = l.at(t);
        CHECK(l.contains(p));
        CHECK(l.param_of(p) == t);
    }
}

TEST_CASE("character_lines") {
    TorusSet s = character_lines(Slope(0, 1), 1);
    REQUIRE(s.lines.size() == 1);
    CHECK(s.lines[0] == hline(0, 1));

    s = character_lines(Slope(6, 5), 1);
    REQUIRE(s.lines.size() == 1);
    CHECK(s.lines[0].n == Slope(6, 5));
    CHECK(s.lines[0].c == Turn(0, 1));

    s = character_lines(Slope(1, 0), 2);
    REQUIRE(s.lines.size() == 2);
    CHECK(s.contains(pt(0, 1, 1, 3)));
    CHECK(s.contains(pt(1, 2, 1, 3)));
    CHECK(!s.contains(pt(1, 4, 0, 1)));

    // always exactly `order` parallel components
    for (long long o = 1; o <= 5; ++o) {
        TorusSet cs = character_lines(Slope(3, -2), o);
        CHECK(cs.lines.size() == (size_t)o);
        for (const auto& l : cs.lines) CHECK(l.n == Slope(3, -2));
    }
}

TEST_CASE("theta_sum on lines") {
    TorusSet su0 = TorusSet::single_line(vline(0, 1));
    TorusSet r = theta_sum(su0, su0);
    CHECK(r == su0);

    TorusSet sv0 = TorusSet::single_line(hline(0, 1));
    CHECK(theta_sum(sv0, sv0) == sv0);

    TorusSet trefoil = TorusSet::single_line(TorusLine(6, 5, Turn(0, 1)));
    TorusSet sum = theta_sum(trefoil, trefoil);
    TorusSet expect;
    expect.lines.push_back(TorusLine(3, 5, Turn(0, 1)));
    expect.lines.push_back(TorusLine(3, 5, Turn(1, 2)));
    CHECK(sum == expect.normalized());

    // horizontal absorption: {v=0} + {u=0} = {v=0}
    CHECK(theta_sum(sv0, su0) == sv0);
}

TEST_CASE("theta_sum arcs on the same horizontal line") {
    TorusSet a1, a2;
    a1.arcs.push_back(harc(1, 2, Rat(0), Rat(1, 2)));
    a2.arcs.push_back(harc(1, 2, Rat(0), Rat(1, 2)));
    TorusSet r = theta_sum(a1, a2);
    // (0,1/2)+(0,1/2) = (0,1): the line punctured at u=0
    REQUIRE(r.lines.empty());
    REQUIRE(r.arcs.size() == 1);
    CHECK(r.arcs[0].len == Rat(1));
    CHECK(!r.arcs[0].closed0);
    CHECK(!r.contains(pt(0, 1, 1, 2)));
    CHECK(r.contains(pt(1, 3, 1, 2)));
}

TEST_CASE("jewel") {
    TorusSet centrals;
    for (long long i = 0; i < 2; ++i)
        for (long long j = 0; j < 2; ++j) centrals.points.push_back(pt(i, 2, j, 2));
    centrals = centrals.normalized();
    CHECK(jewel(centrals) == centrals);

    TorusSet arcs;
    arcs.arcs.push_back(harc(1, 2, Rat(1, 12), Rat(5, 12)));
    TorusSet expect;
    expect.arcs.push_back(harc(1, 2, Rat(7, 12), Rat(11, 12)));
    CHECK(jewel(arcs) == expect.normalized());

    RandomSetGen gen(23);
    for (int i = 0; i < 30; ++i) {
        TorusSet s = gen.random_set();
        CHECK(jewel(jewel(s)) == s);
    }
}

TEST_CASE("translate") {
    TorusSet su0 = TorusSet::single_line(vline(0, 1));
    CHECK(translate(su0, Turn(1, 2), Turn(0, 1)) == TorusSet::single_line(vline(1, 2)));
    TorusSet p = TorusSet::single_point(pt(1, 4, 1, 4));
    CHECK(translate(p, Turn(1, 2), Turn(0, 1)) == TorusSet::single_point(pt(3, 4, 1, 4)));
    RandomSetGen gen(31);
    for (int i = 0; i < 30; ++i) {
        TorusSet s = gen.random_set();
        TorusSet twice = translate(translate(s, Turn(1, 2), Turn(0, 1)), Turn(1, 2), Turn(0, 1));
        CHECK(twice == s);
    }
}

TEST_CASE("change_basis") {
    RandomSetGen gen(41);
    const long long id[2][2] = {{1, 0}, {0, 1}};
    const long long swap[2][2] = {{0, 1}, {1, 0}};
    TorusSet su0 = TorusSet::single_line(vline(0, 1));
    CHECK(change_basis(su0, id) == su0);
    CHECK(change_basis(su0, swap) == TorusSet::single_line(hline(0, 1)));

    const long long bad[2][2] = {{1, 1}, {1, 1}};
    CHECK_THROWS(change_basis(su0, bad));

    // composition law on random sets
    const long long m1[2][2] = {{1, 2}, {0, 1}};
    const long long m2[2][2] = {{1, 0}, {-3, 1}};
    long long m12[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m12[i][j] = m1[i][0] * m2[0][j] + m1[i][1] * m2[1][j];
    for (int i = 0; i < 30; ++i) {
        TorusSet s = gen.random_set();
        CHECK(change_basis(s, m12) == change_basis(change_basis(s, m1), m2));
    }
}

TEST_CASE("intersect") {
    TorusSet su0 = TorusSet::single_line(vline(0, 1));
    TorusSet sv0 = TorusSet::single_line(hline(0, 1));
    TorusSet r = intersect(su0, sv0);
    CHECK(r == TorusSet::single_point(pt(0, 1, 0, 1)));

    CHECK(is_empty(intersect(su0, TorusSet::single_line(vline(1, 2)))));

    TorusSet l35 = TorusSet::single_line(TorusLine(3, 5, Turn(0, 1)));
    r = intersect(l35, sv0);
    TorusSet expect;
    expect.points.push_back(pt(0, 1, 0, 1));
    expect.points.push_back(pt(1, 3, 0, 1));
    expect.points.push_back(pt(2, 3, 0, 1));
    CHECK(r == expect.normalized());

    // |line cap line| = |det|
    RandomSetGen gen(51);
    for (int i = 0; i < 40; ++i) {
        TorusLine a = gen.random_line(), b = gen.random_line();
        long long det = a.n.a * b.n.b - b.n.a * a.n.b;
        if (det == 0) continue;
        auto pts = line_line_points(a, b);
        CHECK((long long)pts.size() == (det < 0 ? -det : det));
        for (const auto& p : pts) {
            CHECK(a.contains(p));
            CHECK(b.contains(p));
        }
    }
}

TEST_CASE("open/closed flags respected in intersection") {
    // open arc does not contain its endpoint even if the other set does
    TorusSet openArc;
    openArc.arcs.push_back(harc(1, 2, Rat(1, 12), Rat(5, 12), false, false));
    TorusSet endpoint = TorusSet::single_point(pt(1, 12, 1, 2));
    CHECK(is_empty(intersect(openArc, endpoint)));
    TorusSet closedArc;
    closedArc.arcs.push_back(harc(1, 2, Rat(1, 12), Rat(5, 12), true, false));
    CHECK(!is_empty(intersect(closedArc, endpoint)));
}

TEST_CASE("measure and witness") {
    TorusSet arcs;
    arcs.arcs.push_back(harc(1, 2, Rat(1, 12), Rat(5, 12)));
    arcs.arcs.push_back(harc(1, 2, Rat(7, 12), Rat(11, 12)));
    CHECK(measure_on_line(arcs, hline(1, 2)) == Rat(2, 3));

    TorusSet full = TorusSet::single_line(hline(1, 2));
    CHECK(measure_on_line(full, hline(1, 2)) == Rat(1));

    TorusSet p = TorusSet::single_point(pt(1, 4, 0, 1));
    auto w = witness_point(p);
    REQUIRE(w.has_value());
    CHECK(*w == pt(1, 4, 0, 1));

    CHECK(!witness_point(TorusSet{}).has_value());

    // witness prefers points, then arc midpoints, then line base points
    TorusSet mixed = arcs;
    mixed.points.push_back(pt(1, 4, 1, 4));
    auto w2 = witness_point(mixed.normalized());
    REQUIRE(w2.has_value());
    CHECK(*w2 == pt(1, 4, 1, 4));
}

TEST_CASE("normalization merges and absorbs") {
    // adjacent arcs with a point closing the junction merge
    TorusSet s;
    s.arcs.push_back(harc(0, 1, Rat(0), Rat(1, 4), false, false));
    s.arcs.push_back(harc(0, 1, Rat(1, 4), Rat(1, 2), false, false));
    s.points.push_back(pt(1, 4, 0, 1));
    TorusSet n = s.normalized();
    REQUIRE(n.arcs.size() == 1);
    CHECK(n.arcs[0].len == Rat(1, 2));
    CHECK(n.points.empty());

    // arcs covering the whole line become the line
    TorusSet t;
    t.arcs.push_back(harc(0, 1, Rat(0), Rat(1, 2), true, true));
    t.arcs.push_back(harc(0, 1, Rat(1, 2), Rat(1), true, true));
    TorusSet tn = t.normalized();
    CHECK(tn.arcs.empty());
    REQUIRE(tn.lines.size() == 1);

    // a point on a listed line is dropped
    TorusSet u = TorusSet::single_line(hline(0, 1));
    u.points.push_back(pt(1, 3, 0, 1));
    CHECK(u.normalized().points.empty());
}

TEST_CASE("punctured line representation") {
    TorusLine l = vline(1, 2);
    TorusSet s = punctured_line(l, {Turn(0, 1)});
    REQUIRE(s.arcs.size() == 1);
    CHECK(s.arcs[0].len == Rat(1));
    CHECK(!s.contains(l.at(Turn(0, 1))));
    CHECK(s.contains(l.at(Turn(1, 3))));

    TorusSet s2 = punctured_line(l, {Turn(0, 1), Turn(1, 2)});
    CHECK(s2.arcs.size() == 2);
}
