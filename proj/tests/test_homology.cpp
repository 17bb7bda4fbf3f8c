#include <doctest.h>

#include <random>

#include "su2ab/homology.hpp"
#include "su2ab/pieces.hpp"
#include "test_helpers.hpp"

using namespace su2ab;
using namespace su2ab::testing;

namespace {

// U A V = D holds and U, V are unimodular
void check_snf(const IntMat& a) {
    SnfResult r = smith_normal_form(a);
    IntMat uav = mat_mul(mat_mul(r.u, a), r.v);
    REQUIRE(uav.size() == r.d.size());
    for (size_t i = 0; i < uav.size(); ++i)
        for (size_t j = 0; j < uav[i].size(); ++j) CHECK(uav[i][j] == r.d[i][j]);
    // diagonal, divisibility chain
    auto dd = r.diag();
    for (size_t i = 0; i < r.d.size(); ++i)
        for (size_t j = 0; j < r.d[i].size(); ++j)
            if (i != j) CHECK(r.d[i][j] == 0);
    for (size_t i = 0; i + 1 < dd.size(); ++i)
        if (dd[i] != 0 && dd[i + 1] != 0) CHECK(dd[i + 1] % dd[i] == 0);
}

long long det2(const IntMat& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

}  // namespace

TEST_CASE("smith normal form basics") {
    SnfResult r = smith_normal_form({{2, 0}, {0, 3}});
    auto d = r.diag();
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 1);
    CHECK(d[1] == 6);
    check_snf({{2, 0}, {0, 3}});

    r = smith_normal_form({{0, 0}, {0, 0}});
    CHECK(r.rank == 0);
    CHECK(r.diag()[0] == 0);

    // unimodular witnesses on 2x2
    SnfResult r2 = smith_normal_form({{4, 6}, {2, 8}});
    CHECK(std::abs(det2(r2.u)) == 1);
    CHECK(std::abs(det2(r2.v)) == 1);
    check_snf({{4, 6}, {2, 8}});
}

TEST_CASE("smith normal form randomized") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
    for (int k = 0; k < 120; ++k) {
        IntMat a(dim(rng), std::vector<long long>(dim(rng)));
        for (auto& row : a)
            for (auto& x : row) x = val(rng);
        check_snf(a);
    }
}

TEST_CASE("solid torus longitude") {
    BoundaryTriple t = solid_torus_triple(Slope(1, 0));
    LongitudeData l = longitude_of(t.pres, t.port);
    CHECK(l.longitude == Slope(1, 0));
    CHECK(l.order == 1);
    CHECK(l.torsion == 1);

    BoundaryTriple t31 = solid_torus_triple(Slope(3, 1));
    l = longitude_of(t31.pres, t31.port);
    CHECK(l.longitude == Slope(3, 1));
    CHECK(l.order == 1);
}

TEST_CASE("trefoil piece D2(2/1,3/1) homology") {
    BoundaryTriple t = seifert_disk_triple({{2, 1}, {3, 1}});
    LongitudeData l = longitude_of(t.pres, t.port);
    CHECK(l.longitude == Slope(6, 5));
    CHECK(l.order == 1);
    CHECK(l.torsion == 1);

    // order divides torsion on a family of pieces
    for (long long p1 = 2; p1 <= 6; ++p1)
        for (long long p2 = 2; p2 <= 6; ++p2) {
            BoundaryTriple x = seifert_disk_triple({{p1, 1}, {p2, 1}});
            LongitudeData lx = longitude_of(x.pres, x.port);
            CHECK(lx.torsion % lx.order == 0);
            CHECK(lx.torsion == std::gcd(p1, p2));
        }
}

TEST_CASE("closed form longitude for two-fiber disk pieces") {
    // lambda = mu * p1 p2 /(o g) + h * (q1 p2 + q2 p1)/(o g)
    for (long long p1 = 2; p1 <= 6; ++p1)
        for (long long p2 = 2; p2 <= 6; ++p2)
            for (long long q1 : {1LL, -1LL, 3LL})
                for (long long q2 : {1LL, -1LL, 3LL}) {
                    if (std::gcd(p1, q1 < 0 ? -q1 : q1) != 1) continue;
                    if (std::gcd(p2, q2 < 0 ? -q2 : q2) != 1) continue;
                    BoundaryTriple t = seifert_disk_triple({{p1, q1}, {p2, q2}});
                    LongitudeData l = longitude_of(t.pres, t.port);
                    Slope closed_form(p1 * p2, q1 * p2 + q2 * p1);
                    CHECK(l.longitude == closed_form);
                }
}

TEST_CASE("closed_h1_order") {
    const long long id[2][2] = {{1, 0}, {0, 1}};
    // two solid tori S^3-like
    BoundaryTriple a = solid_torus_triple(Slope(1, 0));
    BoundaryTriple b = solid_torus_triple(Slope(0, 1));
    LongitudeData la = longitude_of(a.pres, a.port);
    LongitudeData lb = longitude_of(b.pres, b.port);
    CHECK(closed_h1_order(la, lb, id) == 1);

    // trefoil piece filled along a slope at distance 5
    BoundaryTriple t = seifert_disk_triple({{2, 1}, {3, 1}});
    LongitudeData lt = longitude_of(t.pres, t.port);
    BoundaryTriple fill = solid_torus_triple(Slope(1, 0));
    LongitudeData lf = longitude_of(fill.pres, fill.port);
    CHECK(distance(lt.longitude, lf.longitude) == 5);
    CHECK(closed_h1_order(lt, lf, id) == 5);
    Presentation glued = glue_presentations(t.pres, t.port, fill.pres, fill.port, id);
    CHECK(h1_order_of_closed(glued) == 5);

    // o1=1,t1=1,o2=2,t2=2,Delta=1 -> 4
    LongitudeData l1{Slope(1, 0), 1, 1};
    LongitudeData l2{Slope(0, 1), 2, 2};
    CHECK(closed_h1_order(l1, l2, id) == 4);

    // Delta = 0 reports infinite
    LongitudeData lsame{Slope(1, 0), 1, 1};
    CHECK(closed_h1_order(lsame, lsame, id) == -1);
}

TEST_CASE("abelian sets") {
    BoundaryTriple st = solid_torus_triple(Slope(1, 0));
    CHECK(abelian_set(st.pres, st.port) == TorusSet::single_line(vline(0, 1)));

    BoundaryTriple t = seifert_disk_triple({{2, 1}, {3, 1}});
    TorusSet a = abelian_set(t.pres, t.port);
    REQUIRE(a.lines.size() == 1);
    CHECK(a.lines[0].n == Slope(6, 5));

    // an order-3 piece has three parallel lines
    BoundaryTriple t33 = seifert_disk_triple({{3, 2}, {3, 1}});
    LongitudeData l33 = longitude_of(t33.pres, t33.port);
    CHECK(l33.order == 3);
    CHECK(abelian_set(t33.pres, t33.port).lines.size() == 3);
}

TEST_CASE("central_extension_set") {
    BoundaryTriple st = solid_torus_triple(Slope(2, 1));
    CHECK(is_empty(central_extension_set(st.pres, st.port)));

    BoundaryTriple t = seifert_disk_triple({{2, 1}, {3, 1}});
    CHECK(is_empty(central_extension_set(t.pres, t.port)));  // g = 1

    // a synthetic piece with Z/3 torsion meeting the boundary trivially
    Presentation p;
    p.gens = {"c", "g"};
    p.relators.push_back(Word{{1, 3}});
    PortWords port;
    port.x = Word{{0, 1}};
    port.h = Word{};
    p.ports.push_back(port);
    TorusSet ces = central_extension_set(p, 0);
    CHECK(ces.contains(pt(0, 1, 0, 1)));

    // P is always inside A cap {0,1/2}^2 for honest pieces
    for (long long p1 = 2; p1 <= 6; ++p1)
        for (long long p2 = 2; p2 <= 6; ++p2) {
            BoundaryTriple x = seifert_disk_triple({{p1, 1}, {p2, 1}});
            TorusSet P = central_extension_set(x.pres, x.port);
            TorusSet A = abelian_set(x.pres, x.port);
            for (const auto& q : P.points) {
                CHECK(A.contains(q));
                CHECK(q.u.is_central());
                CHECK(q.v.is_central());
            }
        }
}
