#include <doctest.h>

#include "su2ab/trace_intervals.hpp"
#include "test_helpers.hpp"

using namespace su2ab;
using namespace su2ab::testing;

TEST_CASE("fold") {
    CHECK(fold(Turn(0, 1)).v == Rat(0));
    CHECK(fold(Turn(3, 4)).v == Rat(1, 4));
    CHECK(fold(Turn(1, 2)).v == Rat(1, 2));
    CHECK(fold(Turn(1, 3)).v == Rat(1, 3));
    CHECK(fold(Turn(2, 3)).v == Rat(1, 3));
}

TEST_CASE("product_angle_interval") {
    auto i = product_angle_interval(FoldedAngle(Rat(1, 4)), FoldedAngle(Rat(1, 4)));
    REQUIRE(i.nonempty);
    CHECK(i.lo == Rat(0));
    CHECK(i.hi == Rat(1, 2));

    i = product_angle_interval(FoldedAngle(Rat(1, 4)), FoldedAngle(Rat(1, 6)));
    REQUIRE(i.nonempty);
    CHECK(i.lo == Rat(1, 12));
    CHECK(i.hi == Rat(5, 12));

    CHECK(!product_angle_interval(FoldedAngle(Rat(0)), FoldedAngle(Rat(1, 3))).nonempty);
    CHECK(!product_angle_interval(FoldedAngle(Rat(1, 2)), FoldedAngle(Rat(1, 3))).nonempty);

    // symmetric in its arguments
    for (long long a = 0; a <= 8; ++a)
        for (long long b = 0; b <= 8; ++b) {
            auto x = product_angle_interval(FoldedAngle(Rat(a, 16)), FoldedAngle(Rat(b, 16)));
            auto y = product_angle_interval(FoldedAngle(Rat(b, 16)), FoldedAngle(Rat(a, 16)));
            CHECK(x.nonempty == y.nonempty);
            if (x.nonempty) {
                CHECK(x.lo == y.lo);
                CHECK(x.hi == y.hi);
            }
            // never reaches the degenerate traces
            if (x.nonempty) {
                CHECK(x.lo >= Rat(0));
                CHECK(x.hi <= Rat(1, 2));
            }
        }
}

TEST_CASE("admissible_product_set") {
    FoldedSet f1, f2;
    f1.pts.push_back(Rat(1, 4));
    f2.pts.push_back(Rat(1, 6));
    FoldedSet j = admissible_product_set(f1, f2);
    REQUIRE(j.ivs.size() == 1);
    CHECK(j.ivs[0].lo == Rat(1, 12));
    CHECK(j.ivs[0].hi == Rat(5, 12));
    CHECK(!j.ivs[0].c0);
    CHECK(!j.ivs[0].c1);

    FoldedSet f3;
    f3.ivs.push_back({Rat(1, 6), Rat(1, 3), true, true});
    j = admissible_product_set(f1, f3);
    REQUIRE(j.ivs.size() == 1);
    CHECK(j.ivs[0].lo == Rat(0));
    CHECK(j.ivs[0].hi == Rat(1, 2));

    FoldedSet f4, f5;
    f4.pts.push_back(Rat(1, 8));
    f5.pts.push_back(Rat(3, 8));
    j = admissible_product_set(f4, f5);
    REQUIRE(j.ivs.size() == 1);
    CHECK(j.ivs[0].lo == Rat(1, 4));
    CHECK(j.ivs[0].hi == Rat(1, 2));

    // singleton case reduces to product_angle_interval
    for (long long a = 1; a < 8; ++a)
        for (long long b = 1; b < 8; ++b) {
            FoldedSet xa, xb;
            xa.pts.push_back(Rat(a, 16));
            xb.pts.push_back(Rat(b, 16));
            FoldedSet u = admissible_product_set(xa, xb);
            auto i = product_angle_interval(FoldedAngle(Rat(a, 16)), FoldedAngle(Rat(b, 16)));
            if (!i.nonempty) {
                CHECK(u.empty());
            } else {
                REQUIRE(u.ivs.size() == 1);
                CHECK(u.ivs[0].lo == i.lo);
                CHECK(u.ivs[0].hi == i.hi);
            }
        }

    // monotonicity: enlarging an argument never shrinks the output
    FoldedSet small, big;
    small.pts.push_back(Rat(1, 5));
    big.pts.push_back(Rat(1, 5));
    big.pts.push_back(Rat(2, 5));
    FoldedSet js = admissible_product_set(small, f1);
    FoldedSet jb = admissible_product_set(big, f1);
    for (const auto& iv : js.ivs) {
        bool contained = false;
        for (const auto& ivb : jb.ivs)
            contained = contained || (ivb.lo <= iv.lo && iv.hi <= ivb.hi);
        CHECK(contained);
    }
}

TEST_CASE("unfold_to_arcs") {
    FoldedSet f;
    f.ivs.push_back({Rat(1, 12), Rat(5, 12), false, false});
    TorusSet s = unfold_to_arcs(f, Turn(1, 2));
    TorusSet expect;
    expect.arcs.push_back(harc(1, 2, Rat(1, 12), Rat(5, 12)));
    expect.arcs.push_back(harc(1, 2, Rat(7, 12), Rat(11, 12)));
    CHECK(s == expect.normalized());
    CHECK(measure_on_line(s, hline(1, 2)) == Rat(2, 3));

    CHECK(unfold_to_arcs(FoldedSet{}, Turn(0, 1)).empty());

    FoldedSet full;
    full.ivs.push_back({Rat(0), Rat(1, 2), false, false});
    TorusSet sf = unfold_to_arcs(full, Turn(0, 1));
    CHECK(sf.lines.empty());
    CHECK(sf.arcs.size() == 2);
    CHECK(!sf.contains(pt(0, 1, 0, 1)));
    CHECK(!sf.contains(pt(1, 2, 0, 1)));
    CHECK(sf.contains(pt(1, 3, 0, 1)));
    CHECK(sf.contains(pt(2, 3, 0, 1)));
}

TEST_CASE("fold_circle_set") {
    CircleSet cs;
    cs.ivs.push_back({Turn(5, 8), Rat(1, 4), true, false});  // (5/8, 7/8]... [5/8,7/8)
    FoldedSet f = fold_circle_set(cs);
    // folds to (1/8, 3/8] with flags mirrored
    REQUIRE(f.ivs.size() == 1);
    CHECK(f.ivs[0].lo == Rat(1, 8));
    CHECK(f.ivs[0].hi == Rat(3, 8));
    CHECK(f.ivs[0].c1 == true);
    CHECK(f.ivs[0].c0 == false);

    // an interval crossing 1/2 folds to a single piece
    CircleSet cross;
    cross.ivs.push_back({Turn(2, 5), Rat(1, 5), true, true});  // [2/5, 3/5]
    FoldedSet g = fold_circle_set(cross);
    REQUIRE(g.ivs.size() == 1);
    CHECK(g.ivs[0].lo == Rat(2, 5));
    CHECK(g.ivs[0].hi == Rat(1, 2));
    CHECK(g.ivs[0].c0);
    CHECK(g.ivs[0].c1);

    CircleSet full{true, {}, {}};
    FoldedSet h = fold_circle_set(full);
    REQUIRE(h.ivs.size() == 1);
    CHECK(h.ivs[0].lo == Rat(0));
    CHECK(h.ivs[0].hi == Rat(1, 2));
}
