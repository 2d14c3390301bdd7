#include "doctest.h"

#include <algorithm>
#include <random>

#include "goodfan/errors.hpp"
#include "goodfan/linalg.hpp"
#include "goodfan/mixedvol.hpp"

using namespace goodfan;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

LatticePolytope unit_square() {
    return hull(2, {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
}
LatticePolytope unit_triangle() {
    return hull(2, {iv({0, 0}), iv({1, 0}), iv({0, 1})});
}

LatticePolytope dilate(const LatticePolytope& p, long k) {
    std::vector<IntVec> pts;
    for (const auto& v : p.vertices()) pts.push_back(scale(Int(k), v));
    return hull(p.rank(), pts);
}

LatticePolytope translate(const LatticePolytope& p, const IntVec& t) {
    std::vector<IntVec> pts;
    for (const auto& v : p.vertices()) pts.push_back(add(v, t));
    return hull(p.rank(), pts);
}

LatticePolytope random_polytope(std::mt19937_64& rng, int rank, int span, int npts) {
    std::uniform_int_distribution<long> coord(-span, span);
    std::vector<IntVec> pts;
    for (int i = 0; i < npts; ++i) {
        IntVec v;
        for (int j = 0; j < rank; ++j) v.emplace_back(coord(rng));
        pts.push_back(std::move(v));
    }
    return hull(rank, pts);
}

// Shoelace area of a 2D polytope, fully independent of the triangulation:
// order the vertices around their centroid with exact comparisons.
Rat shoelace_area(const LatticePolytope& p) {
    const auto& vs = p.vertices();
    if (p.dim() < 2) return 0;
    Rat cx = 0, cy = 0;
    for (const auto& v : vs) {
        cx += Rat(v[0]);
        cy += Rat(v[1]);
    }
    cx /= (long)vs.size();
    cy /= (long)vs.size();
    std::vector<IntVec> ord = vs;
    auto half = [&](const IntVec& a) {
        Rat dy = Rat(a[1]) - cy, dx = Rat(a[0]) - cx;
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(ord.begin(), ord.end(), [&](const IntVec& a, const IntVec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rat c = (Rat(a[0]) - cx) * (Rat(b[1]) - cy) - (Rat(a[1]) - cy) * (Rat(b[0]) - cx);
        return c > 0;
    });
    Rat twice = 0;
    for (std::size_t i = 0; i < ord.size(); ++i) {
        const IntVec& a = ord[i];
        const IntVec& b = ord[(i + 1) % ord.size()];
        twice += Rat(a[0] * b[1] - b[0] * a[1]);
    }
    if (twice < 0) twice = -twice;
    return twice / 2;
}

}  // namespace

TEST_CASE("volumes of fixed polytopes") {
    CHECK(volume(unit_square()) == Rat(1));
    CHECK(volume(unit_triangle()) == Rat(1, 2));
    CHECK(volume(hull(2, {iv({0, 0}), iv({3, 0}), iv({0, 3})})) == Rat(9, 2));
    CHECK(volume(hull(2, {iv({1, 1}), iv({4, 2})})) == Rat(0));
    CHECK(volume(hull(2, {iv({5, -7})})) == Rat(0));
    std::vector<IntVec> cube;
    for (int m = 0; m < 8; ++m) cube.push_back(iv({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
    CHECK(volume(hull(3, cube)) == Rat(1));
    CHECK(volume(hull(3, {iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})})) ==
          Rat(1, 6));
    CHECK(volume(hull(0, {IntVec{}})) == Rat(1));
}

TEST_CASE("triangulation invariants") {
    LatticePolytope p = minkowski_sum(unit_triangle(), unit_square());
    VolumeResult r = triangulated_volume(p);
    CHECK(r.value == Rat(7, 2));
    Rat total = 0;
    for (const auto& s : r.triangulation) {
        REQUIRE(s.size() == 3);
        std::vector<IntVec> edges;
        for (std::size_t i = 1; i < s.size(); ++i)
            edges.push_back(sub(p.vertices()[s[i]], p.vertices()[s[0]]));
        Int d = det_int(edges);
        CHECK(d != 0);
        if (d < 0) d = -d;
        total += Rat(d) / 2;
    }
    CHECK(total == r.value);

    VolumeResult flat = triangulated_volume(hull(2, {iv({0, 0}), iv({2, 4})}));
    CHECK(flat.value == Rat(0));
    CHECK(flat.triangulation.empty());
}

TEST_CASE("random 2d volumes match the shoelace oracle") {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 60; ++trial) {
        LatticePolytope p = random_polytope(rng, 2, 4, 3 + (int)(rng() % 5));
        CHECK(volume(p) == shoelace_area(p));
    }
}

TEST_CASE("solution counts of fixed tuples") {
    LatticePolytope tri = unit_triangle(), sq = unit_square();
    CHECK(bkk_number({tri, tri}) == Rat(1));
    CHECK(bkk_number({dilate(tri, 2), dilate(tri, 2)}) == Rat(4));
    LatticePolytope seg1 = hull(2, {iv({0, 0}), iv({1, 0})});
    LatticePolytope seg2 = hull(2, {iv({0, 0}), iv({0, 1})});
    CHECK(bkk_number({seg1, seg2}) == Rat(1));
    CHECK(bkk_number({seg1, seg1}) == Rat(0));
    CHECK(bkk_number({sq, sq}) == Rat(2));
    // Vol(tri+sq) - Vol(tri) - Vol(sq) = 7/2 - 1/2 - 1
    CHECK(bkk_number({tri, sq}) == Rat(2));
    LatticePolytope tet = hull(3, {iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
    CHECK(bkk_number({tet, tet, tet}) == Rat(1));
}

TEST_CASE("solution count properties on random polytopes") {
    std::mt19937_64 rng(77001);
    for (int trial = 0; trial < 40; ++trial) {
        LatticePolytope a = random_polytope(rng, 2, 3, 4);
        LatticePolytope b = random_polytope(rng, 2, 3, 4);
        LatticePolytope c = random_polytope(rng, 2, 3, 4);
        Rat ab = bkk_number({a, b});
        CHECK(ab == bkk_number({b, a}));
        CHECK(bkk_number({translate(a, iv({5, -2})), b}) == ab);
        CHECK(bkk_number({a, a}) == 2 * volume(a));
        CHECK(bkk_number({minkowski_sum(a, c), b}) == ab + bkk_number({c, b}));
        // inclusion: hull(a's and c's points) contains a
        std::vector<IntVec> both = a.vertices();
        for (const auto& v : c.vertices()) both.push_back(v);
        CHECK(bkk_number({hull(2, both), b}) >= ab);
    }
    std::mt19937_64 rng3(77002);
    for (int trial = 0; trial < 8; ++trial) {
        LatticePolytope a = random_polytope(rng3, 3, 2, 5);
        CHECK(bkk_number({a, a, a}) == 6 * volume(a));
        LatticePolytope b = random_polytope(rng3, 3, 2, 5);
        LatticePolytope c = random_polytope(rng3, 3, 2, 5);
        Rat abc = bkk_number({a, b, c});
        CHECK(abc == bkk_number({c, a, b}));
        CHECK(abc == bkk_number({b, a, c}));
    }
}

TEST_CASE("dilation polynomial matches sampled volumes") {
    // Vol(s*A + t*B) = s^2 Vol(A) + s*t*bkk(A,B) + t^2 Vol(B)
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        LatticePolytope a = random_polytope(rng, 2, 3, 4);
        LatticePolytope b = random_polytope(rng, 2, 3, 4);
        Rat va = volume(a), vb = volume(b), mixed = bkk_number({a, b});
        for (auto [s, t] : {std::pair<long, long>{2, 1}, {1, 2}, {3, 2}}) {
            Rat sampled = volume(minkowski_sum(dilate(a, s), dilate(b, t)));
            CHECK(sampled == Rat(s * s) * va + Rat(s * t) * mixed + Rat(t * t) * vb);
        }
    }
}

TEST_CASE("tuple shape errors") {
    LatticePolytope tri = unit_triangle();
    CHECK_THROWS_AS(bkk_number({tri}), shape_error);
    CHECK_THROWS_AS(bkk_number({tri, tri, tri}), shape_error);
    CHECK_THROWS_AS(bkk_number({}), shape_error);
    LatticePolytope seg1 = hull(1, {iv({0}), iv({2})});
    CHECK_THROWS_AS(bkk_number({tri, seg1}), shape_error);
}
