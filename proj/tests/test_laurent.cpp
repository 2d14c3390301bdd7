#include "doctest.h"

#include <random>

#include "goodfan/errors.hpp"
#include "goodfan/laurent.hpp"

using namespace goodfan;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

LaurentPolynomial random_poly(std::mt19937_64& rng, int rank, int max_terms,
                              bool positive_coeffs = false) {
    std::uniform_int_distribution<long> ed(-3, 3);
    std::uniform_int_distribution<long> cd(positive_coeffs ? 1 : -5, 5);
    std::uniform_int_distribution<int> td(1, max_terms);
    LaurentPolynomial p(rank);
    int terms = td(rng);
    for (int t = 0; t < terms; ++t) {
        IntVec m;
        for (int i = 0; i < rank; ++i) m.emplace_back(ed(rng));
        long c = cd(rng);
        if (c == 0) c = 1;
        p.add_term(m, Rat(c));
    }
    return p;
}

}  // namespace

TEST_CASE("parsing collects terms and reports positions") {
    auto p = parse_polynomial("x1 - x2", 2);
    REQUIRE(p.term_count() == 2);
    CHECK(p.terms().at(iv({1, 0})) == 1);
    CHECK(p.terms().at(iv({0, 1})) == -1);

    auto q = parse_polynomial("3/4*x1^-2*x2^5 + 1", 2);
    REQUIRE(q.term_count() == 2);
    CHECK(q.terms().at(iv({-2, 5})) == Rat(3, 4));
    CHECK(q.terms().at(iv({0, 0})) == 1);

    CHECK(parse_polynomial("x1 + x1 - 2*x1", 2).is_zero());
    CHECK(parse_polynomial("-x1 + 2*x2", 2).terms().at(iv({1, 0})) == -1);
    CHECK(parse_polynomial("0", 2).is_zero());
    CHECK(parse_polynomial("x1*x1", 1).terms().at(iv({2})) == 1);

    CHECK_THROWS_AS(parse_polynomial("x^", 2), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x3", 2), parse_error);
    CHECK_THROWS_AS(parse_polynomial("1/0", 2), parse_error);
    CHECK_THROWS_AS(parse_polynomial("", 2), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x1 $ x2", 2), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x1 +", 2), parse_error);
    try {
        parse_polynomial("x1 + x9", 2);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("canonical printing uses graded-lex descending order") {
    const char* fixed[] = {
        "x1*x2 - 1",
        "3/4*x1^-2*x2^5 + 1",
        "x1^2 - 2*x1*x2 + x2^2 - 4",
        "-x1 + 2*x2",
        "x1 - 1",
        "0",
        "x2^-1 + x1^-1",
        "2*x1 + 1/2",
    };
    for (const char* s : fixed) CHECK(parse_polynomial(s, 2).to_string() == s);

    // print(parse(print(p))) == print(p) on random polynomials
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int rank = 1 + static_cast<int>(rng() % 3);
        auto p = random_poly(rng, rank, 6);
        std::string s = p.to_string();
        CHECK(parse_polynomial(s, rank).to_string() == s);
        CHECK(parse_polynomial(s, rank) == p);
    }
}

TEST_CASE("ring operations") {
    auto x1 = parse_polynomial("x1", 2);
    auto p = parse_polynomial("x1 + 1", 2);
    CHECK(p.mul_monomial(iv({-1, 0})).to_string() == "1 + x1^-1");

    auto prod = parse_polynomial("x1 + x2", 2) * parse_polynomial("x1 - x2", 2);
    CHECK(prod == parse_polynomial("x1^2 - x2^2", 2));

    CHECK(p.scale(Rat(0)).is_zero());
    CHECK((p - p).is_zero());
    CHECK((x1 + x1) == x1.scale(Rat(2)));

    CHECK_THROWS_AS(parse_polynomial("x1", 1) + parse_polynomial("x1", 2), shape_error);

    // Newton polytope of a product of positive-coefficient polynomials is the
    // Minkowski sum of the factors' polytopes
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_poly(rng, 2, 4, true);
        auto b = random_poly(rng, 2, 4, true);
        CHECK((a * b).newton_polytope() ==
              minkowski_sum(a.newton_polytope(), b.newton_polytope()));
    }
}

TEST_CASE("Newton polytopes") {
    auto p = parse_polynomial("1 + x1 + x2", 2);
    CHECK(p.newton_polytope() == hull(2, {iv({0, 0}), iv({1, 0}), iv({0, 1})}));

    auto m = parse_polynomial("x1*x2^-1", 2);
    CHECK(m.newton_polytope().vertices() == std::vector<IntVec>{iv({1, -1})});

    auto cube = parse_polynomial("1 + x1", 1);
    auto c3 = cube * cube * cube;
    CHECK(c3.newton_polytope() == hull(1, {iv({0}), iv({3})}));

    CHECK_THROWS_WITH(LaurentPolynomial(2).newton_polytope(), "Newton polytope undefined");
}

TEST_CASE("reduction in a co-direction") {
    auto p = parse_polynomial("1 + x1 + x2", 2);
    CHECK(reduce_in_codirection(p, iv({1, 1})).to_string() == "1");
    CHECK(reduce_in_codirection(p, iv({0, -1})).to_string() == "x2");
    CHECK(reduce_in_codirection(p, iv({0, 0})) == p);

    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> xd(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        auto q = random_poly(rng, 2, 5);
        if (q.is_zero()) continue;
        IntVec xi = iv({xd(rng), xd(rng)});
        auto r = reduce_in_codirection(q, xi);
        CHECK(reduce_in_codirection(r, xi) == r);
        // reduced support lies on the argmin face of the Newton polytope
        Int h = support_function(q.newton_polytope(), xi);
        for (const auto& [mm, cc] : r.terms()) CHECK(dot(xi, mm) == h);
    }
}

TEST_CASE("univariate rewrite along a torus split") {
    auto split = complete_split(iv({0, 1}));  // t = x2, kernel coordinate = x1
    REQUIRE(split.e == iv({0, 1}));

    auto p = parse_polynomial("x1*x2 - 1", 2);
    auto u = to_univariate(p, split);
    CHECK(u.shift == 0);
    REQUIRE(u.poly.degree() == 1);
    CHECK(u.poly.coeffs[0].to_string() == "-1");
    CHECK(u.poly.coeffs[1].to_string() == "x1");
    CHECK(from_univariate(u.poly, u.shift) == p);

    auto cubed = to_univariate(parse_polynomial("x2^3", 2), split);
    CHECK(cubed.shift == 3);
    CHECK(cubed.poly.degree() == 0);
    CHECK(cubed.poly.coeffs[0].to_string() == "1");

    auto diff = to_univariate(parse_polynomial("x1 - x2", 2), split);
    CHECK(diff.shift == 0);
    REQUIRE(diff.poly.degree() == 1);
    CHECK(diff.poly.coeffs[0].to_string() == "x1");
    CHECK(diff.poly.coeffs[1].to_string() == "-1");

    CHECK_THROWS_AS(to_univariate(LaurentPolynomial(2), split), error);

    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 30; ++trial) {
        auto q = random_poly(rng, 3, 6);
        if (q.is_zero()) continue;
        auto s3 = complete_split(iv({1, 2, 3}));
        auto uq = to_univariate(q, s3);
        CHECK(from_univariate(uq.poly, uq.shift) == q);
        CHECK_FALSE(uq.poly.coeffs.front().is_zero());
        CHECK_FALSE(uq.poly.coeffs.back().is_zero());
    }
}

TEST_CASE("weakly generic splits give unit boundary coefficients") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        auto q = random_poly(rng, 2, 6);
        if (q.is_zero()) continue;
        IntVec phi = find_generic_covector(q.newton_polytope());
        REQUIRE(is_weakly_generic(phi, q.newton_polytope()));
        auto u = to_univariate(q, complete_split(phi));
        CHECK(u.poly.coeffs.front().term_count() == 1);
        CHECK(u.poly.coeffs.back().term_count() == 1);
    }
}

TEST_CASE("unit normal form is invariant under unit multiples") {
    auto p = parse_polynomial("2*x1^2 - 2*x2", 2);
    auto q = parse_polynomial("3*x1^3*x2^-2 - 3*x1*x2^-1", 2);  // p * (3/2)*x1*x2^-2
    CHECK(unit_normal_form(p) == unit_normal_form(q));
    CHECK(unit_normal_form(parse_polynomial("7*x1^4*x2^-5", 2)).to_string() == "1");
    CHECK(unit_normal_form(LaurentPolynomial(2)).is_zero());

    std::mt19937_64 rng(1212);
    std::uniform_int_distribution<long> ed(-3, 3), cd(1, 9);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_poly(rng, 2, 5);
        if (a.is_zero()) continue;
        auto unit = LaurentPolynomial::monomial(2, iv({ed(rng), ed(rng)}), Rat(cd(rng), cd(rng)));
        CHECK(unit_normal_form(a * unit) == unit_normal_form(a));
        CHECK(unit_normal_form(unit_normal_form(a)) == unit_normal_form(a));
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(4646);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_poly(rng, 2, 4);
        auto b = random_poly(rng, 2, 4);
        if (b.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
    }
    auto x1p1 = parse_polynomial("x1 + 1", 2);
    CHECK_THROWS_AS(divide_exact(parse_polynomial("x1^2 + 1", 2), x1p1), error);
    CHECK_THROWS_AS(divide_exact(x1p1, LaurentPolynomial(2)), error);
    CHECK(divide_exact(LaurentPolynomial(2), x1p1).is_zero());
}

TEST_CASE("evaluation") {
    auto p = parse_polynomial("x1*x2 - 1", 2);
    CHECK(p.eval({Rat(2), Rat(1, 2)}) == 0);
    CHECK(p.eval({Rat(3), Rat(1)}) == 2);
    auto q = parse_polynomial("x1^-2", 1);
    CHECK(q.eval({Rat(2, 3)}) == Rat(9, 4));
    CHECK_THROWS_AS(p.eval({Rat(0), Rat(1)}), precondition_error);

    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> vd(1, 7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_poly(rng, 2, 4);
        auto b = random_poly(rng, 2, 4);
        RatVec pt = {Rat(vd(rng), vd(rng)), Rat(-vd(rng), vd(rng))};
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    }
}

TEST_CASE("variable index scan") {
    CHECK(scan_max_variable_index("x1*x2 - x7^2") == 7);
    CHECK(scan_max_variable_index("5 + 3/4") == 0);
    CHECK(scan_max_variable_index("x12 + x3") == 12);
}
