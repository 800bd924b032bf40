#include "doctest.h"
#include "enumeration.hpp"
#include "series.hpp"

using namespace bb;

namespace {

ZPoly zp(std::initializer_list<long> v) {
    ZPoly p;
    for (long x : v) p.emplace_back(x);
    return p;
}

}  // namespace

TEST_CASE("tree series rows") {
    BivariateSeries a = gf_tree(13);
    CHECK(zp_row_text(a.coef[1]) == "[1]");
    CHECK(a.coef[3] == zp({0, 1}));
    CHECK(a.coef[5] == zp({0, 1, 3}));
    CHECK(a.coef[7] == zp({0, 1, 8, 12}));
    CHECK(a.coef[9] == zp({0, 1, 15, 55, 55}));
    CHECK(a.coef[11] == zp({0, 1, 24, 156, 364, 273}));
    CHECK(a.coef[13] == zp({0, 1, 35, 350, 1400, 2380, 1428}));
    for (int k = 0; k <= 13; k += 2) CHECK(zp_is_zero(a.coef[k]));
}

TEST_CASE("tree series satisfies its functional equation") {
    for (int order : {21, 60}) {
        BivariateSeries a = gf_tree(order);
        CHECK(gf_tree_equation_residual(a).is_zero());
    }
}

TEST_CASE("even non-crossing partition weights") {
    PartitionWeightSeries th = gf_even_noncrossing(10);
    CHECK(th.coef[2].to_string() == "p2");
    CHECK(th.coef[4].to_string() == "2*p2^2 + p4");
    CHECK(th.coef[6].to_string() == "5*p2^3 + 6*p2*p4 + p6");
    CHECK(th.coef[8].to_string() == "14*p2^4 + 28*p2^2*p4 + 8*p2*p6 + 4*p4^2 + p8");
    CHECK(th.coef[10].to_string() ==
          "42*p2^5 + 120*p2^3*p4 + 45*p2^2*p6 + 45*p2*p4^2 + 10*p2*p8 + 10*p4*p6 + p10");

    // with every p = 1 the x^{2n} coefficient counts even-block non-crossing
    // partitions; with only p2 kept it counts non-crossing matchings (Catalan)
    auto catalan = catalan_numbers(6);
    for (int n = 1; n <= 5; ++n) {
        Int all_parts = 0, matchings_only = 0;
        for (const auto& [mono, c] : th.coef[2 * n].terms) {
            all_parts += c;
            if (mono.size() == 1 && mono[0].first == 2) matchings_only += c;
        }
        CHECK(matchings_only == catalan[n]);
        (void)all_parts;
    }
}

TEST_CASE("forest series rows") {
    BivariateSeries f = gf_forest(12);
    CHECK(f.coef[2] == zp({1}));
    CHECK(f.coef[4] == zp({2, 1}));
    CHECK(f.coef[6] == zp({5, 7, 3}));
    CHECK(f.coef[8] == zp({14, 37, 36, 12}));
    CHECK(f.coef[10] == zp({42, 176, 285, 205, 55}));
    CHECK(f.coef[12] == zp({132, 794, 1872, 2158, 1222, 273}));

    // constant terms in t are the Catalan numbers
    auto catalan = catalan_numbers(7);
    for (int n = 1; n <= 6; ++n) CHECK(f.coef[2 * n][0] == catalan[n]);
}

TEST_CASE("forest census equals the generating function row") {
    BivariateSeries f = gf_forest(12);
    for (int n = 1; n <= 6; ++n) {
        ForestCensus census = forest_census(n);
        ZPoly row = f.coef[2 * n];
        REQUIRE(row.size() == census.by_vertex_count.size());
        for (size_t k = 0; k < row.size(); ++k) CHECK(row[k] == census.by_vertex_count[k]);
    }
}

TEST_CASE("series caps") {
    CHECK_THROWS_AS(gf_tree(300), std::length_error);
    CHECK_THROWS_AS(gf_even_noncrossing(60), std::length_error);
}
