#include "doctest.h"
#include "basketball.hpp"
#include "enumeration.hpp"
#include "matching.hpp"

#include <random>

using namespace bb;

namespace {

Matching mk(int circle, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Branch> br;
    for (auto [a, b] : pairs) br.emplace_back(a, b);
    return Matching(circle, std::move(br));
}

// independent check: rotate all labels and test the linear vertex condition
bool vertex_pattern_oracle(std::vector<Branch> branches, int circle) {
    int m = static_cast<int>(branches.size());
    for (int rot = 0; rot < circle; ++rot) {
        std::vector<std::pair<int, int>> shifted;
        for (const auto& b : branches) {
            int x = (b.a + rot) % circle, y = (b.b + rot) % circle;
            shifted.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(shifted.begin(), shifted.end());
        bool ok = true;
        for (int k = 0; k + 1 < m && ok; ++k) {
            ok = shifted[k].first < shifted[k + 1].first &&
                 shifted[k + 1].first < shifted[0].second &&
                 shifted[k].second < shifted[k + 1].second;
        }
        if (ok && shifted[m - 1].first < shifted[0].second) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("crossing predicate") {
    CHECK(crosses(Branch(1, 5), Branch(3, 9)));
    CHECK(!crosses(Branch(0, 6), Branch(2, 4)));  // nested
    CHECK(!crosses(Branch(1, 3), Branch(5, 7)));  // disjoint
    CHECK_THROWS_AS(crosses(Branch(1, 3), Branch(3, 5)), std::domain_error);

    // symmetry and rotation invariance
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> lab(0, 11);
    for (int iter = 0; iter < 500; ++iter) {
        int a = lab(rng), b = lab(rng), c = lab(rng), d = lab(rng);
        std::set<int> s{a, b, c, d};
        if (s.size() != 4) continue;
        Branch b1(a, b), b2(c, d);
        CHECK(crosses(b1, b2) == crosses(b2, b1));
        for (int rot = 1; rot < 12; ++rot) {
            Branch r1((a + rot) % 12, (b + rot) % 12), r2((c + rot) % 12, (d + rot) % 12);
            CHECK(crosses(b1, b2) == crosses(r1, r2));
        }
    }
}

TEST_CASE("common vertex pattern") {
    CHECK(common_vertex_pattern({Branch(1, 7), Branch(3, 9), Branch(5, 11)}));
    CHECK(!common_vertex_pattern({Branch(0, 6), Branch(2, 10), Branch(4, 8)}));
    CHECK(common_vertex_pattern({Branch(1, 5), Branch(3, 9)}));  // crossing pair

    // cross-check against an explicit rotation search
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> lab(0, 13);
    for (int iter = 0; iter < 2000; ++iter) {
        std::set<int> chosen;
        while (chosen.size() < 6) chosen.insert(lab(rng));
        std::vector<int> v(chosen.begin(), chosen.end());
        std::shuffle(v.begin(), v.end(), rng);
        std::vector<Branch> br{Branch(v[0], v[1]), Branch(v[2], v[3]), Branch(v[4], v[5])};
        CHECK(common_vertex_pattern(br) == vertex_pattern_oracle(br, 14));
    }
}

TEST_CASE("vertices of a matching") {
    // one triple vertex
    auto r1 = vertices_of(mk(12, {{1, 7}, {3, 9}, {5, 11}}));
    REQUIRE(r1.valid());
    REQUIRE(r1.forest->vertices.size() == 1);
    CHECK(r1.forest->vertices[0].branch_ids.size() == 3);

    // two two-branch vertices sharing the diameter
    auto r2 = vertices_of(mk(12, {{0, 6}, {2, 10}, {4, 8}}));
    REQUIRE(r2.valid());
    REQUIRE(r2.forest->vertices.size() == 2);
    for (const auto& v : r2.forest->vertices) CHECK(v.branch_ids.size() == 2);

    // non-crossing: no vertices
    auto r3 = vertices_of(mk(12, {{1, 3}, {5, 7}, {9, 11}}));
    REQUIRE(r3.valid());
    CHECK(r3.forest->vertices.empty());
}

TEST_CASE("forest validity and the crossing-cycle oracle") {
    // an invalid matching: {0,4},{1,5},{2,7},{3,6} pairwise-crossing except
    // {2,7} x {3,6}, so the candidate vertex fails the joint pattern
    auto bad = forest_valid(mk(10, {{0, 4}, {1, 5}, {2, 7}, {3, 6}, {8, 9}}));
    CHECK(!bad.valid());
    CHECK(!crossing_cycle_oracle(mk(10, {{0, 4}, {1, 5}, {2, 7}, {3, 6}, {8, 9}})));

    // all 15 matchings on 6 points are valid forests
    int valid6 = 0;
    all_matchings(6, {0, 1, 2, 3, 4, 5}, [&](const Matching& m) {
        if (forest_valid(m).valid()) ++valid6;
    });
    CHECK(valid6 == 15);

    // 99 of the 105 matchings on 8 points are valid
    int valid8 = 0, total8 = 0;
    all_matchings(8, {0, 1, 2, 3, 4, 5, 6, 7}, [&](const Matching& m) {
        ++total8;
        if (forest_valid(m).valid()) ++valid8;
    });
    CHECK(total8 == 105);
    CHECK(valid8 == 99);
}

TEST_CASE("forest_valid agrees with the oracle exhaustively") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> labels(2 * n);
        for (int k = 0; k < 2 * n; ++k) labels[k] = k;
        all_matchings(2 * n, labels, [&](const Matching& m) {
            CHECK(forest_valid(m).valid() == crossing_cycle_oracle(m));
        });
    }
}

TEST_CASE("component blocks form a non-crossing partition") {
    all_matchings(8, {0, 1, 2, 3, 4, 5, 6, 7}, [&](const Matching& m) {
        auto fr = forest_valid(m);
        if (!fr.valid()) return;
        auto blocks = fr.forest->components();
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t j = i + 1; j < blocks.size(); ++j) {
                // blocks cross iff some a < b < c < d alternates between them
                bool cross = false;
                for (int a : blocks[i])
                    for (int b : blocks[j])
                        for (int c : blocks[i])
                            for (int d : blocks[j])
                                if (a < b && b < c && c < d) cross = true;
                CHECK(!cross);
            }
    });
}

TEST_CASE("crossing sets and the poset order") {
    // three pairwise-crossing branches: 12 cross pairs plus the three
    // branches through the vertex crossing themselves
    auto triple = *forest_valid(mk(12, {{1, 7}, {3, 9}, {5, 11}})).forest;
    CHECK(crossing_set(triple).size() == 15);

    auto z2 = *forest_valid(mk(8, {{1, 5}, {3, 7}})).forest;
    std::set<std::pair<int, int>> expect{{1, 3}, {1, 7}, {3, 5}, {5, 7}, {1, 5}, {3, 7}};
    CHECK(crossing_set(z2) == expect);

    auto nc = *forest_valid(mk(8, {{1, 3}, {5, 7}})).forest;
    CHECK(crossing_set(nc).empty());

    // distinct non-crossing matchings are incomparable
    auto nc2 = *forest_valid(mk(8, {{1, 7}, {3, 5}})).forest;
    CHECK(!poset_leq(nc, nc2));
    CHECK(!poset_leq(nc2, nc));

    // z^n pattern is below every forest on the same circle; reflexivity
    std::vector<CircularForest> universe;
    all_matchings(6, {0, 1, 2, 3, 4, 5}, [&](const Matching& m) {
        auto fr = forest_valid(m);
        if (fr.valid()) universe.push_back(*fr.forest);
    });
    auto zn = *forest_valid(mk(6, {{0, 3}, {1, 4}, {2, 5}})).forest;
    for (const auto& f : universe) {
        CHECK(poset_leq(zn, f));
        CHECK(poset_leq(f, f));
    }
    CHECK(down_set(zn, universe).size() == 1);

    // transitivity on the census
    for (const auto& f1 : universe)
        for (const auto& f2 : universe)
            for (const auto& f3 : universe)
                if (poset_leq(f1, f2) && poset_leq(f2, f3)) CHECK(poset_leq(f1, f3));

    // n = 2: the closure of a non-crossing cell contains itself and the
    // degenerate pattern, but not the other non-crossing matching
    std::vector<CircularForest> small;
    all_matchings(4, {0, 1, 2, 3}, [&](const Matching& m) {
        small.push_back(*forest_valid(m).forest);
    });
    REQUIRE(small.size() == 3);
    for (const auto& f : small) {
        if (!is_noncrossing(f.matching)) continue;
        auto ds = down_set(f, small);
        REQUIRE(ds.size() == 2);
        bool has_self = false, has_crossing = false;
        for (const auto* g : ds) {
            if (g->matching == f.matching) has_self = true;
            if (!is_noncrossing(g->matching)) has_crossing = true;
        }
        CHECK(has_self);
        CHECK(has_crossing);
    }

    // every forest lies below some maximal (non-crossing) one
    std::set<std::string> covered;
    for (const auto& f : universe)
        if (is_noncrossing(f.matching))
            for (const auto* g : down_set(f, universe)) covered.insert(g->matching.to_text());
    CHECK(covered.size() == universe.size());

    // non-crossing matchings are exactly the maximal forests
    for (const auto& f : universe) {
        bool noncrossing = is_noncrossing(f.matching);
        bool maximal = true;
        for (const auto& g : universe)
            if (!(g.matching == f.matching) && poset_leq(f, g) && !poset_leq(g, f))
                maximal = false;
        CHECK(noncrossing == maximal);
    }
}

TEST_CASE("matching text round-trip") {
    auto m = mk(12, {{1, 3}, {5, 7}, {9, 11}});
    CHECK(m.to_text() == "[[1,3],[5,7],[9,11]]");
    auto back = Matching::from_text(m.to_text(), 12);
    REQUIRE(back.has_value());
    CHECK(*back == m);
    CHECK(!Matching::from_text("[[1,3],[3,5]]", 12).has_value());
    CHECK(!Matching::from_text("[[1,3]", 12).has_value());
}

TEST_CASE("branch orientation") {
    auto o1 = orient_branch(Branch(3, 9));
    REQUIRE(o1.has_value());
    CHECK(o1->from == 3);
    CHECK(o1->to == 9);
    auto o2 = orient_branch(Branch(0, 6));
    REQUIRE(o2.has_value());
    CHECK(o2->from == 6);
    CHECK(o2->to == 0);
    CHECK(!orient_branch(Branch(0, 4)).has_value());
}

TEST_CASE("dihedral group action") {
    auto m = mk(12, {{1, 7}, {3, 9}, {5, 11}});
    DihedralElement psi{1, false}, tau{0, true};
    CHECK(act(DihedralElement{12 % 12, false}, m) == m);
    CHECK(act(tau, act(tau, m)) == m);

    // action law act(g.compose(h)) == act(g, act(h, .)) on random elements
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> rot(0, 11), flip(0, 1);
    for (int iter = 0; iter < 100; ++iter) {
        DihedralElement g{rot(rng), flip(rng) == 1}, h{rot(rng), flip(rng) == 1};
        CHECK(act(g.compose(h, 12), m) == act(g, act(h, m)));
    }
    (void)psi;
}
