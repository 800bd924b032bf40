#include "doctest.h"
#include "cpoly.hpp"

#include <algorithm>
#include <random>

using namespace bb;

namespace {

CPoly cp(std::initializer_list<Cplx> asc) { return CPoly(std::vector<Cplx>(asc)); }

bool near(Cplx a, Cplx b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("evaluate and derivative") {
    // z^3 + 6iz at 1 - i
    CPoly f = cp({0.0, Cplx(0, 6), 0.0, 1.0});
    CHECK(near(f.eval(Cplx(1, -1)), Cplx(4, 4), 1e-12));
    CPoly fp = f.derivative();
    CHECK(near(fp.eval(0.0), Cplx(0, 6)));
    CHECK(near(cp({-1.0, 0.0, 1.0}).eval(1.0), 0.0));
    CHECK(near(cp({0.0, 0.0, 0.0, 1.0}).eval(2.0), 8.0));
}

TEST_CASE("aberth on simple roots") {
    CPoly f = cp({-1.0, 0.0, 1.0});
    auto roots = all_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(near(roots[0].value, -1.0));
    CHECK(near(roots[1].value, 1.0));

    // 3z^2 + 6i: roots +-(1 - i), solved by hand from z^2 = -2i
    CPoly g = cp({Cplx(0, 6), 0.0, 3.0});
    auto r2 = all_roots(g);
    REQUIRE(r2.size() == 2);
    for (const auto& rc : r2) CHECK(near(g.eval(rc.value), 0.0, 1e-8));
    CHECK(near(r2[0].value, Cplx(-1, 1)));
    CHECK(near(r2[1].value, Cplx(1, -1)));
}

TEST_CASE("multiple roots cluster with multiplicity") {
    // (z-1)^3 (z+1)^2
    CPoly a = cp({-1.0, 1.0});
    CPoly b = cp({1.0, 1.0});
    CPoly f = a * a * a * b * b;
    auto roots = all_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 2);
    CHECK(near(roots[0].value, -1.0, 1e-6));
    CHECK(roots[1].multiplicity == 3);
    CHECK(near(roots[1].value, 1.0, 1e-6));

    auto zn = all_roots(cp({0.0, 0.0, 0.0, 0.0, 1.0}));
    REQUIRE(zn.size() == 1);
    CHECK(zn[0].multiplicity == 4);
    CHECK(near(zn[0].value, 0.0, 1e-6));
}

TEST_CASE("root product reconstructs the polynomial") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + iter % 5;
        std::vector<Cplx> coeffs(n + 1);
        for (int k = 0; k < n; ++k) coeffs[k] = Cplx(u(rng), u(rng));
        coeffs[n] = 1.0;
        CPoly f{std::vector<Cplx>(coeffs)};
        CPoly prod = cp({1.0});
        for (const auto& rc : all_roots(f))
            for (int m = 0; m < rc.multiplicity; ++m) prod = prod * cp({-rc.value, 1.0});
        for (int k = 0; k <= n; ++k)
            CHECK(std::abs(prod[k] - f[k]) <= 1e-7 * f.coeff_scale());
    }
}

TEST_CASE("critical data") {
    // z^3 + 6iz: critical values +-(4+4i)
    CPoly f = cp({0.0, Cplx(0, 6), 0.0, 1.0});
    auto cd = critical_data(f);
    REQUIRE(cd.critical_values.size() == 2);
    std::vector<Cplx> vals = cd.critical_values;
    std::sort(vals.begin(), vals.end(),
              [](Cplx a, Cplx b) { return a.real() < b.real(); });
    CHECK(near(vals[0], Cplx(-4, -4), 1e-12));
    CHECK(near(vals[1], Cplx(4, 4), 1e-12));
    REQUIRE(cd.distinct_re.size() == 2);
    CHECK(cd.distinct_re[0] == doctest::Approx(-4.0));
    CHECK(cd.distinct_re[1] == doctest::Approx(4.0));
    REQUIRE(cd.distinct_im.size() == 2);

    // z^3 - 3z + 2: critical points +-1, values 0 and 4
    CPoly g = cp({2.0, -3.0, 0.0, 1.0});
    auto cd2 = critical_data(g);
    REQUIRE(cd2.critical_values.size() == 2);
    std::sort(cd2.critical_values.begin(), cd2.critical_values.end(),
              [](Cplx x, Cplx y) { return x.real() < y.real(); });
    CHECK(near(cd2.critical_values[0], 0.0, 1e-9));
    CHECK(near(cd2.critical_values[1], 4.0, 1e-9));

    // z^n: one critical point of multiplicity n-1, value 0
    auto cd3 = critical_data(cp({0.0, 0.0, 0.0, 0.0, 1.0}));
    CHECK(cd3.critical_points.size() == 3);
    for (auto v : cd3.critical_values) CHECK(near(v, 0.0, 1e-6));
    CHECK(cd3.distinct_re.size() == 1);
}

TEST_CASE("extended-precision roots") {
    CPoly f = cp({Cplx(0, 6), 0.0, 3.0});
    auto r = all_roots_extended(f);
    REQUIRE(r.size() == 2);
    for (const auto& rc : r) CHECK(std::abs(f.eval(rc.value)) < 1e-13);
}

TEST_CASE("derivative evaluation matches exact formal derivative") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<QComplex> qc(5);
        for (auto& v : qc) v = QComplex(make_rat(c(rng), 3), make_rat(c(rng), 2));
        qc[4] = QComplex(1, 0);
        QCPoly f(qc);
        QCPoly fp = f.derivative();
        QComplex z(make_rat(c(rng), 5), make_rat(c(rng), 7));
        // exact identity: derivative then evaluate == coefficient rule
        QComplex acc(0, 0);
        for (int k = 1; k <= f.deg(); ++k) {
            QComplex term = f[k] * QComplex(Rat(k), Rat(0));
            QComplex p(1, 0);
            for (int j = 0; j < k - 1; ++j) p = p * z;
            acc = acc + term * p;
        }
        CHECK(fp.eval(z) == acc);
    }
}
