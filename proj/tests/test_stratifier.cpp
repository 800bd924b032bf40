#include "doctest.h"
#include "stratifier.hpp"

#include <cmath>
#include <map>
#include <random>

using namespace bb;

namespace {

QCPoly cubic(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    // z^3 - 3(a+bi)z + 2(c+di)
    return QCPoly({QComplex(2 * c, 2 * d), QComplex(-3 * a, -3 * b), QComplex(0, 0),
                   QComplex(1, 0)});
}

CPoly fcubic(double a, double b, double c, double d) {
    return CPoly({Cplx(2 * c, 2 * d), Cplx(-3 * a, -3 * b), 0.0, 1.0});
}

}  // namespace

TEST_CASE("singularity verdicts for quadratics") {
    // z^2 - bi: imaginary-axis locus, real component singular
    QCPoly f({QComplex(Rat(0), Rat(-5)), QComplex(0, 0), QComplex(1, 0)});
    auto v = singularity_verdict(f, Component::R);
    CHECK(sgn(v.resultant_value) == 0);
    CHECK(v.has_real_witness);

    // z^2 - 3: the elimination value is a = 3, nonzero
    QCPoly g({QComplex(Rat(-3), Rat(0)), QComplex(0, 0), QComplex(1, 0)});
    auto vg = singularity_verdict(g, Component::R);
    CHECK(sgn(vg.resultant_value) != 0);
    CHECK(!vg.has_real_witness);

    // and the imaginary component of z^2 - 3 is singular (critical value -3)
    auto vg2 = singularity_verdict(g, Component::I);
    CHECK(vg2.has_real_witness);
}

TEST_CASE("z^3 + 1 is I-singular but R-nonsingular") {
    QCPoly f({QComplex(1, 0), QComplex(0, 0), QComplex(0, 0), QComplex(1, 0)});
    CHECK(!singularity_verdict(f, Component::R).has_real_witness);
    CHECK(singularity_verdict(f, Component::I).has_real_witness);
}

TEST_CASE("delta3 closed form") {
    CHECK(delta3(Rat(1), Rat(0), Rat(1)) == Rat(0));
    CHECK(delta3(Rat(0), Rat(0), Rat(1)) == Rat(4));
    // interior of a fully non-singular region
    CHECK(delta3(Rat(1), Rat(1), Rat(0)) == Rat(-4));
    // z^3 - 3z sits on the spurious zero branch: the closed form vanishes
    // through the factor that has no real witness
    CHECK(delta3(Rat(1), Rat(0), Rat(0)) == Rat(0));
    CHECK(cylindrical_identity_check(1000));
}

TEST_CASE("delta3 sign column matches the elimination pipeline") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 5);
    for (int iter = 0; iter < 120; ++iter) {
        Rat a = make_rat(num(rng), den(rng)), b = make_rat(num(rng), den(rng)), c = make_rat(num(rng), den(rng));
        auto v = singularity_verdict(cubic(a, b, c, Rat(0)), Component::R);
        bool sing = v.has_real_witness;
        if (delta3(a, b, c) != 0) CHECK(!sing);
    }
    // exact on-locus point: w = 1 + i, (a,b) = w^2 = 2i, c = Re w^3 = -2
    {
        Rat a(0), b(2), c(-2);
        CHECK(delta3(a, b, c) == Rat(0));
        CHECK(singularity_verdict(cubic(a, b, c, Rat(1)), Component::R).has_real_witness);
    }
    // spurious branch of the closed form: b = 0, a > 0, c = 0 has
    // delta3 = 0 but no real witness (the second cylindrical factor)
    {
        Rat a(1), b(0), c(0);
        CHECK(delta3(a, b, c) == Rat(0));
        CHECK(!singularity_verdict(cubic(a, b, c, Rat(0)), Component::R).has_real_witness);
    }
}

TEST_CASE("discriminant of delta3 in c matches the self-intersection locus") {
    // Disc_c(delta3) is proportional to b^2 (3a^2-b^2)^2 (a^2+b^2)^6
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> num(-6, 6);
    std::optional<Rat> ratio;
    for (int iter = 0; iter < 120; ++iter) {
        Rat a = make_rat(num(rng), 1 + iter % 3), b = make_rat(num(rng), 1 + iter % 2);
        // delta3 as a polynomial in c: 4c^4 - 4Ac^2 + (A^2 - rho^2)
        Rat A = a * (a * a - 3 * b * b);
        Rat s = a * a + b * b;
        QPoly p({A * A - s * s * s, Rat(0), -4 * A, Rat(0), Rat(4)});
        QPoly dp = p.derivative();
        Rat disc = resultant(p, dp);
        Rat locus = b * b * (3 * a * a - b * b) * (3 * a * a - b * b) * s * s * s * s * s * s;
        if (sgn(locus) == 0) {
            CHECK(sgn(disc) == 0);
        } else {
            Rat r = disc / locus;
            if (!ratio) ratio = r;
            CHECK(*ratio == r);
        }
    }
}

TEST_CASE("classify3 on named cells") {
    auto origin = classify3(Rat(0), Rat(0), Rat(0), Rat(0));
    CHECK(origin.case_label == "a.1");
    CHECK(origin.degree == 0);
    CHECK(origin.r_singular);
    CHECK(origin.i_singular);

    auto b_case = classify3(Rat(1), Rat(1), Rat(0), Rat(0));
    CHECK(b_case.case_label == "B");
    CHECK(b_case.degree == 4);
    CHECK(!b_case.r_singular);

    // z^3 - 3z + 2: double root plus a real second critical value; this is a
    // member of the double-root orbit, a 1-cell
    auto c4 = classify3(Rat(1), Rat(0), Rat(1), Rat(0));
    CHECK(c4.has_double_root);
    CHECK(c4.case_label == "b.1");
    CHECK(c4.degree == 1);

    auto a2 = classify3(Rat(0), Rat(0), Rat(0), Rat(1));
    CHECK(a2.case_label == "a.2");
    CHECK(a2.degree == 1);

    auto a1_full = classify3(Rat(0), Rat(0), Rat(1), Rat(1));
    CHECK(a1_full.case_label == "A.1");
    CHECK(a1_full.degree == 4);

    // b family: z^3 + 3z - 2di is (a,b,c,d) = (-1,0,0,-d)
    CHECK(classify3(Rat(-1), Rat(0), Rat(0), Rat(-1)).case_label == "b.1");
    CHECK(classify3(Rat(-1), Rat(0), Rat(0), Rat(-2)).case_label == "b.2");
    CHECK(classify3(Rat(-1), Rat(0), Rat(0), Rat(-1, 2)).case_label == "b.3");
    CHECK(classify3(Rat(-1), Rat(0), Rat(0), Rat(-2)).degree == 2);
    CHECK(classify3(Rat(-1), Rat(0), Rat(0), Rat(-1, 2)).degree == 2);

    // c family at w = 1+i: (a,b) = (0,2), W = -2+2i, canonical (2,-2)
    CHECK(classify3(Rat(0), Rat(2), Rat(2), Rat(-5)).case_label == "c.1");
    CHECK(classify3(Rat(0), Rat(2), Rat(2), Rat(2)).case_label == "c.2");
    CHECK(classify3(Rat(0), Rat(2), Rat(2), Rat(-1)).case_label == "c.3");
    CHECK(classify3(Rat(0), Rat(2), Rat(2), Rat(-2)).case_label == "c.4");
    CHECK(classify3(Rat(0), Rat(2), Rat(2), Rat(-2)).has_double_root);
    CHECK(classify3(Rat(0), Rat(2), Rat(5), Rat(1)).case_label == "A.2");
}

TEST_CASE("classify3 census over a rational grid reproduces the degrees") {
    // every orbit label appears with its degree on a systematic sample sweep
    std::map<std::string, int> seen;
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int iter = 0; iter < 400; ++iter) {
        Rat a = make_rat(num(rng), 1 + iter % 2), b = make_rat(num(rng), 1 + iter % 3), c(num(rng)), d(num(rng));
        auto cell = classify3(a, b, c, d);
        seen[cell.case_label] = cell.degree;
    }
    // representatives hit the remaining labels deterministically
    for (const char* label : {"a.1", "a.2", "b.1", "b.2", "b.3", "c.1", "c.2", "c.3", "c.4",
                              "A.1", "A.2", "B"}) {
        auto rep = classify3_representative(label);
        auto cell = classify3(rep[0], rep[1], rep[2], rep[3]);
        CHECK(cell.case_label == label);
        seen[cell.case_label] = cell.degree;
    }
    CHECK(seen.size() == 12);
    CHECK(seen["a.1"] == 0);
    CHECK(seen["b.1"] == 1);
    CHECK(seen["c.2"] == 2);
    CHECK(seen["c.1"] == 3);
    CHECK(seen["B"] == 4);
}

TEST_CASE("delta3 sign is constant on sampled open cells") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> num(-12, 12);
    std::map<std::string, int> cell_sign;
    for (int iter = 0; iter < 600; ++iter) {
        Rat a = make_rat(num(rng), 2), b = make_rat(num(rng), 3), c = make_rat(num(rng), 2), d = make_rat(num(rng), 3);
        auto cell = classify3(a, b, c, d);
        if (cell.degree != 4) continue;
        int s = sgn(delta3(a, b, c));
        REQUIRE(s != 0);
        // identify the open cell by its label and orbit position
        std::string key = cell.case_label + "#" +
                          std::to_string(cell.orbit_element.rot) +
                          (cell.orbit_element.flip ? "f" : "");
        auto it = cell_sign.find(key);
        if (it == cell_sign.end())
            cell_sign[key] = s;
        else
            CHECK(it->second == s);
    }
}

TEST_CASE("critical grid") {
    // z^3 + 6iz: two critical values, full 2x2 grid
    CPoly f({std::vector<Cplx>{0.0, Cplx(0, 6), 0.0, 1.0}});
    GridDecomposition g = critical_grid(f);
    CHECK(g.ell == 2);
    CHECK(g.m == 2);
    CHECK(enumerator_to_text(g.enumerator) == "[4,12,9]");
    CHECK(g.enumerator == g.formula());

    // z^2: single critical value, the degree-2 cell enumerator
    CPoly q({std::vector<Cplx>{0.0, 0.0, 1.0}});
    GridDecomposition g2 = critical_grid(q);
    CHECK(g2.ell == 1);
    CHECK(g2.m == 1);
    CHECK(enumerator_to_text(g2.enumerator) == "[1,4,4]");

    // random polynomials: counted cells match the closed formula
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 3 + iter % 4;
        std::vector<Cplx> coeffs(n + 1);
        for (int k = 0; k < n; ++k) coeffs[k] = Cplx(u(rng), u(rng));
        coeffs[n] = 1.0;
        GridDecomposition gr = critical_grid(CPoly{std::move(coeffs)});
        CHECK(gr.enumerator == gr.formula());
    }
}

TEST_CASE("tree components via critical values") {
    // z^3: both components trees
    CPoly cube({std::vector<Cplx>{0.0, 0.0, 0.0, 1.0}});
    CHECK(is_tree_component(cube, Component::R));
    CHECK(is_tree_component(cube, Component::I));

    CPoly f({std::vector<Cplx>{0.0, Cplx(0, 6), 0.0, 1.0}});
    CHECK(!is_tree_component(f, Component::R));
    CHECK(!is_tree_component(f, Component::I));

    // z^3 + 3z - 2ti has purely imaginary critical values for every real t
    for (double t : {0.25, 1.0, 3.5}) {
        CPoly g({std::vector<Cplx>{Cplx(0, -2 * t), 3.0, 0.0, 1.0}});
        CHECK(is_tree_component(g, Component::R));
        CHECK(!is_tree_component(g, Component::I));
    }
}

TEST_CASE("shabat check") {
    double s1 = std::pow(6.0, 0.2), s2 = std::pow(6.0, 0.4);
    // z^3 (z^2 - (5/2) 6^{1/5} z + (5/3) 6^{2/5})
    CPoly f({std::vector<Cplx>{0.0, 0.0, 0.0, (5.0 / 3.0) * s2, -(5.0 / 2.0) * s1, 1.0}});
    auto res = shabat_check(f);
    CHECK(res.is_shabat);
    REQUIRE(res.values.size() == 2);
    // its two critical values are 0 and 1
    std::sort(res.values.begin(), res.values.end(),
              [](Cplx a, Cplx b) { return a.real() < b.real(); });
    CHECK(std::abs(res.values[0]) < 1e-9);
    CHECK(std::abs(res.values[1] - 1.0) < 1e-9);

    CPoly zn({std::vector<Cplx>{0.0, 0.0, 0.0, 0.0, 1.0}});
    CHECK(!shabat_check(zn).is_shabat);

    CPoly g({std::vector<Cplx>{0.0, Cplx(0, 6), 0.0, 1.0}});
    CHECK(shabat_check(g).is_shabat);
}

TEST_CASE("qn stratum polynomials") {
    CPoly f = qn_stratum(3, 1.0, 0.0, 0.0, Component::R);
    // z^3 - 3z + 2
    CHECK(std::abs(f.eval(1.0)) < 1e-12);
    CHECK(std::abs(f[0] - Cplx(2, 0)) < 1e-12);
    CHECK(std::abs(f[1] - Cplx(-3, 0)) < 1e-12);

    // the R-form always has a critical value with vanishing real part
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> ur(0.3, 1.8), uth(0.0, 12.0), ud(-2.0, 2.0);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + iter % 5;
        CPoly g = qn_stratum(n, ur(rng), uth(rng), ud(rng), Component::R);
        CriticalData cd = critical_data(g);
        double best = 1e300;
        for (auto v : cd.critical_values) best = std::min(best, std::abs(v.real()));
        CHECK(best < 1e-7 * std::max(1.0, g.coeff_scale()));
    }

    CHECK(qn_critical_values_check(2, 30));
    CHECK(qn_critical_values_check(3, 30));
    CHECK(qn_critical_values_check(4, 30));

    // self-intersection of the locus: at theta a multiple of pi/n some
    // critical-value real parts coincide (n = 4, theta = 0: two of three)
    CPoly h = qn_stratum(4, 1.0, 0.0, 0.0, Component::R);
    CriticalData cd4 = critical_data(CPoly({std::vector<Cplx>{0.0, -4.0, 0.0, 0.0, 1.0}}));
    CHECK(cd4.critical_values.size() == 3);
    CHECK(cd4.distinct_re.size() == 2);
    (void)h;
}

TEST_CASE("degenerate grids collapse to strips") {
    // z^3 + 3z: both critical values purely imaginary, one column of cells
    CPoly f({std::vector<Cplx>{0.0, 3.0, 0.0, 1.0}});
    GridDecomposition g = critical_grid(f);
    CHECK(g.ell == 1);
    CHECK(g.m == 2);
    CHECK(g.enumerator == g.formula());
    CHECK(enumerator_to_text(g.enumerator) == "[2,7,6]");
}

TEST_CASE("classify3 singularity flags agree with the exact verdicts") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int iter = 0; iter < 60; ++iter) {
        Rat a = make_rat(num(rng), 1 + iter % 3), b = make_rat(num(rng), 2), c = make_rat(num(rng), 1 + iter % 2), d = make_rat(num(rng), 2);
        auto cell = classify3(a, b, c, d);
        auto vr = singularity_verdict(cubic(a, b, c, d), Component::R);
        auto vi = singularity_verdict(cubic(a, b, c, d), Component::I);
        CHECK(cell.r_singular == vr.has_real_witness);
        CHECK(cell.i_singular == vi.has_real_witness);
    }
    // on-locus samples from the rational parametrisation w = p + qi
    std::uniform_int_distribution<int> pq(-3, 3);
    for (int iter = 0; iter < 60; ++iter) {
        Rat p(pq(rng)), q = make_rat(pq(rng), 1 + iter % 2);
        if (sgn(p) == 0 && sgn(q) == 0) continue;
        Rat a = p * p - q * q, b = 2 * p * q;
        Rat X = p * (p * p - 3 * q * q);  // Re (p+qi)^3
        Rat d = make_rat(num(rng), 2);
        auto cell = classify3(a, b, X, d);
        CHECK(cell.r_singular);
        auto v = singularity_verdict(cubic(a, b, X, d), Component::R);
        CHECK(v.has_real_witness);
    }
}

TEST_CASE("fcubic helper matches the exact cubic") {
    CPoly f = fcubic(1, 0, 1, 0);
    CHECK(std::abs(f.eval(1.0)) < 1e-12);  // z^3 - 3z + 2 at 1
}

TEST_CASE("verdicts mirror critical values on the axes") {
    // the analytic/algebraic bridge: R is singular exactly when some
    // critical value has vanishing real part
    std::mt19937 rng(113);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3 + iter % 3;
        std::vector<QComplex> qc(n + 1);
        for (int k = 0; k < n; ++k)
            qc[k] = QComplex(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
        qc[n] = QComplex(1, 0);
        qc[n - 1] = QComplex(0, 0);
        QCPoly f(qc);
        CriticalData cd = critical_data(CPoly::from_exact(f));
        double scale = 1.0;
        for (auto v : cd.critical_values) scale = std::max(scale, std::abs(v));
        bool re_zero = false, im_zero = false;
        for (auto v : cd.critical_values) {
            if (std::abs(v.real()) <= 1e-9 * scale) re_zero = true;
            if (std::abs(v.imag()) <= 1e-9 * scale) im_zero = true;
        }
        CHECK(singularity_verdict(f, Component::R).has_real_witness == re_zero);
        CHECK(singularity_verdict(f, Component::I).has_real_witness == im_zero);
    }
}

TEST_CASE("classify3 consistency report") {
    ConsistencyReport rep = classify3_consistency(40, 10);
    CHECK(rep.all_agree());
    CHECK(rep.samples == 80);
    CHECK(rep.tracer_errors == 0);
    CHECK(rep.traced == rep.samples);
}
