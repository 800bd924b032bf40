#include "stratifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "tracer.hpp"

namespace bb {

SingularityVerdict singularity_verdict(const QCPoly& f, Component comp) {
    SingularityVerdict v;
    v.component = comp;
    QCPoly p = disc_in_t(f, comp == Component::R ? Axis::Imaginary : Axis::Real);
    QPoly pre = p.real_part();
    QPoly pim = p.imag_part();

    QPoly common;
    if (pim.is_zero()) {
        v.resultant_value = 0;
        common = pre;
    } else {
        v.resultant_value = resultant(pre, pim);
        if (sgn(v.resultant_value) != 0) return v;
        common = qpoly_gcd(pre, pim);
    }
    if (common.deg() < 1) return v;  // no common root over C at all
    v.witness_intervals = real_roots(common);
    v.has_real_witness = !v.witness_intervals.empty();
    return v;
}

Rat delta3(const Rat& a, const Rat& b, const Rat& c) {
    Rat A = a * (a * a - 3 * b * b);
    Rat s = a * a + b * b;
    Rat lhs = 2 * c * c - A;
    return lhs * lhs - s * s * s;
}

Rat delta3_prime(const Rat& a, const Rat& b, const Rat& d) {
    Rat A = a * (a * a - 3 * b * b);
    Rat s = a * a + b * b;
    Rat lhs = 2 * d * d + A;
    return lhs * lhs - s * s * s;
}

bool cylindrical_identity_check(int samples, double tol, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ur(0.01, 2.0), uth(0.0, 4.0 * M_PI),
        uc(-3.0, 3.0);
    for (int k = 0; k < samples; ++k) {
        double r = ur(rng), th = uth(rng), c = uc(rng), d = uc(rng);
        double a = r * std::cos(th), b = r * std::sin(th);
        double A = a * (a * a - 3 * b * b);
        double s3 = std::pow(a * a + b * b, 3.0);
        double r3 = r * r * r;
        double co = std::cos(1.5 * th), si = std::sin(1.5 * th);

        double closed = std::pow(2 * c * c - A, 2.0) - s3;
        double factored = 4.0 * (c * c - r3 * co * co) * (c * c + r3 * si * si);
        double scale = std::max({1.0, std::abs(closed), std::abs(factored), r3 * r3, c * c * c * c});
        if (std::abs(closed - factored) > tol * scale) return false;

        double closed_p = std::pow(2 * d * d + A, 2.0) - s3;
        double factored_p = 4.0 * (d * d + r3 * co * co) * (d * d - r3 * si * si);
        scale = std::max({1.0, std::abs(closed_p), std::abs(factored_p), r3 * r3, d * d * d * d});
        if (std::abs(closed_p - factored_p) > tol * scale) return false;
    }
    return true;
}

namespace {

// Exact sign data for the degree-3 cell of z^3 - 3(a+bi)z + 2(c+di).
// W = w^3 for w^2 = a+bi, canonicalised to X >= 0 (and Y >= 0 when X = 0);
// rho = (a^2+b^2)^{3/2}. All comparisons reduce to rational arithmetic.
struct Fingerprint {
    int sector = -1;  // 12-fold ray/sector code of (a,b); -1 at the origin
    int sc = 0, sd = 0;
    int s_cmX = 0, s_cpX = 0;  // signs of c - X and c + X
    int s_dmY = 0, s_dpY = 0;  // signs of d - Y and d + Y
};

struct ExactCell {
    Rat a, b, c, d;
    Rat A, B, rho2;
    bool origin;  // a = b = 0

    ExactCell(const Rat& a_, const Rat& b_, const Rat& c_, const Rat& d_)
        : a(a_), b(b_), c(c_), d(d_) {
        A = a * (a * a - 3 * b * b);
        B = b * (3 * a * a - b * b);
        Rat s = a * a + b * b;
        rho2 = s * s * s;
        origin = sgn(a) == 0 && sgn(b) == 0;
    }

    // sign of q - rho
    int cmp_rho(const Rat& q) const {
        if (sgn(q) < 0) return sgn(rho2) == 0 ? sgn(q) : -1;
        return sgn(q * q - rho2);
    }

    bool X_zero() const { return cmp_rho(-A) == 0; }
    bool Y_zero() const { return cmp_rho(A) == 0; }
    int sgnY() const {
        if (origin) return 0;
        if (!X_zero()) return sgn(B);
        return Y_zero() ? 0 : 1;  // canonical Y >= 0 on the X = 0 rays
    }

    int sector() const {
        if (origin) return -1;
        int sb = sgn(b);
        // boundaries at theta = k*pi/3: b = 0 or b^2 = 3a^2
        Rat t = b * b - 3 * a * a;
        if (sb == 0) return sgn(a) > 0 ? 0 : 6;
        if (sb > 0) {
            if (sgn(a) > 0 && sgn(t) < 0) return 1;
            if (sgn(a) > 0 && sgn(t) == 0) return 2;
            if (sgn(t) > 0) return 3;
            if (sgn(a) < 0 && sgn(t) == 0) return 4;
            return 5;
        }
        if (sgn(a) < 0 && sgn(t) < 0) return 7;
        if (sgn(a) < 0 && sgn(t) == 0) return 8;
        if (sgn(t) > 0) return 9;
        if (sgn(a) > 0 && sgn(t) == 0) return 10;
        return 11;
    }

    Fingerprint fingerprint() const {
        Fingerprint fp;
        fp.sector = sector();
        fp.sc = sgn(c);
        fp.sd = sgn(d);
        if (origin) {
            fp.s_cmX = fp.s_cpX = fp.sc;
            fp.s_dmY = fp.s_dpY = fp.sd;
            return fp;
        }
        int c_sq_cmp = cmp_rho(2 * c * c - A);  // sign of c^2 - X^2
        bool xz = X_zero();
        fp.s_cmX = fp.sc < 0 ? -1 : (xz ? fp.sc : c_sq_cmp);
        fp.s_cpX = fp.sc > 0 ? 1 : (fp.sc == 0 ? (xz ? 0 : 1) : -c_sq_cmp);

        int d_sq_cmp = cmp_rho(2 * d * d + A);  // sign of d^2 - Y^2
        int sy = sgnY();
        if (sy >= 0) {
            bool yz = sy == 0;
            fp.s_dmY = fp.sd < 0 ? -1 : (yz ? fp.sd : d_sq_cmp);
            fp.s_dpY = fp.sd > 0 ? 1 : (fp.sd == 0 ? (yz ? 0 : 1) : -d_sq_cmp);
        } else {
            // Y < 0: d - Y = d + |Y|, d + Y = d - |Y|
            fp.s_dmY = fp.sd > 0 ? 1 : (fp.sd == 0 ? 1 : -d_sq_cmp);
            fp.s_dpY = fp.sd < 0 ? -1 : d_sq_cmp;
        }
        return fp;
    }

    bool double_root() const { return c * c - d * d == A && 2 * c * d == B; }
    bool r_singular() const { return cmp_rho(2 * c * c - A) == 0; }
    bool i_singular() const { return cmp_rho(2 * d * d + A) == 0; }
};

// fingerprint action of the generator f(z) -> i f(e^{-i pi/6} z):
// labels rotate by one, (a,b) by pi/3, (c,d) by pi/2, W by +-i
Fingerprint fp_psi(const Fingerprint& f, int old_sgnY) {
    Fingerprint r;
    r.sector = f.sector < 0 ? -1 : (f.sector + 2) % 12;
    r.sc = -f.sd;
    r.sd = f.sc;
    if (f.sector < 0) {
        r.s_cmX = r.s_cpX = r.sc;
        r.s_dmY = r.s_dpY = r.sd;
        return r;
    }
    if (old_sgnY > 0) {  // (X', Y') = (Y, -X)
        r.s_cmX = -f.s_dpY;
        r.s_cpX = -f.s_dmY;
        r.s_dmY = f.s_cpX;
        r.s_dpY = f.s_cmX;
    } else if (old_sgnY < 0) {  // (X', Y') = (-Y, X)
        r.s_cmX = -f.s_dmY;
        r.s_cpX = -f.s_dpY;
        r.s_dmY = f.s_cmX;
        r.s_dpY = f.s_cpX;
    } else {  // Y = 0: (X', Y') = (0, X)
        r.s_cmX = -f.sd;
        r.s_cpX = -f.sd;
        r.s_dmY = f.s_cmX;
        r.s_dpY = f.s_cpX;
    }
    return r;
}

// fingerprint action of f(z) -> conj(f(conj z)): (a,b,c,d) -> (a,-b,c,-d)
Fingerprint fp_tau(const Fingerprint& f, bool x_zero) {
    Fingerprint r;
    r.sector = f.sector < 0 ? -1 : (12 - f.sector) % 12;
    r.sc = f.sc;
    r.sd = -f.sd;
    if (f.sector < 0) {
        r.s_cmX = r.s_cpX = r.sc;
        r.s_dmY = r.s_dpY = r.sd;
        return r;
    }
    r.s_cmX = f.s_cmX;
    r.s_cpX = f.s_cpX;
    if (!x_zero) {  // canonical W' = (X, -Y)
        r.s_dmY = -f.s_dmY;
        r.s_dpY = -f.s_dpY;
    } else {  // X = 0, canonical Y stays >= 0
        r.s_dmY = -f.s_dpY;
        r.s_dpY = -f.s_dmY;
    }
    return r;
}

int track_sgnY(int sector) {
    // canonical sgn Y from the sector code: B = r^3 sin(3 theta)
    if (sector < 0) return 0;
    if (sector % 2 == 1) return sector % 4 == 1 ? 1 : -1;
    if (sector == 2 || sector == 6 || sector == 10) return 1;  // X = 0 rays
    return 0;                                                  // Y = 0 rays
}

bool track_Xzero(int sector) { return sector == 2 || sector == 6 || sector == 10; }

Fingerprint fp_apply(const DihedralElement& g, Fingerprint fp) {
    if (g.flip) fp = fp_tau(fp, track_Xzero(fp.sector));
    for (int k = 0; k < g.rot; ++k) fp = fp_psi(fp, track_sgnY(fp.sector));
    return fp;
}

// reduction of a fingerprint to a cell identifier within its case
std::vector<int> cell_id(const std::string& label, const Fingerprint& f) {
    auto x_arc = [&] { return ((f.sector + 1) % 12) / 4; };  // arcs between X = 0 rays
    auto y_arc = [&] { return (f.sector - 1) / 4; };         // arcs between Y = 0 rays
    if (label == "a.1") return {};
    if (label == "a.2") return f.sc == 0 ? std::vector<int>{0, f.sd} : std::vector<int>{1, f.sc};
    if (label == "A.1") return {f.sc, f.sd};
    if (label == "b.1") {
        if (f.sc == 0 && f.sector >= 0 && track_Xzero(f.sector))
            return {0, (f.sector - 2) / 4, f.sd};
        return {1, f.sector / 4, f.sc};
    }
    if (label == "b.2") {
        if (f.sector >= 0 && track_Xzero(f.sector)) return {0, (f.sector - 2) / 4, f.s_dmY};
        return {1, f.sector / 4, f.s_cmX};
    }
    if (label == "b.3") {
        if (f.sector >= 0 && track_Xzero(f.sector)) return {0, (f.sector - 2) / 4};
        return {1, f.sector / 4};
    }
    if (label == "c.2" || label == "c.4") return {f.sector, f.sc};
    if (label == "c.1") {
        bool r_flavor = f.s_cmX == 0 || f.s_cpX == 0;
        if (r_flavor) return {0, x_arc(), f.sc, f.sd};
        return {1, y_arc(), f.sd, f.sc};
    }
    if (label == "c.3") {
        bool r_flavor = f.s_cmX == 0 || f.s_cpX == 0;
        if (r_flavor) return {0, f.sector, f.sc};
        return {1, f.sector, f.sd};
    }
    if (label == "A.2") {
        bool r_outside = f.s_cmX == 1 || f.s_cpX == -1;  // c^2 > X^2
        if (r_outside) return {0, f.sc, y_arc()};
        return {1, f.sd, x_arc()};
    }
    if (label == "B") return {f.sector};
    throw std::logic_error("cell_id: unknown case label");
}

struct RepMatchings {
    const char* r;
    const char* i;
};

// canonical representative matchings, recorded from traced representatives
RepMatchings rep_matchings(const std::string& label) {
    if (label == "a.1") return {"[[1,7],[3,9],[5,11]]", "[[0,6],[2,8],[4,10]]"};
    if (label == "a.2") return {"[[1,7],[3,9],[5,11]]", "[[0,10],[2,4],[6,8]]"};
    if (label == "b.1") return {"[[1,5],[3,9],[7,11]]", "[[0,4],[2,6],[8,10]]"};
    if (label == "b.2") return {"[[1,5],[3,9],[7,11]]", "[[0,2],[4,6],[8,10]]"};
    if (label == "b.3") return {"[[1,5],[3,9],[7,11]]", "[[0,6],[2,4],[8,10]]"};
    if (label == "c.1") return {"[[1,3],[5,9],[7,11]]", "[[0,2],[4,6],[8,10]]"};
    if (label == "c.2") return {"[[1,3],[5,9],[7,11]]", "[[0,4],[2,10],[6,8]]"};
    if (label == "c.3") return {"[[1,3],[5,9],[7,11]]", "[[0,2],[4,10],[6,8]]"};
    if (label == "c.4") return {"[[1,3],[5,9],[7,11]]", "[[0,2],[4,8],[6,10]]"};
    if (label == "A.1") return {"[[1,3],[5,7],[9,11]]", "[[0,10],[2,4],[6,8]]"};
    if (label == "A.2") return {"[[1,3],[5,7],[9,11]]", "[[0,2],[4,10],[6,8]]"};
    if (label == "B") return {"[[1,11],[3,9],[5,7]]", "[[0,2],[4,10],[6,8]]"};
    throw std::logic_error("rep_matchings: unknown case label");
}

std::string classify_label(const ExactCell& e) {
    if (e.origin) {
        if (sgn(e.c) == 0 && sgn(e.d) == 0) return "a.1";
        if (sgn(e.c) == 0 || sgn(e.d) == 0) return "a.2";
        return "A.1";
    }
    if (e.double_root()) {
        // the other critical value is 4(c+di), nonzero here
        if (sgn(e.c) == 0 || sgn(e.d) == 0) return "b.1";
        return "c.4";
    }
    int c_cmp = e.cmp_rho(2 * e.c * e.c - e.A);
    int d_cmp = e.cmp_rho(2 * e.d * e.d + e.A);
    int rz = c_cmp == 0 ? (sgn(e.c) == 0 && e.X_zero() ? 2 : 1) : 0;
    int iz = d_cmp == 0 ? (sgn(e.d) == 0 && e.Y_zero() ? 2 : 1) : 0;
    if (rz == 1 && iz == 1) return "c.2";
    if (rz == 2) return d_cmp > 0 ? "b.2" : "b.3";
    if (iz == 2) return c_cmp > 0 ? "b.2" : "b.3";
    if (rz == 1) return d_cmp > 0 ? "c.1" : "c.3";
    if (iz == 1) return c_cmp > 0 ? "c.1" : "c.3";
    if (c_cmp > 0 && d_cmp > 0) return "A.1";
    if (c_cmp < 0 && d_cmp < 0) return "B";
    return "A.2";
}

int case_degree(const std::string& label) {
    if (label == "a.1") return 0;
    if (label == "a.2" || label == "b.1") return 1;
    if (label == "b.2" || label == "b.3" || label == "c.2" || label == "c.4") return 2;
    if (label == "c.1" || label == "c.3") return 3;
    return 4;
}

}  // namespace

std::array<Rat, 4> classify3_representative(const std::string& label) {
    auto mk = [](long a, long b, long c, long d, long den = 1) {
        return std::array<Rat, 4>{Rat(a, den), Rat(b, den), Rat(c, den), Rat(d, den)};
    };
    if (label == "a.1") return mk(0, 0, 0, 0);
    if (label == "a.2") return mk(0, 0, 0, 1);
    if (label == "b.1") return {Rat(-1), Rat(0), Rat(0), Rat(-1)};
    if (label == "b.2") return {Rat(-1), Rat(0), Rat(0), Rat(-2)};
    if (label == "b.3") return {Rat(-1), Rat(0), Rat(0), Rat(-1, 2)};
    if (label == "c.1") return {Rat(0), Rat(2), Rat(2), Rat(-5)};
    if (label == "c.2") return {Rat(0), Rat(2), Rat(2), Rat(2)};
    if (label == "c.3") return {Rat(0), Rat(2), Rat(2), Rat(-1)};
    if (label == "c.4") return {Rat(0), Rat(2), Rat(2), Rat(-2)};
    if (label == "A.1") return mk(0, 0, 1, 1);
    if (label == "A.2") return {Rat(0), Rat(2), Rat(5), Rat(1)};
    if (label == "B") return mk(1, 1, 0, 0);
    throw std::domain_error("classify3_representative: unknown case label");
}

CellDescriptor3 classify3(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    ExactCell e(a, b, c, d);
    CellDescriptor3 out;
    out.case_label = classify_label(e);
    out.degree = case_degree(out.case_label);
    out.r_singular = e.r_singular();
    out.i_singular = e.i_singular();
    out.has_double_root = e.double_root();

    auto rep_coeffs = classify3_representative(out.case_label);
    ExactCell rep(rep_coeffs[0], rep_coeffs[1], rep_coeffs[2], rep_coeffs[3]);
    Fingerprint target = e.fingerprint();
    Fingerprint base = rep.fingerprint();
    std::vector<int> want = cell_id(out.case_label, target);
    bool found = false;
    for (int flip = 0; flip < 2 && !found; ++flip)
        for (int rot = 0; rot < 12 && !found; ++rot) {
            DihedralElement g{rot, flip != 0};
            Fingerprint img = fp_apply(g, base);
            if (cell_id(out.case_label, img) == want) {
                out.orbit_element = g;
                found = true;
            }
        }
    if (!found) throw std::logic_error("classify3: orbit element not found");

    auto reps = rep_matchings(out.case_label);
    out.rep_R = *Matching::from_text(reps.r, 12);
    out.rep_I = *Matching::from_text(reps.i, 12);
    return out;
}

CellEnumerator GridDecomposition::formula() const {
    long l = ell, mm = m;
    return {Int(mm * l), Int(2 * mm * l + mm + l), Int(mm * l + mm + l + 1)};
}

GridDecomposition critical_grid(const CPoly& f, double cluster_tol) {
    CriticalData cd = critical_data(f, cluster_tol);
    GridDecomposition g;
    g.a_cuts = cd.distinct_re;
    g.b_cuts = cd.distinct_im;
    g.ell = static_cast<int>(g.a_cuts.size());
    g.m = static_cast<int>(g.b_cuts.size());

    const double inf = std::numeric_limits<double>::infinity();
    auto mid = [](double lo, double hi) {
        if (std::isinf(lo) && std::isinf(hi)) return 0.0;
        if (std::isinf(lo)) return hi - 1.0;
        if (std::isinf(hi)) return lo + 1.0;
        return 0.5 * (lo + hi);
    };

    // 0-cells
    for (double x : g.a_cuts)
        for (double y : g.b_cuts) g.cells.push_back({0, {x, y}, {x, y}, Cplx(x, y)});
    // vertical 1-cells
    for (double x : g.a_cuts)
        for (int k = 0; k <= g.m; ++k) {
            double lo = k == 0 ? -inf : g.b_cuts[k - 1];
            double hi = k == g.m ? inf : g.b_cuts[k];
            g.cells.push_back({1, {x, lo}, {x, hi}, Cplx(x, mid(lo, hi))});
        }
    // horizontal 1-cells
    for (double y : g.b_cuts)
        for (int k = 0; k <= g.ell; ++k) {
            double lo = k == 0 ? -inf : g.a_cuts[k - 1];
            double hi = k == g.ell ? inf : g.a_cuts[k];
            g.cells.push_back({1, {lo, y}, {hi, y}, Cplx(mid(lo, hi), y)});
        }
    // 2-cells
    for (int j = 0; j <= g.ell; ++j)
        for (int k = 0; k <= g.m; ++k) {
            double xlo = j == 0 ? -inf : g.a_cuts[j - 1];
            double xhi = j == g.ell ? inf : g.a_cuts[j];
            double ylo = k == 0 ? -inf : g.b_cuts[k - 1];
            double yhi = k == g.m ? inf : g.b_cuts[k];
            g.cells.push_back({2, {xlo, ylo}, {xhi, yhi}, Cplx(mid(xlo, xhi), mid(ylo, yhi))});
        }

    g.enumerator.assign(3, Int(0));
    for (const auto& cell : g.cells) g.enumerator[cell.degree] += 1;
    return g;
}

bool is_tree_component(const CPoly& f, Component comp, double tol) {
    CriticalData cd = critical_data(f);
    double scale = 1.0;
    for (const auto& v : cd.critical_values) scale = std::max(scale, std::abs(v));
    for (const auto& v : cd.critical_values) {
        double part = comp == Component::R ? v.real() : v.imag();
        if (std::abs(part) > tol * scale) return false;
    }
    return true;
}

ShabatResult shabat_check(const CPoly& f, double cluster_tol) {
    CriticalData cd = critical_data(f, cluster_tol);
    ShabatResult res;
    double scale = 1.0;
    for (const auto& v : cd.critical_values) scale = std::max(scale, std::abs(v));
    for (const auto& v : cd.critical_values) {
        bool fresh = true;
        for (const auto& u : res.values)
            if (std::abs(u - v) <= cluster_tol * scale * 10) fresh = false;
        if (fresh) res.values.push_back(v);
    }
    res.is_shabat = res.values.size() == 2;
    return res;
}

CPoly qn_stratum(int n, double r, double theta, double free_coord, Component which) {
    if (n < 2 || r <= 0) throw std::domain_error("qn_stratum: n >= 2, r > 0 required");
    double rho = (n - 1) * std::pow(r, static_cast<double>(n) / (n - 1));
    double phase = static_cast<double>(n) * theta / (n - 1);
    Cplx constant = which == Component::R
                        ? Cplx(rho * std::cos(phase), free_coord)
                        : Cplx(free_coord, rho * std::sin(phase));
    std::vector<Cplx> coeffs(n + 1, Cplx(0.0));
    coeffs[n] = 1.0;
    coeffs[1] = -static_cast<double>(n) * Cplx(r * std::cos(theta), r * std::sin(theta));
    coeffs[0] = constant;
    return CPoly(std::move(coeffs));
}

ConsistencyReport classify3_consistency(int random_samples, int per_family, unsigned seed) {
    ConsistencyReport rep;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-8, 8), den(1, 4), pq(-3, 3);

    auto sample = [&](const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
        ++rep.samples;
        CellDescriptor3 cell = classify3(a, b, c, d);
        QCPoly f({QComplex(2 * c, 2 * d), QComplex(-3 * a, -3 * b), QComplex(0, 0),
                  QComplex(1, 0)});
        auto vr = singularity_verdict(f, Component::R);
        auto vi = singularity_verdict(f, Component::I);
        if (vr.has_real_witness != cell.r_singular || vi.has_real_witness != cell.i_singular) {
            rep.mismatches.push_back("verdict disagrees in case " + cell.case_label);
            return;
        }
        TraceResult tr;
        try {
            tr = basketball_of(CPoly::from_exact(f));
        } catch (const TraceError&) {
            ++rep.tracer_errors;
            return;
        }
        ++rep.traced;
        if (tr.basketball.degree != cell.degree) {
            rep.mismatches.push_back("degree disagrees in case " + cell.case_label);
            return;
        }
        Basketball expect =
            act(cell.orbit_element, make_basketball(cell.rep_R, cell.rep_I).ball.value());
        if (!(expect.R == tr.R && expect.I == tr.I))
            rep.mismatches.push_back("matchings disagree in case " + cell.case_label);
    };

    for (int k = 0; k < random_samples; ++k)
        sample(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)),
               make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));

    auto wpoint = [&](Rat& a, Rat& b, Rat& X, Rat& Y) {
        Rat p(0), q(0);
        while (sgn(p) == 0 && sgn(q) == 0) {
            p = make_rat(pq(rng), den(rng));
            q = make_rat(pq(rng), den(rng));
        }
        a = p * p - q * q;
        b = 2 * p * q;
        X = p * (p * p - 3 * q * q);
        Y = q * (3 * p * p - q * q);
    };
    for (int fam = 0; fam < 4; ++fam)
        for (int k = 0; k < per_family; ++k) {
            Rat a, b, X, Y;
            wpoint(a, b, X, Y);
            switch (fam) {
                case 0: sample(a, b, X, make_rat(num(rng), den(rng))); break;
                case 1: sample(a, b, make_rat(num(rng), den(rng)), Y); break;
                case 2: sample(a, b, X, Y); break;      // double roots
                default: sample(a, b, X, -Y); break;    // both components singular
            }
        }
    return rep;
}

bool qn_critical_values_check(int n, int samples, double tol, unsigned seed) {
    std::mt19937 rng(seed + n);
    std::uniform_real_distribution<double> ur(0.2, 2.0), uth(0.0, 2.0 * M_PI);
    for (int s = 0; s < samples; ++s) {
        double r = ur(rng), th = uth(rng);
        std::vector<Cplx> coeffs(n + 1, Cplx(0.0));
        coeffs[n] = 1.0;
        coeffs[1] = -static_cast<double>(n) * std::polar(r, th);
        CPoly f{std::move(coeffs)};
        CriticalData cd = critical_data(f);

        double rho = (n - 1) * std::pow(r, static_cast<double>(n) / (n - 1));
        std::vector<Cplx> expected;
        for (int k = 0; k + 1 < n; ++k)
            expected.push_back(-std::polar(rho, (n * th + 2 * M_PI * k) / (n - 1)));

        // greedy multiset match
        std::vector<Cplx> got = cd.critical_values;
        if (got.size() != expected.size()) return false;
        for (const auto& e : expected) {
            double best = 1e300;
            size_t pick = 0;
            for (size_t j = 0; j < got.size(); ++j)
                if (std::abs(got[j] - e) < best) {
                    best = std::abs(got[j] - e);
                    pick = j;
                }
            if (best > tol * std::max(1.0, rho)) return false;
            got.erase(got.begin() + pick);
        }
    }
    return true;
}

}  // namespace bb
