#include "cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace bb {

CPoly CPoly::from_exact(const QCPoly& f) {
    std::vector<Cplx> c(f.coeffs().size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = f[k].to_complex();
    return CPoly(std::move(c));
}

Cplx CPoly::eval(Cplx z) const {
    Cplx acc = 0.0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
}

CPoly CPoly::derivative() const {
    if (deg() <= 0) return CPoly();
    std::vector<Cplx> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<double>(k);
    return CPoly(std::move(r));
}

CPoly CPoly::operator*(const CPoly& o) const {
    if (is_zero() || o.is_zero()) return CPoly();
    std::vector<Cplx> r(c_.size() + o.c_.size() - 1, Cplx(0.0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return CPoly(std::move(r));
}

double CPoly::coeff_scale() const {
    double m = 1.0;
    for (const auto& c : c_) m = std::max(m, std::abs(c));
    return m;
}

double CPoly::magnitude_at_radius(double r) const {
    double acc = 0.0, p = 1.0;
    for (const auto& c : c_) {
        acc += std::abs(c) * p;
        p *= r;
    }
    return std::max(acc, 1.0);
}

std::string CPoly::to_string() const {
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (int k = deg(); k >= 0; --k) {
        if (std::abs(c_[k]) == 0.0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].real() << (c_[k].imag() < 0 ? "" : "+") << c_[k].imag() << "i)";
        if (k > 0) os << "z^" << k;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

template <class R>
std::vector<std::complex<R>> aberth(const std::vector<std::complex<R>>& coeffs, R tol,
                                    int max_iter) {
    using C = std::complex<R>;
    int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<C> d(n);
    for (int k = 1; k <= n; ++k) d[k - 1] = coeffs[k] * static_cast<R>(k);

    auto eval = [](const std::vector<C>& p, C z) {
        C acc = R(0);
        for (size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
        return acc;
    };

    // Fujiwara bound around the root centroid
    C center = -coeffs[n - 1] / (coeffs[n] * static_cast<R>(n));
    R radius = R(0);
    for (int k = 0; k < n; ++k) {
        R mag = std::abs(coeffs[k] / coeffs[n]);
        if (mag > R(0)) {
            R r = std::pow(mag, R(1) / static_cast<R>(n - k));
            radius = std::max(radius, r);
        }
    }
    radius = std::max(R(0.5), R(2) * radius);

    std::vector<C> z(n);
    for (int k = 0; k < n; ++k) {
        R ang = R(2) * static_cast<R>(M_PI) * static_cast<R>(k) / static_cast<R>(n) + R(0.4);
        z[k] = center + radius * C(std::cos(ang), std::sin(ang));
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        R worst = R(0);
        for (int k = 0; k < n; ++k) {
            C fz = eval(coeffs, z[k]);
            C fpz = eval(d, z[k]);
            C newton;
            if (std::abs(fpz) < R(1e-300)) {
                newton = C(tol, tol);  // nudge off a stationary start
            } else {
                newton = fz / fpz;
            }
            C sum = R(0);
            for (int j = 0; j < n; ++j)
                if (j != k) sum += C(R(1)) / (z[k] - z[j]);
            C denom = C(R(1)) - newton * sum;
            C w = std::abs(denom) < R(1e-300) ? newton : newton / denom;
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / (R(1) + std::abs(z[k])));
        }
        if (worst < R(100) * std::numeric_limits<R>::epsilon()) return z;
    }
    return z;  // caller checks residuals
}

std::vector<RootCluster> cluster_roots(const std::vector<Cplx>& raw, double tol) {
    // single linkage at radius tol^(1/2) * local scale
    size_t n = raw.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    double link = std::sqrt(tol);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            double scale = std::max(1.0, std::max(std::abs(raw[i]), std::abs(raw[j])));
            if (std::abs(raw[i] - raw[j]) <= link * scale) parent[find(i)] = find(j);
        }
    std::vector<RootCluster> out;
    std::vector<char> done(n, 0);
    for (size_t i = 0; i < n; ++i) {
        int r = find(static_cast<int>(i));
        if (done[r]) continue;
        done[r] = 1;
        Cplx sum = 0.0;
        int count = 0;
        for (size_t j = 0; j < n; ++j)
            if (find(static_cast<int>(j)) == r) {
                sum += raw[j];
                ++count;
            }
        out.push_back({sum / static_cast<double>(count), count});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

template <class R>
std::vector<RootCluster> roots_impl(const CPoly& f, double tol, int max_iter) {
    if (f.deg() < 1) throw std::domain_error("all_roots: degree >= 1 required");
    std::vector<std::complex<R>> coeffs(f.coeffs().size());
    for (size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] = std::complex<R>(static_cast<R>(f[k].real()), static_cast<R>(f[k].imag()));
    auto z = aberth<R>(coeffs, static_cast<R>(tol), max_iter);
    std::vector<Cplx> raw(z.size());
    for (size_t k = 0; k < z.size(); ++k)
        raw[k] = Cplx(static_cast<double>(z[k].real()), static_cast<double>(z[k].imag()));

    for (const auto& r : raw) {
        double residual = std::abs(f.eval(r));
        double scale = f.coeff_scale() * std::max(1.0, std::pow(std::abs(r), f.deg()));
        if (!(residual <= std::sqrt(tol) * scale))
            throw SolverError("all_roots: iteration did not converge", raw);
    }
    auto clusters = cluster_roots(raw, tol);

    // an m-fold root of f is a simple root of f^(m-1): polish each cluster
    for (auto& rc : clusters) {
        CPoly d = f;
        for (int k = 1; k < rc.multiplicity; ++k) d = d.derivative();
        CPoly dd = d.derivative();
        Cplx x = rc.value;
        for (int it = 0; it < 6; ++it) {
            Cplx denom = dd.eval(x);
            if (std::abs(denom) < 1e-300) break;
            Cplx step = d.eval(x) / denom;
            x -= step;
            if (std::abs(step) < 1e-17 * (1.0 + std::abs(x))) break;
        }
        if (std::abs(x - rc.value) < std::sqrt(tol) * (1.0 + std::abs(x))) rc.value = x;
    }
    return clusters;
}

}  // namespace

std::vector<RootCluster> all_roots(const CPoly& f, double tol) {
    return roots_impl<double>(f, tol, 200);
}

std::vector<RootCluster> all_roots_extended(const CPoly& f, double tol) {
    return roots_impl<long double>(f, tol, 200);
}

std::vector<Cplx> all_roots_flat(const CPoly& f, double tol) {
    std::vector<Cplx> out;
    for (const auto& c : all_roots(f, tol))
        for (int k = 0; k < c.multiplicity; ++k) out.push_back(c.value);
    return out;
}

namespace {

std::vector<double> cluster_sorted(std::vector<double> v, double tol) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    size_t i = 0;
    while (i < v.size()) {
        size_t j = i;
        double sum = 0.0;
        while (j < v.size() && (j == i || v[j] - v[j - 1] <= tol)) sum += v[j++];
        out.push_back(sum / static_cast<double>(j - i));
        i = j;
    }
    return out;
}

}  // namespace

CriticalData critical_data(const CPoly& f, double cluster_tol, bool extended) {
    if (f.deg() < 2) throw std::domain_error("critical_data: degree >= 2 required");
    CPoly fp = f.derivative();
    auto clusters = extended ? all_roots_extended(fp) : all_roots(fp);
    CriticalData cd;
    for (const auto& c : clusters)
        for (int k = 0; k < c.multiplicity; ++k) {
            cd.critical_points.push_back(c.value);
            cd.critical_values.push_back(f.eval(c.value));
        }
    std::vector<double> re, im;
    double scale = 1.0;
    for (const auto& v : cd.critical_values) scale = std::max(scale, std::abs(v));
    for (const auto& v : cd.critical_values) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    cd.distinct_re = cluster_sorted(re, cluster_tol * scale);
    cd.distinct_im = cluster_sorted(im, cluster_tol * scale);
    return cd;
}

}  // namespace bb
