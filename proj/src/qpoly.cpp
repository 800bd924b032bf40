#include "qpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace bb {

QPoly QPoly::monomial(int k, Rat v) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = std::move(v);
    return QPoly(std::move(c));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= s;
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
    if (d.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    std::vector<Rat> rem = c_;
    if (deg() < d.deg()) return {QPoly(), *this};
    std::vector<Rat> quo(deg() - d.deg() + 1, Rat(0));
    for (int k = deg(); k >= d.deg(); --k) {
        Rat f = rem[k] / d.lead();
        if (sgn(f) != 0) {
            quo[k - d.deg()] = f;
            for (int j = 0; j <= d.deg(); ++j) rem[k - d.deg() + j] -= f * d[j];
        }
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::derivative() const {
    if (deg() <= 0) return QPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return QPoly(std::move(r));
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

int QPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(lead()); }

int QPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    return deg() % 2 == 0 ? sgn(lead()) : -sgn(lead());
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lead());
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg(); k >= 0; --k) {
        if (sgn(c_[k]) == 0) continue;
        Rat v = c_[k];
        if (!first) os << (sgn(v) > 0 ? " + " : " - ");
        else if (sgn(v) < 0) os << "-";
        first = false;
        Rat a = abs(v);
        if (k == 0 || a != 1) os << rat_to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// determinant by fraction-full Gaussian elimination; fine at these sizes
template <class T>
T det(std::vector<std::vector<T>> m, const T& zero, const T& one) {
    size_t n = m.size();
    T result = one;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == zero) ++piv;
        if (piv == n) return zero;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            result = zero - result;
        }
        result = result * m[col][col];
        T inv_lead = m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == zero) continue;
            T f = m[row][col] / inv_lead;
            for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
        }
    }
    return result;
}

template <class P, class T>
T sylvester_resultant(const P& p, const P& q, const T& zero, const T& one) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("resultant: both polynomials are zero");
    if (p.is_zero() || q.is_zero()) return zero;
    int dp = p.deg(), dq = q.deg();
    if (dp == 0 && dq == 0) return one;
    if (dp == 0) {
        T r = one;
        for (int k = 0; k < dq; ++k) r = r * p[0];
        return r;
    }
    if (dq == 0) {
        T r = one;
        for (int k = 0; k < dp; ++k) r = r * q[0];
        return r;
    }
    size_t n = dp + dq;
    std::vector<std::vector<T>> m(n, std::vector<T>(n, zero));
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k) m[row][row + dp - k] = p[k];
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k) m[dq + row][row + dq - k] = q[k];
    return det(std::move(m), zero, one);
}

}  // namespace

Rat resultant(const QPoly& p, const QPoly& q) {
    return sylvester_resultant(p, q, Rat(0), Rat(1));
}

QComplex resultant(const QCPoly& p, const QCPoly& q) {
    return sylvester_resultant(p, q, QComplex(0, 0), QComplex(1, 0));
}

namespace {

// Sturm chain sign variations at x (or at +/- infinity for inf = +/-1)
int sturm_variations(const std::vector<QPoly>& chain, const Rat& x, int inf) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = inf == 0 ? p.sign_at(x) : (inf > 0 ? p.sign_at_pos_inf() : p.sign_at_neg_inf());
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        QPoly r = chain[chain.size() - 2].divrem(chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

}  // namespace

int count_real_roots(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    if (p.deg() == 0) return 0;
    QPoly sf = p.divrem(qpoly_gcd(p, p.derivative())).first;
    auto chain = sturm_chain(sf);
    return sturm_variations(chain, Rat(0), -1) - sturm_variations(chain, Rat(0), +1);
}

std::vector<RootInterval> real_roots(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("real_roots: zero polynomial");
    std::vector<RootInterval> out;
    if (p.deg() == 0) return out;

    QPoly sf = p.divrem(qpoly_gcd(p, p.derivative())).first.monic();
    auto chain = sturm_chain(sf);

    // Cauchy bound
    Rat bound(1);
    for (int k = 0; k < sf.deg(); ++k) {
        Rat a = abs(sf[k]);
        if (a > bound) bound = a;
    }
    bound += 1;

    auto count_open = [&](const Rat& lo, const Rat& hi) {
        return sturm_variations(chain, lo, 0) - sturm_variations(chain, hi, 0);
    };

    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::deque<Seg> work;
    // endpoints +-bound are non-roots by construction
    work.push_back({-bound, bound, count_open(-bound, bound)});
    while (!work.empty()) {
        Seg s = work.front();
        work.pop_front();
        if (s.count == 0) continue;
        if (s.count == 1 && sf.sign_at(s.lo) * sf.sign_at(s.hi) < 0) {
            // bisect until the interval is reasonably tight
            Rat lo = s.lo, hi = s.hi;
            for (int it = 0; it < 40 && hi - lo > Rat(1, 1048576L); ++it) {
                Rat mid = (lo + hi) / 2;
                int sm = sf.sign_at(mid);
                if (sm == 0) {
                    out.push_back({mid, mid});
                    lo = hi = mid;
                    break;
                }
                (sm * sf.sign_at(lo) < 0 ? hi : lo) = mid;
            }
            if (lo != hi) out.push_back({lo, hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (sf.sign_at(mid) == 0) {
            out.push_back({mid, mid});
            // shrink around the exact root so neighbours separate
            Rat eps = (s.hi - s.lo) / 1024;
            Rat l2 = mid - eps, r2 = mid + eps;
            while (sf.sign_at(l2) == 0) l2 = (s.lo + l2) / 2;
            while (sf.sign_at(r2) == 0) r2 = (r2 + s.hi) / 2;
            work.push_back({s.lo, l2, count_open(s.lo, l2)});
            work.push_back({r2, s.hi, count_open(r2, s.hi)});
        } else {
            work.push_back({s.lo, mid, count_open(s.lo, mid)});
            work.push_back({mid, s.hi, count_open(mid, s.hi)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

QCPoly QCPoly::operator+(const QCPoly& o) const {
    std::vector<QComplex> r(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c_.size(); ++k) r[k] = r[k] + c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] = r[k] + o.c_[k];
    return QCPoly(std::move(r));
}

QCPoly QCPoly::operator-(const QCPoly& o) const {
    std::vector<QComplex> r(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c_.size(); ++k) r[k] = r[k] + c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] = r[k] - o.c_[k];
    return QCPoly(std::move(r));
}

QCPoly QCPoly::operator*(const QCPoly& o) const {
    if (is_zero() || o.is_zero()) return QCPoly();
    std::vector<QComplex> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return QCPoly(std::move(r));
}

QCPoly QCPoly::operator*(const QComplex& s) const {
    std::vector<QComplex> r = c_;
    for (auto& x : r) x = x * s;
    return QCPoly(std::move(r));
}

QCPoly QCPoly::derivative() const {
    if (deg() <= 0) return QCPoly();
    std::vector<QComplex> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        r[k - 1] = c_[k] * QComplex(Rat(static_cast<long>(k)), Rat(0));
    return QCPoly(std::move(r));
}

QComplex QCPoly::eval(const QComplex& x) const {
    QComplex acc(0, 0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

QPoly QCPoly::real_part() const {
    std::vector<Rat> r(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) r[k] = c_[k].re;
    return QPoly(std::move(r));
}

QPoly QCPoly::imag_part() const {
    std::vector<Rat> r(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) r[k] = c_[k].im;
    return QPoly(std::move(r));
}

QCPoly disc_in_t(const QCPoly& f, Axis axis) {
    if (!f.is_monic() || f.deg() < 2)
        throw std::domain_error("disc_in_t: monic polynomial of degree >= 2 required");
    int n = f.deg();
    QComplex eps = axis == Axis::Imaginary ? QComplex(0, 1) : QComplex(1, 0);
    QCPoly fp = f.derivative();

    // Res_z(f - eps*t, f') has degree n-1 in t; interpolate through n nodes.
    std::vector<QComplex> nodes(n), values(n);
    for (int j = 0; j < n; ++j) {
        nodes[j] = QComplex(Rat(j), Rat(0));
        auto coeffs = f.coeffs();
        coeffs[0] = coeffs[0] - eps * nodes[j];
        values[j] = resultant(QCPoly(std::move(coeffs)), fp);
    }

    // Lagrange interpolation over Q(i)
    QCPoly acc;
    for (int j = 0; j < n; ++j) {
        QCPoly basis = QCPoly::constant(QComplex(1, 0));
        QComplex denom(1, 0);
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            basis = basis * QCPoly({QComplex(0, 0) - nodes[k], QComplex(1, 0)});
            denom = denom * (nodes[j] - nodes[k]);
        }
        acc = acc + basis * (values[j] / denom);
    }
    if (acc.deg() != n - 1) throw std::logic_error("disc_in_t: unexpected degree drop");
    QComplex inv_lead = QComplex(1, 0) / acc.lead();
    return acc * inv_lead;
}

}  // namespace bb
