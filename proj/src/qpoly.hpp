#ifndef BB_QPOLY_HPP
#define BB_QPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace bb {

// Univariate polynomial with exact rational coefficients, ascending powers.
// The zero polynomial has an empty coefficient vector.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(Rat v) { return QPoly(std::vector<Rat>{std::move(v)}); }
    static QPoly monomial(int k, Rat v = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](size_t k) const { return c_[k]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lead() const { return c_.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    QPoly operator-() const { return *this * Rat(-1); }
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // quotient/remainder; divisor must be nonzero
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;

    QPoly derivative() const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return sgn(eval(x)); }
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    QPoly monic() const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// gcd, normalized monic (gcd of zero polys is zero)
QPoly qpoly_gcd(QPoly a, QPoly b);

// Sylvester resultant of two rational polynomials.
// Conventions: res(p, c) = c^deg p for constant nonzero c; res of two nonzero
// constants is 1. Throws std::domain_error when both inputs are zero.
Rat resultant(const QPoly& p, const QPoly& q);

// Isolating intervals for the distinct real roots, by Sturm's theorem.
// Exact roots are returned as degenerate intervals [r, r].
struct RootInterval {
    Rat lo, hi;  // lo <= hi; lo == hi means an exact rational root
};
std::vector<RootInterval> real_roots(const QPoly& p);

// number of distinct real roots (Sturm count over the whole line)
int count_real_roots(const QPoly& p);

// Polynomial with exact complex-rational coefficients, ascending powers.
class QCPoly {
public:
    QCPoly() = default;
    explicit QCPoly(std::vector<QComplex> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QCPoly constant(QComplex v) { return QCPoly(std::vector<QComplex>{std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const QComplex& operator[](size_t k) const { return c_[k]; }
    const std::vector<QComplex>& coeffs() const { return c_; }
    const QComplex& lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == QComplex(1, 0); }

    QCPoly operator+(const QCPoly& o) const;
    QCPoly operator-(const QCPoly& o) const;
    QCPoly operator*(const QCPoly& o) const;
    QCPoly operator*(const QComplex& s) const;
    bool operator==(const QCPoly& o) const { return c_ == o.c_; }

    QCPoly derivative() const;
    QComplex eval(const QComplex& x) const;

    QPoly real_part() const;  // polynomial of the coefficients' real parts
    QPoly imag_part() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<QComplex> c_;
};

// Sylvester resultant over the complex rationals.
QComplex resultant(const QCPoly& p, const QCPoly& q);

enum class Axis { Imaginary, Real };

// Disc_z(f(z) - eps*t) as a monic polynomial in t, where eps = i for
// Axis::Imaginary and eps = 1 for Axis::Real. f must be monic of degree >= 2.
QCPoly disc_in_t(const QCPoly& f, Axis axis);

}  // namespace bb

#endif
