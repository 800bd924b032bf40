#ifndef BB_RATIONAL_HPP
#define BB_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace bb {

using Rat = mpq_class;
using Int = mpz_class;

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

inline double to_double(const Rat& q) { return q.get_d(); }

// canonicalised fraction (mpq_class(n, d) alone leaves gcds in place)
inline Rat make_rat(long num, long den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "p/q" or a plain decimal like "-1.25" into an exact rational.
std::optional<Rat> parse_rational(const std::string& s);

std::string rat_to_string(const Rat& q);

// Complex number with exact rational parts.
struct QComplex {
    Rat re, im;

    QComplex() : re(0), im(0) {}
    QComplex(Rat r) : re(std::move(r)), im(0) {}
    QComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    QComplex(long r, long i = 0) : re(r), im(i) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    QComplex conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    QComplex operator-() const { return {-re, -im}; }
    QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
    QComplex operator-(const QComplex& o) const { return {re - o.re, im - o.im}; }
    QComplex operator*(const QComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QComplex operator/(const QComplex& o) const {
        Rat n = o.norm();
        if (sgn(n) == 0) throw std::domain_error("QComplex: division by zero");
        QComplex p = *this * o.conj();
        return {p.re / n, p.im / n};
    }
    bool operator==(const QComplex& o) const { return re == o.re && im == o.im; }
    bool operator!=(const QComplex& o) const { return !(*this == o); }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string to_string() const;
};

inline QComplex qc_i() { return {Rat(0), Rat(1)}; }

}  // namespace bb

#endif
