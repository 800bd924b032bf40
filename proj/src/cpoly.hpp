#ifndef BB_CPOLY_HPP
#define BB_CPOLY_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpoly.hpp"

namespace bb {

using Cplx = std::complex<double>;

struct SolverError : std::runtime_error {
    std::vector<Cplx> best;  // best iterates at failure
    explicit SolverError(const std::string& msg, std::vector<Cplx> b = {})
        : std::runtime_error(msg), best(std::move(b)) {}
};

// Complex polynomial with floating coefficients, ascending powers.
class CPoly {
public:
    CPoly() = default;
    explicit CPoly(std::vector<Cplx> coeffs) : c_(std::move(coeffs)) { trim(); }
    static CPoly from_exact(const QCPoly& f);

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const Cplx& operator[](size_t k) const { return c_[k]; }
    const std::vector<Cplx>& coeffs() const { return c_; }
    const Cplx& lead() const { return c_.back(); }
    bool is_monic(double tol = 1e-12) const {
        return !c_.empty() && std::abs(c_.back() - 1.0) <= tol;
    }

    Cplx eval(Cplx z) const;
    CPoly derivative() const;
    CPoly operator*(const CPoly& o) const;

    // scale of coefficient magnitudes, never below 1
    double coeff_scale() const;
    // upper bound for |f(z)| contributions at radius r (sum |c_k| r^k)
    double magnitude_at_radius(double r) const;

    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && std::abs(c_.back()) == 0.0) c_.pop_back();
    }
    std::vector<Cplx> c_;
};

struct RootCluster {
    Cplx value;
    int multiplicity;
};

// All roots with multiplicity, by Aberth-Ehrlich simultaneous iteration.
// Multiple roots come back as clusters with estimated multiplicity.
std::vector<RootCluster> all_roots(const CPoly& f, double tol = 1e-10);

// flat list, each root repeated per multiplicity
std::vector<Cplx> all_roots_flat(const CPoly& f, double tol = 1e-10);

// Extended-precision variant (long double iteration, rounded to double).
std::vector<RootCluster> all_roots_extended(const CPoly& f, double tol = 1e-12);

struct CriticalData {
    std::vector<Cplx> critical_points;  // roots of f', with multiplicity
    std::vector<Cplx> critical_values;  // f at each critical point
    std::vector<double> distinct_re;    // clustered, strictly increasing
    std::vector<double> distinct_im;
};

CriticalData critical_data(const CPoly& f, double cluster_tol = 1e-9, bool extended = false);

}  // namespace bb

#endif
