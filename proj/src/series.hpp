#ifndef BB_SERIES_HPP
#define BB_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace bb {

// integer polynomial in t, ascending
using ZPoly = std::vector<Int>;

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
bool zp_is_zero(const ZPoly& p);
std::string zp_row_text(const ZPoly& p);  // "[0,1,15,55,55]"

// Power series in x whose coefficients are integer polynomials in t,
// truncated at x-order <= order.
struct BivariateSeries {
    int order = 0;             // highest retained x power
    std::vector<ZPoly> coef;   // index = x power, size order+1

    explicit BivariateSeries(int ord = 0) : order(ord), coef(ord + 1) {}
    BivariateSeries mul(const BivariateSeries& o) const;
    BivariateSeries add(const BivariateSeries& o) const;
    BivariateSeries sub(const BivariateSeries& o) const;
    // multiplicative inverse; constant term must be +-1
    BivariateSeries inverse() const;
    bool is_zero() const;
};

// Rooted circular tree series A(x,t): the fixed point of
// A = x + t*A^3/(1 - A^2), truncated at the given x-order (<= 200).
BivariateSeries gf_tree(int order);

// residual A - x - t*A^3/(1-A^2) after truncation (identically zero)
BivariateSeries gf_tree_equation_residual(const BivariateSeries& a);

// monomial in the block-size symbols p2, p4, ...: sorted (size, exponent)
using PartMonomial = std::vector<std::pair<int, int>>;

struct PartitionPoly {
    std::map<PartMonomial, Int> terms;

    void add(const PartMonomial& m, const Int& c);
    PartitionPoly mul(const PartitionPoly& o) const;
    bool operator==(const PartitionPoly& o) const { return terms == o.terms; }
    std::string to_string() const;  // "2*p2^2 + p4"
};

// Weighted even-block non-crossing partition series Theta(x): coefficient of
// x^{2n} enumerates the partitions of 2n circle points into even blocks with
// weight prod p_{#B}. Order capped at 40.
struct PartitionWeightSeries {
    int order = 0;
    std::vector<PartitionPoly> coef;  // index = x power
};

PartitionWeightSeries gf_even_noncrossing(int order);

// Circular forest series F(x,t): substitute p_{2k} <- a_k(t) into Theta,
// where a_k(t) is the x^{2k-1} coefficient of the tree series.
BivariateSeries gf_forest(int order);

std::vector<Int> catalan_numbers(int count);

}  // namespace bb

#endif
