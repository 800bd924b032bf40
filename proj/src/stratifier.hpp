#ifndef BB_STRATIFIER_HPP
#define BB_STRATIFIER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cpoly.hpp"
#include "enumeration.hpp"
#include "qpoly.hpp"

namespace bb {

enum class Component { R, I };

struct SingularityVerdict {
    Component component;
    Rat resultant_value;
    bool has_real_witness = false;
    std::vector<RootInterval> witness_intervals;  // real t with Disc(f - eps t) = 0
};

// Eliminates t from the real/imaginary parts of Disc_z(f - eps t) and
// certifies a real common root when the resultant vanishes.
SingularityVerdict singularity_verdict(const QCPoly& f, Component comp);

// (2c^2 - a(a^2-3b^2))^2 - (a^2+b^2)^3
Rat delta3(const Rat& a, const Rat& b, const Rat& c);
// (2d^2 + a(a^2-3b^2))^2 - (a^2+b^2)^3
Rat delta3_prime(const Rat& a, const Rat& b, const Rat& d);

// numerically compares the closed forms with their cylindrical
// factorisations on random samples
bool cylindrical_identity_check(int samples, double tol = 1e-10, unsigned seed = 12345);

// Cells of the degree-3 basketball decomposition of z^3 - 3(a+bi)z + 2(c+di).
struct CellDescriptor3 {
    std::string case_label;  // a.1, a.2, b.1..b.3, c.1..c.4, A.1, A.2, B
    int degree = 0;
    bool r_singular = false;  // some critical value on the imaginary axis
    bool i_singular = false;
    bool has_double_root = false;
    DihedralElement orbit_element;  // maps the case representative's cell here
    Matching rep_R{12, {}}, rep_I{12, {}};  // canonical representative pair
};

CellDescriptor3 classify3(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

// representative coefficients (a,b,c,d) for each case label
std::array<Rat, 4> classify3_representative(const std::string& case_label);

struct GridCell {
    int degree;                 // 0, 1 or 2
    std::array<double, 2> sw;   // south-west corner (may be -inf)
    std::array<double, 2> ne;   // north-east corner (may be +inf)
    Cplx representative_shift;  // alpha with f - alpha in the open cell
};

struct GridDecomposition {
    int ell = 0, m = 0;              // distinct re / im counts
    std::vector<double> a_cuts, b_cuts;
    std::vector<GridCell> cells;
    CellEnumerator enumerator;       // counted from the built cells
    CellEnumerator formula() const;  // [ml, 2ml+m+l, ml+m+l+1]
};

GridDecomposition critical_grid(const CPoly& f, double cluster_tol = 1e-9);

// component is a single tree iff every critical value lies on the other axis
bool is_tree_component(const CPoly& f, Component comp, double tol = 1e-9);

struct ShabatResult {
    bool is_shabat = false;
    std::vector<Cplx> values;  // the distinct critical values
};

ShabatResult shabat_check(const CPoly& f, double cluster_tol = 1e-9);

// Point of the Q_n singularity locus: z^n - n r e^{i theta} z + constant,
// with the constant chosen so a critical value lands on the chosen axis.
CPoly qn_stratum(int n, double r, double theta, double free_coord, Component which);

// verifies the closed-form critical values of z^n - n r e^{i theta} z
// against the numeric kernel, as sets, at relative tolerance
bool qn_critical_values_check(int n, int samples, double tol = 1e-9, unsigned seed = 777);

// Cross-validation of the exact classification against traced basketballs
// and elimination verdicts, on random rational points plus stratified
// samples of each singular family.
struct ConsistencyReport {
    int samples = 0;
    int traced = 0;
    int tracer_errors = 0;  // reported, not silently resolved
    std::vector<std::string> mismatches;
    bool all_agree() const { return mismatches.empty(); }
};

ConsistencyReport classify3_consistency(int random_samples, int per_family = 25,
                                        unsigned seed = 99);

}  // namespace bb

#endif
