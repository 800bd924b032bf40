#ifndef BB_ENUMERATION_HPP
#define BB_ENUMERATION_HPP

#include <functional>
#include <map>
#include <vector>

#include "basketball.hpp"
#include "rational.hpp"

namespace bb {

// exact-integer polynomial, index = degree; used for cell enumerators and
// vertex-count generating polynomials
using CellEnumerator = std::vector<Int>;

std::string enumerator_to_text(const CellEnumerator& e);

// All perfect matchings of the given labels (even count, <= 16), in a fixed
// deterministic order: the smallest unmatched label pairs with each possible
// partner in ascending order.
void all_matchings(int circle, const std::vector<int>& labels,
                   const std::function<void(const Matching&)>& fn);

Int double_factorial_count(int pairs);  // (2k-1)!!

struct ForestCensus {
    CellEnumerator by_vertex_count;  // index = number of internal vertices
    CellEnumerator by_degree;        // index = forest cell degree
    Int valid_total = 0;
    Int matching_total = 0;
};

// filters all matchings on a dense 2n circle through forest validity
ForestCensus forest_census(int n);

struct BasketballCensus {
    CellEnumerator by_degree;
    Int total = 0;
    Int anomalous = 0;  // admissible pairs whose degree formula went negative
};

BasketballCensus basketball_census(int n);

struct NonsingularCount {
    Int brute;    // census of admissible non-crossing pairs
    Int formula;  // C(4n, n) / (3n + 1)
};

NonsingularCount nonsingular_count(int n);

enum class OrbitGroup { FullDihedral, ColorPreserving };

struct OrbitCensus {
    CellEnumerator by_degree;        // orbits graded by their common degree
    std::map<int, Int> size_counts;  // orbit size -> number of orbits
    Int orbit_total = 0;
};

// forests live on a dense 2n circle and always use the order-4n dihedral
// group of that circle; the group flag matters for basketballs only
OrbitCensus forest_orbit_census(int n);
OrbitCensus basketball_orbit_census(int n, OrbitGroup group);

// closed-form enumerator x + (n^2-2n)x^2 + (2n^2-4n)x^3 + (n^2-2n+2)x^4
CellEnumerator qn_enumerator(int n);
Int qn_total(int n);        // sum of the enumerator coefficients
Int qn_open_cells(int n);   // n(n-2)+2

// all real-component forests of the z^n - n(a+bi)z + (n-1)(c+di) family,
// generated as embeddings of small trees plus the z^n pattern
std::vector<Matching> qn_embedding_census(int n);

}  // namespace bb

#endif
