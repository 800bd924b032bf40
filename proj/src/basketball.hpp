#ifndef BB_BASKETBALL_HPP
#define BB_BASKETBALL_HPP

#include <optional>
#include <string>
#include <vector>

#include "matching.hpp"

namespace bb {

enum class VertexKind { PureR, PureI, Mixed };

struct UnionVertex {
    std::vector<Branch> branches;
    int mR = 0, mI = 0;
    VertexKind kind() const {
        if (mI == 0) return VertexKind::PureR;
        if (mR == 0) return VertexKind::PureI;
        return VertexKind::Mixed;
    }
};

// Admissible orthogonal pair of circular forests on a 4n leaf circle:
// odd labels carry the real-component branches, even labels the imaginary.
struct Basketball {
    int n = 0;
    Matching R, I;        // on odd / even labels of the 4n circle
    Matching union_m;     // all 4n labels
    std::vector<UnionVertex> vertices;
    int degree = 0;
    bool anomalous_degree = false;  // degree formula went negative

    std::string to_text() const { return R.to_text() + " | " + I.to_text(); }
};

struct BasketballResult {
    std::optional<Basketball> ball;
    std::string reason;  // set when inadmissible
    bool admissible() const { return ball.has_value(); }
};

// Checks, in order: both matchings individually valid forests, union a valid
// forest, every mixed vertex balanced (mR == mI), and the root accounting
// sum over mixed vertices of mR equal to n.
BasketballResult make_basketball(const Matching& R, const Matching& I);

// codimension contribution of one vertex: 2m-3 for pure vertices,
// 2(mu-1) for balanced mixed vertices (zero when mu = 1)
int vertex_codim(const UnionVertex& v);

// degree of a basketball cell: 2(n-1) minus the vertex codimensions
int cell_degree(const Basketball& b);

// forest version: 2(n-1) - sum of (2m-3) over the forest's own vertices
int forest_degree(const CircularForest& f, int n);

// dihedral action on a basketball; odd elements swap the two colours
Basketball act(const DihedralElement& g, const Basketball& b);

// non-crossing test for a single-colour matching
bool is_noncrossing(const Matching& m);

}  // namespace bb

#endif
