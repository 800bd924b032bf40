#ifndef BB_TRACER_HPP
#define BB_TRACER_HPP

#include <optional>
#include <string>
#include <vector>

#include "basketball.hpp"
#include "cpoly.hpp"

namespace bb {

struct TraceConfig {
    double radius_safety = 2.0;
    double step_max = 0.0;  // 0: choose 0.02 * boundary radius
    double corrector_tol = 1e-10;
    double vertex_snap_radius_factor = 1e-3;
    double on_curve_tol = 1e-8;
    int max_steps = 200000;
    bool extended = false;  // long-double root solving
};

struct TraceError : std::runtime_error {
    explicit TraceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BranchPath {
    int start_leaf = -1, end_leaf = -1;
    std::vector<Cplx> polyline;
    std::vector<int> visited_sites;  // indices into TraceResult::vertices, in path order
};

struct VertexSite {
    Cplx position;
    int local_m_R = 0, local_m_I = 0;
    bool is_root = false;
};

struct TraceResult {
    int n = 0;
    double boundary_radius = 0.0;
    Matching R{4, {}}, I{4, {}};
    std::vector<BranchPath> branches;  // one per branch, keyed by smaller leaf
    std::vector<VertexSite> vertices;
    Basketball basketball;
};

// radius beyond which the curve hugs the asymptotic rays: dominance of the
// leading term plus a safety factor over every root of f and f'
double boundary_radius(const CPoly& f, const TraceConfig& cfg = {});

// trace the curve Re f = 0 (odd start leaf) or Im f = 0 (even) inward from
// the given leaf until the boundary circle is reached again
BranchPath trace_branch(const CPoly& f, int start_leaf, const TraceConfig& cfg = {});

// trace all 4n leaves, assemble matchings, vertex sites and the basketball
TraceResult basketball_of(const CPoly& f, const TraceConfig& cfg = {});

// I(f^2) = R(f) union I(f), compared through the label doubling k -> 2k
bool union_self_check(const CPoly& f, const TraceConfig& cfg = {});

struct RealRootedReport {
    bool ok = false;
    std::string detail;
};

// For a real polynomial with distinct real roots summing to zero: the
// imaginary component pairs 0 with 2n and k with -k, the real component is
// non-crossing, and the real-axis spine alternates roots of f and of f'.
RealRootedReport real_rooted_check(const CPoly& f, const TraceConfig& cfg = {});

}  // namespace bb

#endif
