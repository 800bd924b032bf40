#ifndef BB_MATCHING_HPP
#define BB_MATCHING_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bb {

// Unordered pair of distinct leaf labels on a circle.
struct Branch {
    int a, b;  // a < b
    Branch(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}
    bool operator==(const Branch& o) const { return a == o.a && b == o.b; }
    bool operator<(const Branch& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// true iff the endpoints interleave cyclically (the chords meet)
bool crosses(const Branch& b1, const Branch& b2);

// Condition for m >= 2 pairwise-disjoint branches to pass through one common
// vertex: in cyclic endpoint order, position k is paired with position k+m.
bool common_vertex_pattern(const std::vector<Branch>& branches);

// Perfect matching of a set of labels on a circle of `circle` points.
// Single-colour contexts use only one parity class of a 4n circle.
class Matching {
public:
    Matching() = default;
    Matching(int circle, std::vector<Branch> branches);

    int circle() const { return circle_; }
    const std::vector<Branch>& branches() const { return branches_; }
    int size() const { return static_cast<int>(branches_.size()); }
    int mate(int label) const;
    bool contains_label(int label) const;

    bool operator==(const Matching& o) const {
        return circle_ == o.circle_ && branches_ == o.branches_;
    }
    bool operator<(const Matching& o) const { return branches_ < o.branches_; }

    // canonical text form "[[1,3],[5,7],[9,11]]"
    std::string to_text() const;
    static std::optional<Matching> from_text(const std::string& s, int circle);

private:
    int circle_ = 0;
    std::vector<Branch> branches_;  // sorted canonical order
};

struct Vertex {
    std::vector<int> branch_ids;  // indices into the matching's branch list, sorted
    int mR = 0, mI = 0;           // endpoint-parity census (basketball contexts)
    bool operator==(const Vertex& o) const { return branch_ids == o.branch_ids; }
    bool operator<(const Vertex& o) const { return branch_ids < o.branch_ids; }
};

struct InvalidityReport {
    std::string reason;
    std::vector<Branch> witness;
};

// Valid circular forest: matching + derived internal vertex structure.
struct CircularForest {
    Matching matching;
    std::vector<Vertex> vertices;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    // leaf-set blocks of the connected components
    std::vector<std::vector<int>> components() const;
};

struct ForestResult {
    std::optional<CircularForest> forest;  // empty on invalid
    std::optional<InvalidityReport> report;
    bool valid() const { return forest.has_value(); }
};

// Maximal common-vertex sets, one per crossing pair; reports invalidity when
// a crossing pair extends to two distinct maximal sets or a candidate set
// fails the joint cyclic pattern.
ForestResult vertices_of(const Matching& m);

// vertices_of plus acyclicity of the branch/vertex incidence graph
ForestResult forest_valid(const Matching& m);

// Independent validity oracle: every subset of branches that can be arranged
// into a crossing cycle must satisfy the common-vertex pattern. Exhaustive,
// capped at 10 branches.
bool crossing_cycle_oracle(const Matching& m);

// leaf pairs {j,k} whose branches cross
std::set<std::pair<int, int>> crossing_set(const CircularForest& f);

// true iff crossing_set(f2) is contained in crossing_set(f1)
bool poset_leq(const CircularForest& f1, const CircularForest& f2);

std::vector<const CircularForest*> down_set(const CircularForest& f,
                                            const std::vector<CircularForest>& universe);

// Element of the dihedral group acting on labels 0..circle-1:
// j -> j + rot, or j -> rot - j when flipped.
struct DihedralElement {
    int rot = 0;
    bool flip = false;
    int apply(int label, int circle) const {
        int r = flip ? rot - label : rot + label;
        return ((r % circle) + circle) % circle;
    }
    DihedralElement compose(const DihedralElement& inner, int circle) const;
};

Matching act(const DihedralElement& g, const Matching& m);

// Branch orientation a -> b for b = 0,1 (mod 4); reports ambiguity when both
// or neither endpoint qualifies (only happens in singular basketballs).
struct OrientedBranch {
    int from, to;
};
std::optional<OrientedBranch> orient_branch(const Branch& b);

}  // namespace bb

#endif
