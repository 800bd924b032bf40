#include "basketball.hpp"

#include <algorithm>
#include <stdexcept>

namespace bb {

namespace {

Matching union_matching(const Matching& R, const Matching& I) {
    std::vector<Branch> all = R.branches();
    for (const auto& b : I.branches()) all.push_back(b);
    return Matching(R.circle(), std::move(all));
}

}  // namespace

BasketballResult make_basketball(const Matching& R, const Matching& I) {
    BasketballResult res;
    if (R.circle() != I.circle() || R.circle() % 4 != 0) {
        res.reason = "matchings are not on a common 4n circle";
        return res;
    }
    int n = R.circle() / 4;
    if (R.size() != n || I.size() != n) {
        res.reason = "wrong branch counts";
        return res;
    }
    for (const auto& b : R.branches())
        if (b.a % 2 == 0 || b.b % 2 == 0) {
            res.reason = "real-component branch on an even label";
            return res;
        }
    for (const auto& b : I.branches())
        if (b.a % 2 == 1 || b.b % 2 == 1) {
            res.reason = "imaginary-component branch on an odd label";
            return res;
        }

    Matching u = union_matching(R, I);
    ForestResult fu = forest_valid(u);
    if (!fu.valid()) {
        res.reason = "union is not a circular forest: " + fu.report->reason;
        return res;
    }
    // union validity restricts to each colour, but check cheaply anyway
    if (!forest_valid(R).valid() || !forest_valid(I).valid()) {
        res.reason = "component matching is not a circular forest";
        return res;
    }

    Basketball ball;
    ball.n = n;
    ball.R = R;
    ball.I = I;
    ball.union_m = u;

    int mixed_mu_sum = 0;
    for (const auto& v : fu.forest->vertices) {
        UnionVertex uv;
        uv.mR = v.mR;
        uv.mI = v.mI;
        for (int id : v.branch_ids) uv.branches.push_back(u.branches()[id]);
        if (uv.kind() == VertexKind::Mixed) {
            if (uv.mR != uv.mI) {
                res.reason = "unbalanced mixed vertex (" + std::to_string(uv.mR) + "," +
                             std::to_string(uv.mI) + ")";
                return res;
            }
            mixed_mu_sum += uv.mR;
        }
        ball.vertices.push_back(std::move(uv));
    }
    // each simple crossing of opposite colours is a root; a balanced mixed
    // vertex of multiplicity mu is a root of multiplicity mu. The total must
    // account for all n roots.
    if (mixed_mu_sum != n) {
        res.reason = "root accounting failed: mixed multiplicities sum to " +
                     std::to_string(mixed_mu_sum) + ", expected " + std::to_string(n);
        return res;
    }

    ball.degree = cell_degree(ball);
    ball.anomalous_degree = ball.degree < 0;
    res.ball = std::move(ball);
    return res;
}

int vertex_codim(const UnionVertex& v) {
    switch (v.kind()) {
        case VertexKind::PureR:
            return 2 * v.mR - 3;
        case VertexKind::PureI:
            return 2 * v.mI - 3;
        case VertexKind::Mixed:
            return 2 * (v.mR - 1);
    }
    return 0;
}

int cell_degree(const Basketball& b) {
    int d = 2 * (b.n - 1);
    for (const auto& v : b.vertices) d -= vertex_codim(v);
    return d;
}

int forest_degree(const CircularForest& f, int n) {
    int d = 2 * (n - 1);
    for (const auto& v : f.vertices) d -= 2 * static_cast<int>(v.branch_ids.size()) - 3;
    return d;
}

Basketball act(const DihedralElement& g, const Basketball& b) {
    // parity of the image of an odd label decides whether colours swap
    int circle = 4 * b.n;
    bool swaps = g.apply(1, circle) % 2 == 0;
    Matching r2 = act(g, swaps ? b.I : b.R);
    Matching i2 = act(g, swaps ? b.R : b.I);
    auto res = make_basketball(r2, i2);
    if (!res.admissible())
        throw std::logic_error("act: image of an admissible basketball is inadmissible");
    return *res.ball;
}

bool is_noncrossing(const Matching& m) {
    const auto& br = m.branches();
    for (size_t i = 0; i < br.size(); ++i)
        for (size_t j = i + 1; j < br.size(); ++j)
            if (crosses(br[i], br[j])) return false;
    return true;
}

}  // namespace bb
