#include "matching.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bb {

bool crosses(const Branch& b1, const Branch& b2) {
    if (b1.a == b2.a || b1.a == b2.b || b1.b == b2.a || b1.b == b2.b)
        throw std::domain_error("crosses: branches share an endpoint");
    bool ain = b1.a < b2.a && b2.a < b1.b;
    bool bin = b1.a < b2.b && b2.b < b1.b;
    return ain != bin;
}

bool common_vertex_pattern(const std::vector<Branch>& branches) {
    int m = static_cast<int>(branches.size());
    if (m < 2) return false;
    std::vector<int> endpoints;
    endpoints.reserve(2 * m);
    for (const auto& br : branches) {
        endpoints.push_back(br.a);
        endpoints.push_back(br.b);
    }
    std::sort(endpoints.begin(), endpoints.end());
    if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end()) return false;
    std::map<int, int> pos;
    for (int k = 0; k < 2 * m; ++k) pos[endpoints[k]] = k;
    // position k must pair with position k+m; invariant under cyclic rotation
    for (const auto& br : branches)
        if ((pos[br.a] + m) % (2 * m) != pos[br.b]) return false;
    return true;
}

Matching::Matching(int circle, std::vector<Branch> branches)
    : circle_(circle), branches_(std::move(branches)) {
    std::sort(branches_.begin(), branches_.end());
    std::vector<int> seen;
    for (const auto& b : branches_) {
        if (b.a == b.b) throw std::domain_error("Matching: degenerate branch");
        if (b.a < 0 || b.b >= circle_) throw std::domain_error("Matching: label out of range");
        seen.push_back(b.a);
        seen.push_back(b.b);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::domain_error("Matching: repeated label");
}

int Matching::mate(int label) const {
    for (const auto& b : branches_) {
        if (b.a == label) return b.b;
        if (b.b == label) return b.a;
    }
    throw std::domain_error("Matching: label not present");
}

bool Matching::contains_label(int label) const {
    for (const auto& b : branches_)
        if (b.a == label || b.b == label) return true;
    return false;
}

std::string Matching::to_text() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < branches_.size(); ++k) {
        if (k) os << ",";
        os << "[" << branches_[k].a << "," << branches_[k].b << "]";
    }
    os << "]";
    return os.str();
}

std::optional<Matching> Matching::from_text(const std::string& s, int circle) {
    std::vector<Branch> br;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c) return false;
        ++i;
        return true;
    };
    auto read_int = [&]() -> std::optional<int> {
        skip_ws();
        size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        size_t d = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == d) return std::nullopt;
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        return v;
    };
    if (!expect('[')) return std::nullopt;
    skip_ws();
    if (i < s.size() && s[i] == ']') {
        ++i;
    } else {
        while (true) {
            if (!expect('[')) return std::nullopt;
            auto a = read_int();
            if (!a || !expect(',')) return std::nullopt;
            auto b = read_int();
            if (!b || !expect(']')) return std::nullopt;
            br.emplace_back(*a, *b);
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (!expect(']')) return std::nullopt;
            break;
        }
    }
    skip_ws();
    if (i != s.size()) return std::nullopt;
    try {
        return Matching(circle, std::move(br));
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

namespace {

void fill_parity(Vertex& v, const std::vector<Branch>& branches) {
    v.mR = v.mI = 0;
    for (int id : v.branch_ids) (branches[id].a % 2 ? v.mR : v.mI)++;
}

}  // namespace

std::vector<std::vector<int>> CircularForest::components() const {
    const auto& br = matching.branches();
    std::vector<int> parent(br.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& v : vertices)
        for (size_t k = 1; k < v.branch_ids.size(); ++k)
            parent[find(v.branch_ids[k])] = find(v.branch_ids[0]);
    std::map<int, std::vector<int>> blocks;
    for (size_t k = 0; k < br.size(); ++k) {
        auto& blk = blocks[find(static_cast<int>(k))];
        blk.push_back(br[k].a);
        blk.push_back(br[k].b);
    }
    std::vector<std::vector<int>> out;
    for (auto& [root, blk] : blocks) {
        std::sort(blk.begin(), blk.end());
        out.push_back(std::move(blk));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ForestResult vertices_of(const Matching& m) {
    const auto& br = m.branches();
    int nb = static_cast<int>(br.size());

    std::vector<std::vector<char>> cross(nb, std::vector<char>(nb, 0));
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j)
            cross[i][j] = cross[j][i] = crosses(br[i], br[j]) ? 1 : 0;

    // candidate vertex for a crossing pair: the pair plus everything crossing both
    std::map<std::pair<int, int>, std::vector<int>> candidate;
    std::set<std::vector<int>> vertex_sets;
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
            if (!cross[i][j]) continue;
            std::vector<int> ids{i, j};
            for (int k = 0; k < nb; ++k)
                if (k != i && k != j && cross[k][i] && cross[k][j]) ids.push_back(k);
            std::sort(ids.begin(), ids.end());
            std::vector<Branch> sub;
            for (int id : ids) sub.push_back(br[id]);
            if (!common_vertex_pattern(sub)) {
                ForestResult res;
                res.report = InvalidityReport{"candidate vertex fails the common-vertex pattern",
                                              std::move(sub)};
                return res;
            }
            candidate[{i, j}] = ids;
            vertex_sets.insert(std::move(ids));
        }

    // every crossing pair must lie in exactly one maximal set
    for (const auto& [pair, ids] : candidate) {
        for (const auto& vs : vertex_sets) {
            if (vs == ids) continue;
            if (std::binary_search(vs.begin(), vs.end(), pair.first) &&
                std::binary_search(vs.begin(), vs.end(), pair.second)) {
                ForestResult res;
                std::vector<Branch> witness{br[pair.first], br[pair.second]};
                res.report =
                    InvalidityReport{"crossing pair lies in two distinct vertices", witness};
                return res;
            }
        }
    }

    ForestResult res;
    CircularForest f;
    f.matching = m;
    for (const auto& ids : vertex_sets) {
        Vertex v;
        v.branch_ids = ids;
        fill_parity(v, br);
        f.vertices.push_back(std::move(v));
    }
    std::sort(f.vertices.begin(), f.vertices.end());
    res.forest = std::move(f);
    return res;
}

ForestResult forest_valid(const Matching& m) {
    ForestResult res = vertices_of(m);
    if (!res.valid()) return res;

    // incidence graph on branches + vertices must be acyclic
    const auto& vertices = res.forest->vertices;
    int nb = m.size();
    int nv = static_cast<int>(vertices.size());
    std::vector<int> parent(nb + nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int v = 0; v < nv; ++v)
        for (int id : vertices[v].branch_ids) {
            int a = find(id), b = find(nb + v);
            if (a == b) {
                ForestResult bad;
                std::vector<Branch> witness;
                for (int w : vertices[v].branch_ids) witness.push_back(m.branches()[w]);
                bad.report =
                    InvalidityReport{"branch/vertex incidence graph has a cycle", witness};
                return bad;
            }
            parent[a] = b;
        }
    return res;
}

namespace {

// does the crossing graph restricted to `subset` admit a Hamiltonian cycle?
bool has_ham_cycle(const std::vector<int>& subset, const std::vector<std::vector<char>>& cross) {
    int k = static_cast<int>(subset.size());
    if (k == 2) return cross[subset[0]][subset[1]];
    // bitmask DP from fixed start 0
    std::vector<std::vector<char>> reach(1 << k, std::vector<char>(k, 0));
    reach[1][0] = 1;
    for (int mask = 1; mask < (1 << k); ++mask)
        for (int last = 0; last < k; ++last) {
            if (!reach[mask][last]) continue;
            for (int nxt = 1; nxt < k; ++nxt) {
                if (mask & (1 << nxt)) continue;
                if (!cross[subset[last]][subset[nxt]]) continue;
                reach[mask | (1 << nxt)][nxt] = 1;
            }
        }
    int full = (1 << k) - 1;
    for (int last = 1; last < k; ++last)
        if (reach[full][last] && cross[subset[last]][subset[0]]) return true;
    return false;
}

}  // namespace

bool crossing_cycle_oracle(const Matching& m) {
    const auto& br = m.branches();
    int nb = static_cast<int>(br.size());
    if (nb > 10) throw std::length_error("crossing_cycle_oracle: capped at 10 branches");

    std::vector<std::vector<char>> cross(nb, std::vector<char>(nb, 0));
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j)
            cross[i][j] = cross[j][i] = crosses(br[i], br[j]) ? 1 : 0;

    for (int mask = 1; mask < (1 << nb); ++mask) {
        std::vector<int> subset;
        for (int k = 0; k < nb; ++k)
            if (mask & (1 << k)) subset.push_back(k);
        if (subset.size() < 2) continue;
        if (!has_ham_cycle(subset, cross)) continue;
        std::vector<Branch> sub;
        for (int id : subset) sub.push_back(br[id]);
        if (!common_vertex_pattern(sub)) return false;
    }
    return true;
}

std::set<std::pair<int, int>> crossing_set(const CircularForest& f) {
    std::set<std::pair<int, int>> out;
    const auto& br = f.matching.branches();
    for (size_t i = 0; i < br.size(); ++i)
        for (size_t j = i + 1; j < br.size(); ++j) {
            if (!crosses(br[i], br[j])) continue;
            for (int x : {br[i].a, br[i].b})
                for (int y : {br[j].a, br[j].b})
                    out.insert({std::min(x, y), std::max(x, y)});
        }
    // a branch passing through a vertex crosses itself there; this makes the
    // z^n pattern the unique minimal element of the closure order
    for (const auto& v : f.vertices)
        for (int id : v.branch_ids) out.insert({br[id].a, br[id].b});
    return out;
}

bool poset_leq(const CircularForest& f1, const CircularForest& f2) {
    if (f1.matching.circle() != f2.matching.circle())
        throw std::domain_error("poset_leq: mismatched leaf circles");
    if (f1.matching == f2.matching) return true;
    auto c1 = crossing_set(f1), c2 = crossing_set(f2);
    // strict containment: cells with equal crossing sets (e.g. two distinct
    // non-crossing matchings) are incomparable, identity comes from the
    // matching itself
    return c1 != c2 && std::includes(c1.begin(), c1.end(), c2.begin(), c2.end());
}

std::vector<const CircularForest*> down_set(const CircularForest& f,
                                            const std::vector<CircularForest>& universe) {
    std::vector<const CircularForest*> out;
    for (const auto& g : universe)
        if (poset_leq(g, f)) out.push_back(&g);
    return out;
}

DihedralElement DihedralElement::compose(const DihedralElement& inner, int circle) const {
    // (this ∘ inner)(j)
    DihedralElement r;
    if (!flip && !inner.flip) {
        r = {(rot + inner.rot) % circle, false};
    } else if (!flip && inner.flip) {
        r = {(rot + inner.rot) % circle, true};
    } else if (flip && !inner.flip) {
        r = {((rot - inner.rot) % circle + circle) % circle, true};
    } else {
        r = {((rot - inner.rot) % circle + circle) % circle, false};
    }
    return r;
}

Matching act(const DihedralElement& g, const Matching& m) {
    std::vector<Branch> br;
    br.reserve(m.branches().size());
    for (const auto& b : m.branches())
        br.emplace_back(g.apply(b.a, m.circle()), g.apply(b.b, m.circle()));
    return Matching(m.circle(), std::move(br));
}

std::optional<OrientedBranch> orient_branch(const Branch& b) {
    bool a_ok = b.a % 4 == 0 || b.a % 4 == 1;
    bool b_ok = b.b % 4 == 0 || b.b % 4 == 1;
    if (a_ok == b_ok) return std::nullopt;
    if (b_ok) return OrientedBranch{b.a, b.b};
    return OrientedBranch{b.b, b.a};
}

}  // namespace bb
