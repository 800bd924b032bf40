#include "enumeration.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bb {

std::string enumerator_to_text(const CellEnumerator& e) {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < e.size(); ++k) {
        if (k) os << ",";
        os << e[k].get_str();
    }
    os << "]";
    return os.str();
}

namespace {

void rec_matchings(int circle, std::vector<int>& labels, std::vector<Branch>& acc,
                   const std::function<void(const Matching&)>& fn) {
    if (labels.empty()) {
        fn(Matching(circle, acc));
        return;
    }
    int first = labels[0];
    for (size_t k = 1; k < labels.size(); ++k) {
        int partner = labels[k];
        std::vector<int> rest;
        rest.reserve(labels.size() - 2);
        for (size_t j = 1; j < labels.size(); ++j)
            if (j != k) rest.push_back(labels[j]);
        acc.emplace_back(first, partner);
        rec_matchings(circle, rest, acc, fn);
        acc.pop_back();
    }
}

void add_at(CellEnumerator& e, int index, long amount = 1) {
    if (index < 0) throw std::logic_error("enumerator index went negative");
    if (static_cast<size_t>(index) >= e.size()) e.resize(index + 1, Int(0));
    e[index] += amount;
}

std::vector<int> odd_labels(int n) {
    std::vector<int> v;
    for (int k = 1; k < 4 * n; k += 2) v.push_back(k);
    return v;
}

std::vector<int> even_labels(int n) {
    std::vector<int> v;
    for (int k = 0; k < 4 * n; k += 2) v.push_back(k);
    return v;
}

}  // namespace

void all_matchings(int circle, const std::vector<int>& labels,
                   const std::function<void(const Matching&)>& fn) {
    if (labels.size() % 2 != 0) throw std::domain_error("all_matchings: odd label count");
    if (labels.size() > 16) throw std::length_error("all_matchings: capped at 16 labels");
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Branch> acc;
    rec_matchings(circle, sorted, acc, fn);
}

Int double_factorial_count(int pairs) {
    Int r = 1;
    for (int k = 2 * pairs - 1; k > 1; k -= 2) r *= k;
    return r;
}

ForestCensus forest_census(int n) {
    if (n > 8) throw std::length_error("forest_census: capped at n = 8");
    ForestCensus census;
    std::vector<int> labels(2 * n);
    for (int k = 0; k < 2 * n; ++k) labels[k] = k;
    all_matchings(2 * n, labels, [&](const Matching& m) {
        census.matching_total += 1;
        ForestResult fr = forest_valid(m);
        if (!fr.valid()) return;
        census.valid_total += 1;
        add_at(census.by_vertex_count, fr.forest->vertex_count());
        add_at(census.by_degree, forest_degree(*fr.forest, n));
    });
    return census;
}

BasketballCensus basketball_census(int n) {
    if (n > 5) throw std::length_error("basketball_census: capped at n = 5");
    BasketballCensus census;
    std::vector<Matching> rs, is;
    all_matchings(4 * n, odd_labels(n), [&](const Matching& m) { rs.push_back(m); });
    all_matchings(4 * n, even_labels(n), [&](const Matching& m) { is.push_back(m); });
    for (const auto& r : rs) {
        if (!forest_valid(r).valid()) continue;
        for (const auto& i : is) {
            auto res = make_basketball(r, i);
            if (!res.admissible()) continue;
            census.total += 1;
            if (res.ball->anomalous_degree) {
                census.anomalous += 1;
                continue;
            }
            add_at(census.by_degree, res.ball->degree);
        }
    }
    return census;
}

NonsingularCount nonsingular_count(int n) {
    NonsingularCount out;
    Int binom = 1;
    for (int k = 0; k < n; ++k) binom = binom * (4 * n - k) / (k + 1);
    out.formula = binom / (3 * n + 1);

    if (n > 5) {
        out.brute = -1;
        return out;
    }
    out.brute = 0;
    std::vector<Matching> rs, is;
    all_matchings(4 * n, odd_labels(n), [&](const Matching& m) {
        if (is_noncrossing(m)) rs.push_back(m);
    });
    all_matchings(4 * n, even_labels(n), [&](const Matching& m) {
        if (is_noncrossing(m)) is.push_back(m);
    });
    for (const auto& r : rs)
        for (const auto& i : is)
            if (make_basketball(r, i).admissible()) out.brute += 1;
    return out;
}

namespace {

template <class Item>
OrbitCensus orbit_census_impl(const std::vector<Item>& items,
                              const std::vector<DihedralElement>& group,
                              const std::function<Item(const DihedralElement&, const Item&)>& apply,
                              const std::function<std::string(const Item&)>& key,
                              const std::function<int(const Item&)>& degree) {
    std::map<std::string, const Item*> by_key;
    for (const auto& it : items) by_key[key(it)] = &it;

    OrbitCensus census;
    std::set<std::string> seen;
    for (const auto& it : items) {
        std::string k0 = key(it);
        if (seen.count(k0)) continue;
        std::set<std::string> orbit;
        for (const auto& g : group) {
            Item img = apply(g, it);
            std::string k = key(img);
            if (!by_key.count(k))
                throw std::logic_error("orbit_census: image escaped the census");
            orbit.insert(std::move(k));
        }
        int deg = degree(it);
        for (const auto& k : orbit) {
            if (degree(*by_key.at(k)) != deg)
                throw std::logic_error("orbit_census: degree not constant on an orbit");
            seen.insert(k);
        }
        census.orbit_total += 1;
        census.size_counts[static_cast<int>(orbit.size())] += 1;
        add_at(census.by_degree, deg);
    }
    return census;
}

}  // namespace

OrbitCensus forest_orbit_census(int n) {
    std::vector<CircularForest> forests;
    std::vector<int> labels(2 * n);
    for (int k = 0; k < 2 * n; ++k) labels[k] = k;
    all_matchings(2 * n, labels, [&](const Matching& m) {
        ForestResult fr = forest_valid(m);
        if (fr.valid()) forests.push_back(*fr.forest);
    });

    std::vector<DihedralElement> group;
    for (int r = 0; r < 2 * n; ++r) {
        group.push_back({r, false});
        group.push_back({r, true});
    }
    return orbit_census_impl<CircularForest>(
        forests, group,
        [](const DihedralElement& g, const CircularForest& f) {
            return *forest_valid(act(g, f.matching)).forest;
        },
        [](const CircularForest& f) { return f.matching.to_text(); },
        [n](const CircularForest& f) { return forest_degree(f, n); });
}

OrbitCensus basketball_orbit_census(int n, OrbitGroup group_kind) {
    std::vector<Basketball> balls;
    std::vector<Matching> rs, is;
    all_matchings(4 * n, odd_labels(n), [&](const Matching& m) { rs.push_back(m); });
    all_matchings(4 * n, even_labels(n), [&](const Matching& m) { is.push_back(m); });
    for (const auto& r : rs) {
        if (!forest_valid(r).valid()) continue;
        for (const auto& i : is) {
            auto res = make_basketball(r, i);
            if (res.admissible()) balls.push_back(*res.ball);
        }
    }

    // the colour-preserving subgroup is the even rotations alone: reflections
    // fix the colours but reverse the cyclic structure, and the printed orbit
    // counts distinguish mirror pairs
    std::vector<DihedralElement> group;
    for (int r = 0; r < 4 * n; ++r) {
        if (group_kind == OrbitGroup::ColorPreserving) {
            if (r % 2 == 0) group.push_back({r, false});
        } else {
            group.push_back({r, false});
            group.push_back({r, true});
        }
    }
    return orbit_census_impl<Basketball>(
        balls, group,
        [](const DihedralElement& g, const Basketball& b) { return act(g, b); },
        [](const Basketball& b) { return b.to_text(); },
        [](const Basketball& b) { return b.degree; });
}

CellEnumerator qn_enumerator(int n) {
    if (n < 2) throw std::domain_error("qn_enumerator: n >= 2 required");
    long nn = n;
    return {Int(0), Int(1), Int(nn * nn - 2 * nn), Int(2 * nn * nn - 4 * nn),
            Int(nn * nn - 2 * nn + 2)};
}

Int qn_total(int n) {
    Int t = 0;
    for (const auto& c : qn_enumerator(n)) t += c;
    return t;
}

Int qn_open_cells(int n) { return Int(static_cast<long>(n) * (n - 2) + 2); }

namespace {

// dense-circle catalogue of the small trees whose embeddings sweep the
// Q_n forests: a single branch, a crossing pair, and the three two-vertex
// path trees on six leaves. Internal vertices have four neighbours.
struct TreeTemplate {
    int leaves;                                 // 2k
    std::vector<std::pair<int, int>> branches;  // on dense positions 0..2k-1
    // groups of leaf positions that must map to consecutive labels (k = 3)
    std::vector<std::vector<int>> consecutive_groups;
    bool allow_one_outlier = false;  // k = 2 rule
};

std::vector<TreeTemplate> tree_catalogue() {
    std::vector<TreeTemplate> cat;
    cat.push_back({2, {{0, 1}}, {}, false});
    cat.push_back({4, {{0, 2}, {1, 3}}, {}, true});
    cat.push_back({6, {{0, 2}, {1, 4}, {3, 5}}, {{0, 1, 2}, {3, 4, 5}}, false});
    cat.push_back({6, {{1, 3}, {2, 5}, {0, 4}}, {{1, 2, 3}, {4, 5, 0}}, false});
    cat.push_back({6, {{2, 4}, {3, 0}, {1, 5}}, {{2, 3, 4}, {5, 0, 1}}, false});
    return cat;
}

// fill a gap of consecutive dense labels (exclusive) with adjacent pairs
bool fill_gap(int from, int to, int circle, std::vector<Branch>& out) {
    int len = ((to - from - 1) % circle + circle) % circle;
    if (len % 2 != 0) return false;
    int cur = (from + 1) % circle;
    for (int k = 0; k < len / 2; ++k) {
        out.emplace_back(cur, (cur + 1) % circle);
        cur = (cur + 2) % circle;
    }
    return true;
}

bool is_cyclic_run(const std::vector<int>& sorted_labels, int circle) {
    int k = static_cast<int>(sorted_labels.size());
    for (int start = 0; start < k; ++start) {
        bool ok = true;
        for (int j = 1; j < k && ok; ++j)
            ok = sorted_labels[(start + j) % k] ==
                 (sorted_labels[start] + j) % circle;
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::vector<Matching> qn_embedding_census(int n) {
    if (n < 3 || n > 6) throw std::length_error("qn_embedding_census: 3 <= n <= 6");
    int circle = 2 * n;
    std::set<Matching> found;

    for (const auto& tree : tree_catalogue()) {
        int k = tree.leaves;
        if (k > circle) continue;
        std::vector<int> image(k);
        // enumerate increasing maps = sorted k-subsets of 0..2n-1
        std::vector<int> idx(k);
        for (int j = 0; j < k; ++j) idx[j] = j;
        while (true) {
            for (int j = 0; j < k; ++j) image[j] = idx[j];

            bool ok = true;
            if (tree.allow_one_outlier) {
                // at most one image leaf not consecutive to the others
                int best_run = 0;
                for (int start = 0; start < k; ++start) {
                    int run = 1;
                    while (run < k &&
                           image[(start + run) % k] ==
                               (image[start] + run) % circle)
                        ++run;
                    best_run = std::max(best_run, run);
                }
                ok = best_run >= k - 1;
            }
            for (const auto& grp : tree.consecutive_groups) {
                if (!ok) break;
                std::vector<int> lab;
                for (int pos : grp) lab.push_back(image[pos]);
                std::sort(lab.begin(), lab.end());
                ok = is_cyclic_run(lab, circle);
            }

            if (ok) {
                std::vector<Branch> br;
                for (auto [u, v] : tree.branches) br.emplace_back(image[u], image[v]);
                bool gaps_ok = true;
                for (int j = 0; j < k && gaps_ok; ++j)
                    gaps_ok = fill_gap(image[j], image[(j + 1) % k], circle, br);
                if (gaps_ok) {
                    Matching m(circle, br);
                    if (forest_valid(m).valid()) found.insert(std::move(m));
                }
            }

            // next combination
            int j = k - 1;
            while (j >= 0 && idx[j] == circle - k + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
        }
    }

    // the z^n pattern (all diameters) is the one forest not of embedding type
    std::vector<Branch> diam;
    for (int j = 0; j < n; ++j) diam.emplace_back(j, j + n);
    found.insert(Matching(circle, diam));

    return {found.begin(), found.end()};
}

}  // namespace bb
