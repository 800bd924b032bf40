#include "series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bb {

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool zp_is_zero(const ZPoly& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

std::string zp_row_text(const ZPoly& p) {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < p.size(); ++k) {
        if (k) os << ",";
        os << p[k].get_str();
    }
    if (p.empty()) os << "0";
    os << "]";
    return os.str();
}

BivariateSeries BivariateSeries::mul(const BivariateSeries& o) const {
    BivariateSeries r(order);
    for (int i = 0; i <= order; ++i) {
        if (coef[i].empty()) continue;
        for (int j = 0; i + j <= order && j <= o.order; ++j) {
            if (o.coef[j].empty()) continue;
            r.coef[i + j] = zp_add(r.coef[i + j], zp_mul(coef[i], o.coef[j]));
        }
    }
    return r;
}

BivariateSeries BivariateSeries::add(const BivariateSeries& o) const {
    BivariateSeries r(order);
    for (int k = 0; k <= order; ++k)
        r.coef[k] = zp_add(coef[k], k <= o.order ? o.coef[k] : ZPoly{});
    return r;
}

BivariateSeries BivariateSeries::sub(const BivariateSeries& o) const {
    BivariateSeries neg(o.order);
    for (int k = 0; k <= o.order; ++k) {
        neg.coef[k] = o.coef[k];
        for (auto& c : neg.coef[k]) c = -c;
    }
    return add(neg);
}

BivariateSeries BivariateSeries::inverse() const {
    if (coef[0].size() != 1 || (coef[0][0] != 1 && coef[0][0] != -1))
        throw std::domain_error("series inverse: constant term must be a unit");
    Int u = coef[0][0];
    BivariateSeries r(order);
    r.coef[0] = {u};
    for (int k = 1; k <= order; ++k) {
        ZPoly acc;
        for (int j = 1; j <= k; ++j) {
            if (j > order || coef[j].empty() || r.coef[k - j].empty()) continue;
            acc = zp_add(acc, zp_mul(coef[j], r.coef[k - j]));
        }
        for (auto& c : acc) c = -c * u;
        r.coef[k] = std::move(acc);
    }
    return r;
}

bool BivariateSeries::is_zero() const {
    for (const auto& p : coef)
        if (!zp_is_zero(p)) return false;
    return true;
}

BivariateSeries gf_tree(int order) {
    if (order > 200) throw std::length_error("gf_tree: order capped at 200");
    BivariateSeries x(order);
    if (order >= 1) x.coef[1] = ZPoly{Int(1)};

    BivariateSeries a = x;
    // each pass extends the correct prefix by two x-orders
    int passes = order / 2 + 2;
    for (int it = 0; it < passes; ++it) {
        BivariateSeries a2 = a.mul(a);
        BivariateSeries a3 = a2.mul(a);
        BivariateSeries one_minus(order);
        one_minus.coef[0] = {Int(1)};
        one_minus = one_minus.sub(a2);
        BivariateSeries frac = a3.mul(one_minus.inverse());
        // multiply by t
        for (auto& p : frac.coef)
            if (!p.empty()) p.insert(p.begin(), Int(0));
        BivariateSeries next = x.add(frac);
        if (next.sub(a).is_zero()) return next;
        a = std::move(next);
    }
    return a;
}

BivariateSeries gf_tree_equation_residual(const BivariateSeries& a) {
    int order = a.order;
    BivariateSeries x(order);
    if (order >= 1) x.coef[1] = ZPoly{Int(1)};
    BivariateSeries a2 = a.mul(a);
    BivariateSeries a3 = a2.mul(a);
    BivariateSeries one_minus(order);
    one_minus.coef[0] = {Int(1)};
    one_minus = one_minus.sub(a2);
    BivariateSeries frac = a3.mul(one_minus.inverse());
    for (auto& p : frac.coef)
        if (!p.empty()) p.insert(p.begin(), Int(0));
    return a.sub(x).sub(frac);
}

void PartitionPoly::add(const PartMonomial& m, const Int& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (c != 0) terms[m] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

PartitionPoly PartitionPoly::mul(const PartitionPoly& o) const {
    PartitionPoly r;
    for (const auto& [ma, ca] : terms)
        for (const auto& [mb, cb] : o.terms) {
            std::map<int, int> exp;
            for (auto [s, e] : ma) exp[s] += e;
            for (auto [s, e] : mb) exp[s] += e;
            PartMonomial m(exp.begin(), exp.end());
            r.add(m, ca * cb);
        }
    return r;
}

std::string PartitionPoly::to_string() const {
    if (terms.empty()) return "0";
    // order by descending p2 exponent, then ascending remaining symbols
    std::vector<std::pair<PartMonomial, Int>> items(terms.begin(), terms.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        auto p2 = [](const PartMonomial& m) {
            for (auto [s, e] : m)
                if (s == 2) return e;
            return 0;
        };
        if (p2(a.first) != p2(b.first)) return p2(a.first) > p2(b.first);
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : items) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool unit = a == 1 && !m.empty();
        if (!unit) os << a.get_str();
        bool star = !unit;
        for (auto [s, e] : m) {
            if (star) os << "*";
            star = true;
            os << "p" << s;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

PartitionWeightSeries gf_even_noncrossing(int order) {
    if (order > 40) throw std::length_error("gf_even_noncrossing: order capped at 40");
    // g_M = weighted count of even-block non-crossing partitions of M linear
    // points; the block of the first point, of size 2k, splits the rest into
    // 2k independent intervals.
    std::vector<PartitionPoly> g(order + 1);
    g[0].add({}, 1);

    // conv[j][m] = coefficient of x^m in g^j
    std::vector<std::vector<PartitionPoly>> conv(order + 1,
                                                 std::vector<PartitionPoly>(order + 1));
    conv[0][0].add({}, 1);
    for (int j = 1; j <= order; ++j) conv[j][0].add({}, 1);

    for (int M = 1; M <= order; ++M) {
        PartitionPoly total;
        for (int k = 1; 2 * k <= M; ++k) {
            const PartitionPoly& ways = conv[2 * k][M - 2 * k];
            if (ways.terms.empty()) continue;
            PartitionPoly sym;
            sym.add({{2 * k, 1}}, 1);
            PartitionPoly contrib = sym.mul(ways);
            for (const auto& [m, c] : contrib.terms) total.add(m, c);
        }
        g[M] = std::move(total);
        // conv[j] = conv[j-1] * g, extended to degree M now that g[M] is fixed
        for (int j = 1; j <= order; ++j) {
            PartitionPoly acc;
            for (int i = 0; i <= M; ++i) {
                if (conv[j - 1][M - i].terms.empty() || g[i].terms.empty()) continue;
                PartitionPoly prod = conv[j - 1][M - i].mul(g[i]);
                for (const auto& [m, c] : prod.terms) acc.add(m, c);
            }
            conv[j][M] = std::move(acc);
        }
    }

    PartitionWeightSeries out;
    out.order = order;
    out.coef.resize(order + 1);
    for (int M = 2; M <= order; ++M) out.coef[M] = g[M];
    return out;
}

BivariateSeries gf_forest(int order) {
    PartitionWeightSeries theta = gf_even_noncrossing(order);
    BivariateSeries trees = gf_tree(order);  // a_k = coefficient of x^{2k-1}

    auto a_of = [&](int k) -> const ZPoly& {
        static const ZPoly zero{};
        int pow = 2 * k - 1;
        if (pow > trees.order) return zero;
        return trees.coef[pow];
    };

    BivariateSeries f(order);
    for (int M = 2; M <= order; ++M) {
        ZPoly row;
        for (const auto& [mono, c] : theta.coef[M].terms) {
            ZPoly term{c};
            for (auto [size, exp] : mono) {
                const ZPoly& a = a_of(size / 2);
                for (int e = 0; e < exp; ++e) term = zp_mul(term, a);
            }
            row = zp_add(row, term);
        }
        f.coef[M] = std::move(row);
    }
    return f;
}

std::vector<Int> catalan_numbers(int count) {
    std::vector<Int> c(count);
    for (int n = 0; n < count; ++n) {
        Int binom = 1;
        for (int k = 0; k < n; ++k) binom = binom * (2 * n - k) / (k + 1);
        c[n] = binom / (n + 1);
    }
    return c;
}

}  // namespace bb
