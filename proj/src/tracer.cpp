#include "tracer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bb {

namespace {

struct Site {
    Cplx pos;
    bool critical = false;
    bool on_R = false, on_I = false;
    bool is_root = false;
    int mult = 1;  // root multiplicity when is_root
};

struct Ctx {
    CPoly f, fp, fpp;
    int n = 0;
    double R0 = 0.0;
    double snap = 0.0;
    double step_max = 0.0;
    TraceConfig cfg;
    std::vector<Site> sites;
    std::vector<int> critical_ids;  // indices of critical sites
};

double eval_u(const Ctx& c, Cplx z, bool re_curve) {
    Cplx v = c.f.eval(z);
    return re_curve ? v.real() : v.imag();
}

// gradient of the traced harmonic function, as a complex vector
Cplx grad_u(const Ctx& c, Cplx z, bool re_curve) {
    Cplx d = std::conj(c.fp.eval(z));
    return re_curve ? d : Cplx(0.0, 1.0) * d;
}

bool correct_onto_curve(const Ctx& c, Cplx& z, bool re_curve) {
    for (int it = 0; it < 30; ++it) {
        double u = eval_u(c, z, re_curve);
        double scale = c.f.magnitude_at_radius(std::abs(z));
        if (std::abs(u) <= c.cfg.corrector_tol * scale) return true;
        Cplx g = grad_u(c, z, re_curve);
        double g2 = std::norm(g);
        if (g2 < 1e-280) return false;
        z -= u * g / g2;
    }
    double u = eval_u(c, z, re_curve);
    return std::abs(u) <= 10 * c.cfg.corrector_tol * c.f.magnitude_at_radius(std::abs(z));
}

Ctx prepare(const CPoly& f, const TraceConfig& cfg) {
    if (f.deg() < 1) throw TraceError("tracer: degree >= 1 required");
    if (std::abs(f.lead() - 1.0) > 1e-9) throw TraceError("tracer: monic polynomial required");
    Ctx c;
    c.f = f;
    c.fp = f.derivative();
    c.fpp = c.fp.derivative();
    c.n = f.deg();
    c.cfg = cfg;
    c.R0 = boundary_radius(f, cfg);
    c.step_max = cfg.step_max > 0 ? cfg.step_max : 0.02 * c.R0;

    auto roots = cfg.extended ? all_roots_extended(f) : all_roots(f);
    std::vector<RootCluster> crits;
    if (c.n >= 2) crits = cfg.extended ? all_roots_extended(c.fp) : all_roots(c.fp);

    double tol = cfg.on_curve_tol;
    for (const auto& rc : crits) {
        Site s;
        s.pos = rc.value;
        s.critical = true;
        double scale = c.f.magnitude_at_radius(std::abs(rc.value));
        Cplx v = c.f.eval(rc.value);
        s.is_root = std::abs(v) <= tol * scale;
        s.on_R = s.is_root || std::abs(v.real()) <= tol * scale;
        s.on_I = s.is_root || std::abs(v.imag()) <= tol * scale;
        c.sites.push_back(s);
    }
    // roots of f: merge into critical sites when close, else simple crossings
    for (const auto& rc : roots) {
        bool merged = false;
        for (auto& s : c.sites) {
            if (!s.critical) continue;
            double sep = std::abs(s.pos - rc.value);
            if (sep <= 1e-5 * std::max(1.0, std::abs(rc.value)) || rc.multiplicity >= 2) {
                if (sep <= 2e-2 * std::max(1.0, c.R0)) {
                    s.is_root = s.on_R = s.on_I = true;
                    s.mult = rc.multiplicity;
                    merged = true;
                    break;
                }
            }
        }
        if (!merged) {
            Site s;
            s.pos = rc.value;
            s.is_root = s.on_R = s.on_I = true;
            s.mult = rc.multiplicity;
            c.sites.push_back(s);
        }
    }
    for (size_t k = 0; k < c.sites.size(); ++k)
        if (c.sites[k].critical) c.critical_ids.push_back(static_cast<int>(k));

    double min_sep = c.R0;
    for (size_t i = 0; i < c.sites.size(); ++i)
        for (size_t j = i + 1; j < c.sites.size(); ++j)
            min_sep = std::min(min_sep, std::abs(c.sites[i].pos - c.sites[j].pos));
    c.snap = std::min(cfg.vertex_snap_radius_factor * c.R0, 0.25 * min_sep);
    if (c.snap < 1e4 * std::numeric_limits<double>::epsilon() * c.R0)
        throw TraceError("tracer: sites too close, degenerate at working precision");
    return c;
}

double anchor_angle(const Ctx& c, int leaf);

// all 4n leaf anchors must resolve; otherwise the boundary circle is not yet
// in the asymptotic regime and gets doubled (at most six times)
void settle_anchors(Ctx& c) {
    for (int doubling = 0;; ++doubling) {
        try {
            for (int leaf = 0; leaf < 4 * c.n; ++leaf) anchor_angle(c, leaf);
            return;
        } catch (const TraceError&) {
            if (doubling >= 6) throw;
            c.R0 *= 2;
            if (c.cfg.step_max <= 0) c.step_max = 0.02 * c.R0;
        }
    }
}

// angle of the curve point near the ideal leaf direction on the boundary circle
double anchor_angle(const Ctx& c, int leaf) {
    int n = c.n;
    double spacing = M_PI / (2 * n);
    double th0 = leaf * spacing;
    bool re_curve = leaf % 2 == 1;
    auto u = [&](double th) { return eval_u(c, std::polar(c.R0, th), re_curve); };
    auto du = [&](double th) {
        Cplx z = std::polar(c.R0, th);
        Cplx d = Cplx(0.0, 1.0) * z * c.fp.eval(z);
        return re_curve ? d.real() : d.imag();
    };
    double th = th0;
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
        double d = du(th);
        if (d == 0.0) break;
        double nt = th - u(th) / d;
        if (std::abs(nt - th0) > 0.45 * spacing) break;
        if (std::abs(nt - th) < 1e-15) {
            th = nt;
            ok = true;
            break;
        }
        th = nt;
    }
    if (!ok || std::abs(u(th)) > c.cfg.corrector_tol * c.f.magnitude_at_radius(c.R0)) {
        // bisection fallback
        double lo = th0 - 0.49 * spacing, hi = th0 + 0.49 * spacing;
        double ulo = u(lo), uhi = u(hi);
        if (ulo == 0.0) return lo;
        if (uhi == 0.0) return hi;
        if (ulo * uhi > 0) throw TraceError("tracer: leaf anchor bracketing failed");
        for (int it = 0; it < 120; ++it) {
            double mid = 0.5 * (lo + hi);
            double um = u(mid);
            if (um == 0.0) return mid;
            (um * ulo < 0 ? hi : lo) = mid;
            (um * ulo < 0 ? uhi : ulo) = um;
        }
        th = 0.5 * (lo + hi);
    }
    return th;
}

struct RawVisit {
    int site;
    size_t polyline_index;
};

struct RawPath {
    int start_leaf = -1, end_leaf = -1;
    std::vector<Cplx> pts;
    std::vector<RawVisit> visits;
};

double dist_to_nearest_critical(const Ctx& c, Cplx z, int* which = nullptr) {
    double best = 4 * c.R0;
    for (int id : c.critical_ids) {
        double d = std::abs(z - c.sites[id].pos);
        if (d < best) {
            best = d;
            if (which) *which = id;
        }
    }
    return best;
}

RawPath trace_from(const Ctx& c, int start_leaf) {
    bool re_curve = start_leaf % 2 == 1;
    RawPath path;
    path.start_leaf = start_leaf;

    double th = anchor_angle(c, start_leaf);
    Cplx z = std::polar(c.R0, th);
    path.pts.push_back(z);

    Cplx g = grad_u(c, z, re_curve);
    Cplx t = Cplx(0.0, 1.0) * g / std::abs(g);
    // travel inward
    if ((t * std::conj(z)).real() > 0) t = -t;

    int cooldown_site = -1;
    int steps = 0;
    while (true) {
        if (++steps > c.cfg.max_steps) throw TraceError("tracer: max step count exceeded");

        int nearest = -1;
        double dcrit = dist_to_nearest_critical(c, z, &nearest);
        double h = std::min(c.step_max, 0.1 * std::max(dcrit, 1e-3 * c.snap));
        double fpp_mag = std::abs(c.fpp.eval(z));
        double fp_mag = std::abs(c.fp.eval(z));
        if (fpp_mag > 0) h = std::min(h, 0.5 * fp_mag / fpp_mag);

        Cplx znew;
        bool accepted = false;
        for (int tries = 0; tries < 40; ++tries) {
            znew = z + h * t;
            if (correct_onto_curve(c, znew, re_curve)) {
                accepted = true;
                break;
            }
            h *= 0.5;
            if (h < 1e-15 * c.R0) break;
        }
        if (!accepted) throw TraceError("tracer: corrector failed to converge");

        // snap-disc handling for on-curve critical points
        int snap_site = -1;
        for (int id : c.critical_ids) {
            const Site& s = c.sites[id];
            bool relevant = re_curve ? s.on_R : s.on_I;
            if (!relevant) continue;
            if (id == cooldown_site) continue;
            if (std::abs(znew - s.pos) < c.snap) {
                snap_site = id;
                break;
            }
        }
        if (snap_site >= 0) {
            const Site& s = c.sites[snap_site];
            // entry point on the snap circle along [z, znew]
            Cplx dir = znew - z;
            double a = std::norm(dir);
            double b = 2 * ((z - s.pos) * std::conj(dir)).real();
            double cc = std::norm(z - s.pos) - c.snap * c.snap;
            double disc = b * b - 4 * a * cc;
            Cplx entry = znew;
            if (disc >= 0 && a > 0) {
                double sroot = (-b - std::sqrt(disc)) / (2 * a);
                if (sroot >= 0 && sroot <= 1) entry = z + sroot * dir;
            }
            Cplx exit = 2.0 * s.pos - entry;  // straight through
            if (!correct_onto_curve(c, exit, re_curve))
                throw TraceError("tracer: re-projection after a vertex failed");
            path.pts.push_back(entry);
            path.pts.push_back(s.pos);
            path.pts.push_back(exit);
            path.visits.push_back({snap_site, path.pts.size() - 2});
            z = exit;
            Cplx gg = grad_u(c, z, re_curve);
            t = Cplx(0.0, 1.0) * gg / std::abs(gg);
            if ((t * std::conj(z - s.pos)).real() < 0) t = -t;
            cooldown_site = snap_site;
            continue;
        }
        if (cooldown_site >= 0 &&
            std::abs(znew - c.sites[cooldown_site].pos) > 1.6 * c.snap)
            cooldown_site = -1;

        // direction continuity
        Cplx gg = grad_u(c, znew, re_curve);
        Cplx tn = Cplx(0.0, 1.0) * gg / std::abs(gg);
        if ((tn * std::conj(t)).real() < 0) tn = -tn;

        // boundary termination, moving outward
        if (std::abs(znew) >= c.R0 && steps > 3) {
            Cplx dir = znew - z;
            double a = std::norm(dir);
            double b = 2 * (z * std::conj(dir)).real();
            double cc = std::norm(z) - c.R0 * c.R0;
            double disc = b * b - 4 * a * cc;
            Cplx endp = znew;
            if (disc >= 0 && a > 0) {
                double sroot = (-b + std::sqrt(disc)) / (2 * a);
                if (sroot >= 0 && sroot <= 1) endp = z + sroot * dir;
            }
            correct_onto_curve(c, endp, re_curve);
            path.pts.push_back(endp);
            double spacing = M_PI / (2 * c.n);
            double ang = std::arg(endp);
            if (ang < 0) ang += 2 * M_PI;
            int label = static_cast<int>(std::lround(ang / spacing)) % (4 * c.n);
            if (label % 2 != start_leaf % 2) {
                // parity mismatch: pick the nearest label of the right parity
                double best = 1e300;
                for (int cand = start_leaf % 2; cand < 4 * c.n; cand += 2) {
                    double diff = std::abs(std::remainder(ang - cand * spacing, 2 * M_PI));
                    if (diff < best) {
                        best = diff;
                        label = cand;
                    }
                }
                if (best > 0.45 * spacing)
                    throw TraceError("tracer: boundary exit between leaf directions");
            }
            path.end_leaf = label;
            return path;
        }

        z = znew;
        t = tn;
        path.pts.push_back(z);
    }
}

}  // namespace

double boundary_radius(const CPoly& f, const TraceConfig& cfg) {
    if (f.deg() < 1) throw TraceError("boundary_radius: degree >= 1 required");
    double r = 1.0;
    for (const auto& rc : all_roots(f)) r = std::max(r, std::abs(rc.value));
    if (f.deg() >= 2)
        for (const auto& rc : all_roots(f.derivative())) r = std::max(r, std::abs(rc.value));
    double R0 = cfg.radius_safety * r;
    // dominance of the leading term over everything below it
    for (int it = 0; it < 300; ++it) {
        double tail = 0.0, p = 1.0;
        for (int k = 0; k < f.deg(); ++k) {
            tail += std::abs(f[k]) * p;
            p *= R0;
        }
        if (p > 2 * tail) break;
        R0 *= 1.25;
    }
    return R0;
}

BranchPath trace_branch(const CPoly& f, int start_leaf, const TraceConfig& cfg) {
    Ctx c = prepare(f, cfg);
    settle_anchors(c);
    RawPath raw = trace_from(c, start_leaf);
    BranchPath out;
    out.start_leaf = raw.start_leaf;
    out.end_leaf = raw.end_leaf;
    out.polyline = std::move(raw.pts);
    for (const auto& v : raw.visits) out.visited_sites.push_back(v.site);
    return out;
}

TraceResult basketball_of(const CPoly& f, const TraceConfig& cfg) {
    Ctx c = prepare(f, cfg);
    settle_anchors(c);
    int n = c.n;
    std::vector<RawPath> paths(4 * n);
    for (int leaf = 0; leaf < 4 * n; ++leaf) paths[leaf] = trace_from(c, leaf);

    // involution consistency
    for (int leaf = 0; leaf < 4 * n; ++leaf) {
        int e = paths[leaf].end_leaf;
        if (e == leaf) throw TraceError("tracer: a branch returned to its own leaf");
        if (paths[e].end_leaf != leaf) {
            std::ostringstream os;
            os << "tracer: involution inconsistency, " << leaf << " -> " << e << " but " << e
               << " -> " << paths[e].end_leaf;
            throw TraceError(os.str());
        }
    }

    TraceResult tr;
    tr.n = n;
    tr.boundary_radius = c.R0;
    std::vector<Branch> rbr, ibr;
    for (int leaf = 0; leaf < 4 * n; ++leaf) {
        if (leaf > paths[leaf].end_leaf) continue;
        (leaf % 2 == 1 ? rbr : ibr).emplace_back(leaf, paths[leaf].end_leaf);
    }
    tr.R = Matching(4 * n, rbr);
    tr.I = Matching(4 * n, ibr);

    for (const auto& s : c.sites) {
        VertexSite vs;
        vs.position = s.pos;
        vs.is_root = s.is_root;
        tr.vertices.push_back(vs);
    }

    // assign site passages to branches by polyline proximity; distances are
    // measured to segments, since steps may stride past a simple root
    double reach = std::max(1.6 * c.snap, 1e-6 * c.R0);
    auto seg_dist = [](Cplx p0, Cplx p1, Cplx q) {
        Cplx d = p1 - p0;
        double len2 = std::norm(d);
        if (len2 == 0.0) return std::abs(q - p0);
        double t = std::clamp(((q - p0) * std::conj(d)).real() / len2, 0.0, 1.0);
        return std::abs(q - (p0 + t * d));
    };
    for (int leaf = 0; leaf < 4 * n; ++leaf) {
        if (leaf > paths[leaf].end_leaf) continue;
        const RawPath& p = paths[leaf];
        BranchPath bp;
        bp.start_leaf = leaf;
        bp.end_leaf = p.end_leaf;
        bp.polyline = p.pts;
        std::vector<std::pair<size_t, int>> ordered;  // (segment index, site)
        for (size_t sid = 0; sid < c.sites.size(); ++sid) {
            const Site& s = c.sites[sid];
            bool relevant = leaf % 2 == 1 ? s.on_R : s.on_I;
            if (!relevant) continue;
            double best = 1e300;
            size_t at = 0;
            for (size_t k = 0; k + 1 < p.pts.size(); ++k) {
                double d = seg_dist(p.pts[k], p.pts[k + 1], s.pos);
                if (d < best) {
                    best = d;
                    at = k;
                }
            }
            if (best <= reach) ordered.emplace_back(at, static_cast<int>(sid));
        }
        std::sort(ordered.begin(), ordered.end());
        for (auto [at, sid] : ordered) {
            bp.visited_sites.push_back(sid);
            (leaf % 2 == 1 ? tr.vertices[sid].local_m_R : tr.vertices[sid].local_m_I)++;
        }
        tr.branches.push_back(std::move(bp));
    }

    // drop sites nothing passes through (off-curve critical points)
    {
        std::vector<int> remap(tr.vertices.size(), -1);
        std::vector<VertexSite> kept;
        for (size_t k = 0; k < tr.vertices.size(); ++k) {
            if (tr.vertices[k].local_m_R + tr.vertices[k].local_m_I == 0) continue;
            remap[k] = static_cast<int>(kept.size());
            kept.push_back(tr.vertices[k]);
        }
        for (auto& bp : tr.branches) {
            std::vector<int> v2;
            for (int sid : bp.visited_sites)
                if (remap[sid] >= 0) v2.push_back(remap[sid]);
            bp.visited_sites = std::move(v2);
        }
        tr.vertices = std::move(kept);
    }

    auto res = make_basketball(tr.R, tr.I);
    if (!res.admissible())
        throw TraceError("tracer: traced pair is inadmissible: " + res.reason);
    tr.basketball = *res.ball;
    return tr;
}

bool union_self_check(const CPoly& f, const TraceConfig& cfg) {
    if (f.deg() > 5) throw TraceError("union_self_check: degree capped at 5");
    TraceResult tr = basketball_of(f, cfg);
    CPoly g = f * f;
    Ctx c = prepare(g, cfg);
    settle_anchors(c);

    std::vector<Branch> got;
    std::vector<char> seen(8 * f.deg(), 0);
    for (int leaf = 0; leaf < 8 * f.deg(); leaf += 2) {
        if (seen[leaf]) continue;
        RawPath p = trace_from(c, leaf);
        if (p.end_leaf % 2 != 0) return false;
        seen[leaf] = seen[p.end_leaf] = 1;
        got.emplace_back(leaf, p.end_leaf);
    }
    Matching traced(8 * f.deg(), got);

    std::vector<Branch> expect;
    for (const auto& b : tr.R.branches()) expect.emplace_back(2 * b.a, 2 * b.b);
    for (const auto& b : tr.I.branches()) expect.emplace_back(2 * b.a, 2 * b.b);
    return traced == Matching(8 * f.deg(), expect);
}

RealRootedReport real_rooted_check(const CPoly& f, const TraceConfig& cfg) {
    RealRootedReport rep;
    int n = f.deg();
    // preconditions: real coefficients, distinct real roots, zero root sum
    for (const auto& ck : f.coeffs())
        if (std::abs(ck.imag()) > 1e-9 * f.coeff_scale()) {
            rep.detail = "coefficients are not real";
            return rep;
        }
    if (n >= 2 && std::abs(f[n - 1]) > 1e-9 * f.coeff_scale()) {
        rep.detail = "roots do not sum to zero";
        return rep;
    }
    auto roots = all_roots(f);
    if (static_cast<int>(roots.size()) != n) {
        rep.detail = "roots are not distinct";
        return rep;
    }
    for (const auto& rc : roots)
        if (std::abs(rc.value.imag()) > 1e-7 * std::max(1.0, std::abs(rc.value))) {
            rep.detail = "roots are not all real";
            return rep;
        }

    TraceResult tr = basketball_of(f, cfg);
    std::vector<Branch> want{Branch(0, 2 * n)};
    for (int k = 2; k < 2 * n; k += 2) want.emplace_back(k, 4 * n - k);
    if (!(tr.I == Matching(4 * n, want))) {
        rep.detail = "imaginary matching is not {0,2n} + {k,-k}: " + tr.I.to_text();
        return rep;
    }
    if (!is_noncrossing(tr.R)) {
        rep.detail = "real matching is crossing: " + tr.R.to_text();
        return rep;
    }
    // the real-axis spine alternates roots of f and of f'
    for (const auto& bp : tr.branches) {
        if (bp.start_leaf != 0 || bp.end_leaf != 2 * n) continue;
        if (bp.visited_sites.size() != static_cast<size_t>(2 * n - 1)) {
            rep.detail = "spine visit count is not 2n-1";
            return rep;
        }
        for (size_t k = 0; k < bp.visited_sites.size(); ++k) {
            bool want_root = k % 2 == 0;
            if (tr.vertices[bp.visited_sites[k]].is_root != want_root) {
                rep.detail = "spine does not alternate roots of f and f'";
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace bb
