#include "basketball.h"

#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"
#include "enumeration.hpp"
#include "polyspec.hpp"
#include "series.hpp"
#include "stratifier.hpp"
#include "svg.hpp"
#include "tracer.hpp"

using nlohmann::json;

struct bb_poly {
    bb::ParsedPoly p;
};

struct bb_trace {
    bb::TraceResult tr;
};

namespace {

thread_local std::string g_error;

int fail(int code, const std::string& msg) {
    g_error = msg;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bb::TraceConfig to_config(const bb_trace_options* o) {
    bb::TraceConfig cfg;
    if (!o) return cfg;
    if (o->radius_safety > 0) cfg.radius_safety = o->radius_safety;
    if (o->corrector_tol > 0) cfg.corrector_tol = o->corrector_tol;
    if (o->vertex_snap_radius_factor > 0)
        cfg.vertex_snap_radius_factor = o->vertex_snap_radius_factor;
    if (o->on_curve_tol > 0) cfg.on_curve_tol = o->on_curve_tol;
    if (o->step_max > 0) cfg.step_max = o->step_max;
    if (o->max_steps > 0) cfg.max_steps = o->max_steps;
    cfg.extended = o->extended_precision != 0;
    return cfg;
}

json trace_to_json(const bb::TraceResult& tr) {
    json j;
    j["n"] = tr.n;
    j["R"] = json::parse(tr.R.to_text());
    j["I"] = json::parse(tr.I.to_text());
    j["degree"] = tr.basketball.degree;
    json verts = json::array();
    for (const auto& v : tr.vertices) {
        json jv;
        jv["pos"] = {v.position.real(), v.position.imag()};
        jv["mR"] = v.local_m_R;
        jv["mI"] = v.local_m_I;
        jv["is_root"] = v.is_root;
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    return j;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const bb::TraceError& e) {
        return fail(BB_ENUMERIC, e.what());
    } catch (const bb::SolverError& e) {
        return fail(BB_ENUMERIC, e.what());
    } catch (const std::length_error& e) {
        return fail(BB_ECAPACITY, e.what());
    } catch (const std::exception& e) {
        return fail(BB_EINVAL, e.what());
    }
}

}  // namespace

extern "C" {

BB_API int bb_poly_parse(const char* text, bb_poly** out) {
    if (!text || !out) return fail(BB_EINVAL, "null argument");
    auto res = bb::parse_poly_spec(text);
    if (!res.ok()) return fail(BB_EPARSE, res.error);
    *out = new bb_poly{std::move(*res.poly)};
    return BB_OK;
}

BB_API void bb_poly_free(bb_poly* p) { delete p; }

BB_API int bb_poly_degree(const bb_poly* p) { return p ? p->p.degree : -1; }

BB_API int bb_analyze(const bb_poly* p, const bb_trace_options* opts, bb_trace** out) {
    if (!p || !out) return fail(BB_EINVAL, "null argument");
    return guarded([&] {
        bb::TraceResult tr = bb::basketball_of(p->p.floating, to_config(opts));
        // coefficients are exact here, so the trace's singularity pattern can
        // be certified against the elimination verdicts; a borderline on-curve
        // decision that slipped past the floating tolerance is reported, not
        // silently kept
        bool traced_r = false, traced_i = false;
        for (const auto& v : tr.basketball.vertices) {
            bool multi_mixed = v.kind() == bb::VertexKind::Mixed && v.mR >= 2;
            if (v.kind() == bb::VertexKind::PureR || multi_mixed) traced_r = true;
            if (v.kind() == bb::VertexKind::PureI || multi_mixed) traced_i = true;
        }
        if (bb::singularity_verdict(p->p.exact, bb::Component::R).has_real_witness != traced_r ||
            bb::singularity_verdict(p->p.exact, bb::Component::I).has_real_witness != traced_i)
            return fail(BB_ENUMERIC,
                        "traced singularity pattern contradicts the exact verdicts; "
                        "degenerate at the working precision");
        *out = new bb_trace{std::move(tr)};
        return static_cast<int>(BB_OK);
    });
}

BB_API void bb_trace_free(bb_trace* t) { delete t; }

BB_API int bb_trace_json(const bb_trace* t, char** out_json) {
    if (!t || !out_json) return fail(BB_EINVAL, "null argument");
    *out_json = dup_string(trace_to_json(t->tr).dump());
    return BB_OK;
}

BB_API int bb_trace_text(const bb_trace* t, char** out_text) {
    if (!t || !out_text) return fail(BB_EINVAL, "null argument");
    const auto& tr = t->tr;
    std::ostringstream os;
    os << "n = " << tr.n << "\n";
    os << "R = " << tr.R.to_text() << "\n";
    os << "I = " << tr.I.to_text() << "\n";
    os << "degree = " << tr.basketball.degree << "\n";
    os << "vertices:\n";
    char buf[128];
    for (const auto& v : tr.vertices) {
        std::snprintf(buf, sizeof buf, "  (%.6f, %.6f) mR=%d mI=%d%s\n", v.position.real(),
                      v.position.imag(), v.local_m_R, v.local_m_I, v.is_root ? " root" : "");
        os << buf;
    }
    *out_text = dup_string(os.str());
    return BB_OK;
}

BB_API int bb_trace_svg_file(const bb_trace* t, const char* path) {
    if (!t || !path) return fail(BB_EINVAL, "null argument");
    return guarded([&] {
        bb::write_svg(t->tr, path);
        return BB_OK;
    });
}

BB_API int bb_exact_verdicts(const bb_poly* p, char** out_json) {
    if (!p || !out_json) return fail(BB_EINVAL, "null argument");
    return guarded([&] {
        json arr = json::array();
        for (auto comp : {bb::Component::R, bb::Component::I}) {
            auto v = bb::singularity_verdict(p->p.exact, comp);
            json jv;
            jv["component"] = comp == bb::Component::R ? "R" : "I";
            jv["resultant_zero"] = sgn(v.resultant_value) == 0;
            jv["real_witness"] = v.has_real_witness;
            json w = json::array();
            for (const auto& iv : v.witness_intervals)
                w.push_back({bb::rat_to_string(iv.lo), bb::rat_to_string(iv.hi)});
            jv["witness_intervals"] = w;
            arr.push_back(jv);
        }
        *out_json = dup_string(arr.dump());
        return BB_OK;
    });
}

BB_API int bb_census(int n, int kind, int grading, int orbits, int color_preserving,
                     char** out_text) {
    if (!out_text || n < 1) return fail(BB_EINVAL, "bad arguments");
    return guarded([&] {
        std::ostringstream os;
        if (orbits) {
            bb::OrbitCensus oc =
                kind == BB_CENSUS_FORESTS
                    ? bb::forest_orbit_census(n)
                    : bb::basketball_orbit_census(n, color_preserving
                                                         ? bb::OrbitGroup::ColorPreserving
                                                         : bb::OrbitGroup::FullDihedral);
            os << bb::enumerator_to_text(oc.by_degree) << "\n";
            os << "sizes:";
            bool first = true;
            for (const auto& [size, count] : oc.size_counts) {
                os << (first ? " " : ", ") << count.get_str() << " x " << size;
                first = false;
            }
            os << "\n";
        } else if (kind == BB_CENSUS_FORESTS) {
            bb::ForestCensus fc = bb::forest_census(n);
            os << bb::enumerator_to_text(grading == BB_BY_VERTEX_COUNT ? fc.by_vertex_count
                                                                       : fc.by_degree)
               << "\n";
        } else {
            bb::BasketballCensus bc = bb::basketball_census(n);
            os << bb::enumerator_to_text(bc.by_degree) << "\n";
        }
        *out_text = dup_string(os.str());
        return BB_OK;
    });
}

BB_API int bb_series(int which, int order, char** out_text) {
    if (!out_text || order < 1) return fail(BB_EINVAL, "bad arguments");
    return guarded([&] {
        std::ostringstream os;
        if (which == BB_SERIES_TREES) {
            bb::BivariateSeries a = bb::gf_tree(order);
            for (int k = 1; k <= order; k += 2)
                os << "x^" << k << ": " << bb::zp_row_text(a.coef[k]) << "\n";
        } else if (which == BB_SERIES_PARTITIONS) {
            bb::PartitionWeightSeries th = bb::gf_even_noncrossing(order);
            for (int k = 2; k <= order; k += 2)
                os << "x^" << k << ": " << th.coef[k].to_string() << "\n";
        } else {
            bb::BivariateSeries f = bb::gf_forest(order);
            for (int k = 2; k <= order; k += 2)
                os << "x^" << k << ": " << bb::zp_row_text(f.coef[k]) << "\n";
        }
        *out_text = dup_string(os.str());
        return BB_OK;
    });
}

BB_API int bb_classify3(const char* a, const char* b, const char* c, const char* d,
                        char** out_json) {
    if (!a || !b || !c || !d || !out_json) return fail(BB_EINVAL, "null argument");
    auto pa = bb::parse_rational(a), pb = bb::parse_rational(b), pc = bb::parse_rational(c),
         pd = bb::parse_rational(d);
    if (!pa || !pb || !pc || !pd) return fail(BB_EPARSE, "classify3: rational inputs required");
    return guarded([&] {
        bb::CellDescriptor3 cd = bb::classify3(*pa, *pb, *pc, *pd);
        json j;
        j["case"] = cd.case_label;
        j["degree"] = cd.degree;
        j["orbitElement"] = {{"rotation", cd.orbit_element.rot}, {"flip", cd.orbit_element.flip}};
        j["rSingular"] = cd.r_singular;
        j["iSingular"] = cd.i_singular;
        j["doubleRoot"] = cd.has_double_root;
        j["repR"] = json::parse(cd.rep_R.to_text());
        j["repI"] = json::parse(cd.rep_I.to_text());
        *out_json = dup_string(j.dump());
        return BB_OK;
    });
}

BB_API int bb_grid(const bb_poly* p, char** out_text) {
    if (!p || !out_text) return fail(BB_EINVAL, "null argument");
    return guarded([&] {
        bb::GridDecomposition g = bb::critical_grid(p->p.floating);
        std::ostringstream os;
        os << "l=" << g.ell << " m=" << g.m << "; " << bb::enumerator_to_text(g.enumerator)
           << "\n";
        *out_text = dup_string(os.str());
        return BB_OK;
    });
}

BB_API int bb_qn(int n, char** out_text) {
    if (!out_text || n < 2) return fail(BB_EINVAL, "bad arguments");
    return guarded([&] {
        std::ostringstream os;
        os << bb::enumerator_to_text(bb::qn_enumerator(n)) << " total "
           << bb::qn_total(n).get_str() << "\n";
        *out_text = dup_string(os.str());
        return BB_OK;
    });
}

BB_API void bb_string_free(char* s) { std::free(s); }

BB_API const char* bb_error_message(void) { return g_error.c_str(); }

}  // extern "C"
