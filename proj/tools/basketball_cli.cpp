// Command-line front end; talks to the library through the C API only.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "basketball.h"

namespace {

int code_to_exit(int code) {
    switch (code) {
        case BB_OK:
            return 0;
        case BB_EPARSE:
            return 2;
        case BB_ENUMERIC:
            return 3;
        case BB_ECAPACITY:
            return 4;
        default:
            return 1;
    }
}

int bail(int code) {
    std::fprintf(stderr, "error: %s\n", bb_error_message());
    return code_to_exit(code);
}

struct StringOut {
    char* s = nullptr;
    ~StringOut() { bb_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial basketballs of complex polynomials"};
    app.require_subcommand(1);
    app.fallthrough();  // tolerance flags may follow the subcommand

    bb_trace_options opts{};
    app.add_option("--radius-safety", opts.radius_safety, "boundary radius safety factor");
    app.add_option("--corrector-tol", opts.corrector_tol, "corrector tolerance");
    app.add_option("--snap-factor", opts.vertex_snap_radius_factor, "vertex snap radius factor");
    app.add_option("--on-curve-tol", opts.on_curve_tol, "on-curve residual tolerance");
    app.add_option("--step-max", opts.step_max, "maximum continuation step");
    app.add_option("--max-steps", opts.max_steps, "continuation step cap");
    app.add_flag("--extended", opts.extended_precision, "long-double root solving");

    auto* analyze = app.add_subcommand("analyze", "trace and classify one polynomial");
    std::string poly_text, svg_path;
    bool want_json = false, want_exact = false;
    analyze->add_option("--poly", poly_text, "coefficients, degree-descending")->required();
    analyze->add_option("--svg", svg_path, "write an SVG figure");
    analyze->add_flag("--json", want_json, "emit one JSON document");
    analyze->add_flag("--exact", want_exact, "append exact singularity verdicts");

    auto* census = app.add_subcommand("census", "exhaustive forest/basketball censuses");
    int census_n = 3;
    bool forests = false, basketballs = false, orbits = false, color_preserving = false;
    std::string by = "degree";
    census->add_option("--n", census_n, "half leaf count")->required();
    census->add_flag("--forests", forests, "census of circular forests");
    census->add_flag("--basketballs", basketballs, "census of basketballs");
    census->add_flag("--orbits", orbits, "count dihedral orbits");
    census->add_flag("--color-preserving", color_preserving,
                     "orbit subgroup that fixes the two colours");
    census->add_option("--by", by, "grading: degree | t");

    auto* series = app.add_subcommand("series", "generating-function tables");
    std::string which = "trees";
    int order = 13;
    series->add_option("--which", which, "trees | partitions | forests")->required();
    series->add_option("--order", order, "truncation order in x");

    auto* classify = app.add_subcommand("classify3", "exact degree-3 cell classification");
    std::string coeffs;
    classify->add_option("--coeffs", coeffs, "a,b,c,d as rationals")->required();

    auto* grid = app.add_subcommand("grid", "critical-value grid of f - (a+bi)");
    std::string grid_poly;
    grid->add_option("--poly", grid_poly, "coefficients, degree-descending")->required();

    auto* qn = app.add_subcommand("qn", "enumerator of the bounded-degree family");
    int qn_n = 3;
    qn->add_option("--n", qn_n, "polynomial degree")->required();

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        bb_poly* p = nullptr;
        int rc = bb_poly_parse(poly_text.c_str(), &p);
        if (rc != BB_OK) return bail(rc);
        bb_trace* t = nullptr;
        rc = bb_analyze(p, &opts, &t);
        if (rc != BB_OK) {
            bb_poly_free(p);
            return bail(rc);
        }
        StringOut text;
        rc = want_json ? bb_trace_json(t, &text.s) : bb_trace_text(t, &text.s);
        if (rc == BB_OK) std::fputs(text.s, stdout);
        if (rc == BB_OK && want_json) std::fputc('\n', stdout);
        if (rc == BB_OK && want_exact) {
            StringOut verdicts;
            rc = bb_exact_verdicts(p, &verdicts.s);
            if (rc == BB_OK) std::printf("verdicts = %s\n", verdicts.s);
        }
        if (rc == BB_OK && !svg_path.empty()) rc = bb_trace_svg_file(t, svg_path.c_str());
        bb_trace_free(t);
        bb_poly_free(p);
        return rc == BB_OK ? 0 : bail(rc);
    }

    if (census->parsed()) {
        if (forests == basketballs) {
            std::fprintf(stderr, "error: pass exactly one of --forests / --basketballs\n");
            return 2;
        }
        StringOut text;
        int rc = bb_census(census_n, forests ? BB_CENSUS_FORESTS : BB_CENSUS_BASKETBALLS,
                           by == "t" ? BB_BY_VERTEX_COUNT : BB_BY_DEGREE, orbits ? 1 : 0,
                           color_preserving ? 1 : 0, &text.s);
        if (rc != BB_OK) return bail(rc);
        std::fputs(text.s, stdout);
        return 0;
    }

    if (series->parsed()) {
        int kind = which == "trees"        ? BB_SERIES_TREES
                   : which == "partitions" ? BB_SERIES_PARTITIONS
                   : which == "forests"    ? BB_SERIES_FORESTS
                                           : -1;
        if (kind < 0) {
            std::fprintf(stderr, "error: --which must be trees, partitions or forests\n");
            return 2;
        }
        StringOut text;
        int rc = bb_series(kind, order, &text.s);
        if (rc != BB_OK) return bail(rc);
        std::fputs(text.s, stdout);
        return 0;
    }

    if (classify->parsed()) {
        std::string parts[4];
        int idx = 0;
        for (char c : coeffs) {
            if (c == ',') {
                if (++idx > 3) break;
            } else {
                parts[idx] += c;
            }
        }
        if (idx != 3) {
            std::fprintf(stderr, "error: --coeffs needs a,b,c,d\n");
            return 2;
        }
        StringOut text;
        int rc = bb_classify3(parts[0].c_str(), parts[1].c_str(), parts[2].c_str(),
                              parts[3].c_str(), &text.s);
        if (rc != BB_OK) return bail(rc);
        std::printf("%s\n", text.s);
        return 0;
    }

    if (grid->parsed()) {
        bb_poly* p = nullptr;
        int rc = bb_poly_parse(grid_poly.c_str(), &p);
        if (rc != BB_OK) return bail(rc);
        StringOut text;
        rc = bb_grid(p, &text.s);
        bb_poly_free(p);
        if (rc != BB_OK) return bail(rc);
        std::fputs(text.s, stdout);
        return 0;
    }

    if (qn->parsed()) {
        StringOut text;
        int rc = bb_qn(qn_n, &text.s);
        if (rc != BB_OK) return bail(rc);
        std::fputs(text.s, stdout);
        return 0;
    }

    return 0;
}
