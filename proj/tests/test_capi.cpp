// Exercises the shared-library surface only, through the public header.
#include <cstdio>
#include <cstring>
#include <string>

#include "basketball.h"

static int failures = 0;

#define REQUIRE(cond)                                                       \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::fprintf(stderr, "[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static bool contains(const char* hay, const char* needle) {
    return hay && std::strstr(hay, needle) != nullptr;
}

int main() {
    // parse errors carry positions and the parse error code
    bb_poly* p = nullptr;
    REQUIRE(bb_poly_parse("2,0,1", &p) == BB_EPARSE);
    REQUIRE(contains(bb_error_message(), "monic"));
    REQUIRE(bb_poly_parse("1,0,xyz", &p) == BB_EPARSE);

    REQUIRE(bb_poly_parse("1,0,0,1", &p) == BB_OK);
    REQUIRE(bb_poly_degree(p) == 3);

    bb_trace* t = nullptr;
    REQUIRE(bb_analyze(p, nullptr, &t) == BB_OK);
    char* json = nullptr;
    REQUIRE(bb_trace_json(t, &json) == BB_OK);
    REQUIRE(contains(json, "\"R\":[[1,3],[5,7],[9,11]]"));
    REQUIRE(contains(json, "\"degree\":1"));
    bb_string_free(json);

    char* text = nullptr;
    REQUIRE(bb_trace_text(t, &text) == BB_OK);
    REQUIRE(contains(text, "R = [[1,3],[5,7],[9,11]]"));
    bb_string_free(text);

    char* verdicts = nullptr;
    REQUIRE(bb_exact_verdicts(p, &verdicts) == BB_OK);
    // z^3 + 1: R nonsingular, I singular
    REQUIRE(contains(verdicts, "{\"component\":\"R\",\"real_witness\":false"));
    REQUIRE(contains(verdicts, "{\"component\":\"I\",\"real_witness\":true"));
    bb_string_free(verdicts);
    bb_trace_free(t);
    bb_poly_free(p);

    char* census = nullptr;
    REQUIRE(bb_census(3, BB_CENSUS_BASKETBALLS, BB_BY_DEGREE, 0, 0, &census) == BB_OK);
    REQUIRE(contains(census, "[1,16,42,48,22]"));
    bb_string_free(census);

    REQUIRE(bb_census(3, BB_CENSUS_BASKETBALLS, BB_BY_DEGREE, 1, 1, &census) == BB_OK);
    REQUIRE(contains(census, "[1,4,8,8,6]"));
    bb_string_free(census);

    REQUIRE(bb_census(3, BB_CENSUS_FORESTS, BB_BY_DEGREE, 1, 0, &census) == BB_OK);
    REQUIRE(contains(census, "[0,1,1,1,2]"));
    bb_string_free(census);

    // capacity errors map to BB_ECAPACITY
    REQUIRE(bb_census(9, BB_CENSUS_FORESTS, BB_BY_DEGREE, 0, 0, &census) == BB_ECAPACITY);

    char* series = nullptr;
    REQUIRE(bb_series(BB_SERIES_TREES, 9, &series) == BB_OK);
    REQUIRE(contains(series, "x^9: [0,1,15,55,55]"));
    bb_string_free(series);

    REQUIRE(bb_series(BB_SERIES_PARTITIONS, 4, &series) == BB_OK);
    REQUIRE(contains(series, "x^4: 2*p2^2 + p4"));
    bb_string_free(series);

    REQUIRE(bb_series(BB_SERIES_FORESTS, 10, &series) == BB_OK);
    REQUIRE(contains(series, "x^10: [42,176,285,205,55]"));
    bb_string_free(series);

    char* cls = nullptr;
    REQUIRE(bb_classify3("0", "0", "0", "0", &cls) == BB_OK);
    REQUIRE(contains(cls, "\"case\":\"a.1\""));
    REQUIRE(contains(cls, "\"degree\":0"));
    bb_string_free(cls);

    REQUIRE(bb_classify3("1", "1", "0", "0", &cls) == BB_OK);
    REQUIRE(contains(cls, "\"case\":\"B\""));
    bb_string_free(cls);

    REQUIRE(bb_classify3("1", "x", "0", "0", &cls) == BB_EPARSE);

    bb_poly* g = nullptr;
    REQUIRE(bb_poly_parse("1,0,6i,0", &g) == BB_OK);
    char* grid = nullptr;
    REQUIRE(bb_grid(g, &grid) == BB_OK);
    REQUIRE(contains(grid, "l=2 m=2; [4,12,9]"));
    bb_string_free(grid);
    bb_poly_free(g);

    char* qn = nullptr;
    REQUIRE(bb_qn(4, &qn) == BB_OK);
    REQUIRE(contains(qn, "[0,1,8,16,10] total 35"));
    bb_string_free(qn);

    // SVG output through the shared surface
    bb_poly* cube = nullptr;
    bb_trace* cube_trace = nullptr;
    REQUIRE(bb_poly_parse("1,0,0,0", &cube) == BB_OK);
    REQUIRE(bb_analyze(cube, nullptr, &cube_trace) == BB_OK);
    REQUIRE(bb_trace_svg_file(cube_trace, "capi_test_out.svg") == BB_OK);
    {
        std::FILE* svg = std::fopen("capi_test_out.svg", "rb");
        REQUIRE(svg != nullptr);
        if (svg) {
            char head[8] = {};
            REQUIRE(std::fread(head, 1, 4, svg) == 4);
            REQUIRE(std::strncmp(head, "<svg", 4) == 0);
            std::fclose(svg);
            std::remove("capi_test_out.svg");
        }
    }
    bb_trace_free(cube_trace);
    bb_poly_free(cube);

    if (failures) {
        std::fprintf(stderr, "%d C API check(s) failed\n", failures);
        return 1;
    }
    std::puts("all C API checks passed");
    return 0;
}
