#include "svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bb {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 60.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v + 0.0);  // normalise -0
    return buf;
}

// map a curve point (scaled by 1/R0) into view coordinates, y flipped
std::pair<double, double> view(Cplx z, double r0) {
    double s = (kSize - 2 * kMargin) / 2.0;
    return {kSize / 2 + s * z.real() / r0, kSize / 2 - s * z.imag() / r0};
}

}  // namespace

std::string render_svg(const TraceResult& tr) {
    std::ostringstream os;
    double r0 = tr.boundary_radius;
    double radius = (kSize - 2 * kMargin) / 2.0;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << static_cast<int>(kSize)
       << "\" height=\"" << static_cast<int>(kSize) << "\" viewBox=\"0 0 "
       << static_cast<int>(kSize) << " " << static_cast<int>(kSize) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<circle cx=\"" << fmt(kSize / 2) << "\" cy=\"" << fmt(kSize / 2) << "\" r=\""
       << fmt(radius) << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

    for (const auto& bp : tr.branches) {
        bool is_r = bp.start_leaf % 2 == 1;
        os << "<polyline fill=\"none\" stroke=\"" << (is_r ? "#1f77b4" : "#d62728")
           << "\" stroke-width=\"" << (is_r ? "3" : "1.5") << "\" points=\"";
        size_t stride = std::max<size_t>(1, bp.polyline.size() / 400);
        for (size_t k = 0; k < bp.polyline.size(); k += stride) {
            auto [x, y] = view(bp.polyline[k], r0);
            os << fmt(x) << "," << fmt(y) << " ";
        }
        if (!bp.polyline.empty()) {
            auto [x, y] = view(bp.polyline.back(), r0);
            os << fmt(x) << "," << fmt(y);
        }
        os << "\"/>\n";
    }

    for (const auto& vs : tr.vertices) {
        auto [x, y] = view(vs.position, r0);
        os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\""
           << (vs.is_root ? "#000000" : "#888888") << "\"/>\n";
    }

    int leaves = 4 * tr.n;
    for (int k = 0; k < leaves; ++k) {
        double ang = M_PI * k / (2.0 * tr.n);
        double lx = kSize / 2 + (radius + 18) * std::cos(ang);
        double ly = kSize / 2 - (radius + 18) * std::sin(ang);
        os << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
           << "\" font-size=\"14\" font-family=\"sans-serif\" text-anchor=\"middle\" "
              "dominant-baseline=\"middle\">"
           << k << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_svg(const TraceResult& tr, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("render_svg: cannot open " + path);
    out << render_svg(tr);
}

}  // namespace bb
