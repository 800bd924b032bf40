#ifndef BB_SVG_HPP
#define BB_SVG_HPP

#include <string>

#include "tracer.hpp"

namespace bb {

// Deterministic SVG of a traced basketball: unit-normalised bounding circle,
// thick strokes for the real component, thin for the imaginary, leaf labels
// and vertex markers. Byte-stable for identical inputs.
std::string render_svg(const TraceResult& tr);

void write_svg(const TraceResult& tr, const std::string& path);

}  // namespace bb

#endif
