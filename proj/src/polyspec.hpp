#ifndef BB_POLYSPEC_HPP
#define BB_POLYSPEC_HPP

#include <optional>
#include <string>

#include "cpoly.hpp"
#include "qpoly.hpp"

namespace bb {

// Parse of a textual coefficient list, degree-descending, entries "RE",
// "REi" or "RE+IMi" with decimal or rational p/q components, e.g.
// "1, 0, -3-3i, 2". The leading entry must be 1.
struct ParsedPoly {
    CPoly floating;
    QCPoly exact;  // always populated; entries are parsed exactly
    int degree = 0;
};

struct ParseOutcome {
    std::optional<ParsedPoly> poly;
    std::string error;     // human-readable, with position
    int error_pos = -1;    // offset into the input
    bool ok() const { return poly.has_value(); }
};

ParseOutcome parse_poly_spec(const std::string& text);

}  // namespace bb

#endif
