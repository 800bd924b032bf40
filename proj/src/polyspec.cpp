#include "polyspec.hpp"

#include <cctype>
#include <sstream>

namespace bb {

namespace {

struct EntryParse {
    std::optional<QComplex> value;
    std::string error;
};

// one coefficient entry: RE, REi, RE+IMi, RE-IMi, i, -i, ...
EntryParse parse_entry(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) return {std::nullopt, "empty coefficient"};

    // split into one or two signed terms
    std::vector<std::string> terms;
    size_t start = 0;
    for (size_t k = 1; k < t.size(); ++k) {
        char c = t[k];
        char prev = t[k - 1];
        if ((c == '+' || c == '-') && prev != '/' && prev != '+' && prev != '-' &&
            prev != 'e' && prev != 'E') {
            terms.push_back(t.substr(start, k - start));
            start = k;
        }
    }
    terms.push_back(t.substr(start));
    if (terms.size() > 2) return {std::nullopt, "too many terms in coefficient"};

    QComplex out;
    bool saw_imag = false;
    for (auto term : terms) {
        bool imag = !term.empty() && (term.back() == 'i' || term.back() == 'I');
        if (imag) {
            term.pop_back();
            if (saw_imag) return {std::nullopt, "two imaginary terms"};
            saw_imag = true;
            if (term.empty() || term == "+") term = "1";
            if (term == "-") term = "-1";
        }
        if (term.empty()) return {std::nullopt, "empty term"};
        auto q = parse_rational(term);
        if (!q) return {std::nullopt, "bad number '" + term + "'"};
        if (imag)
            out.im += *q;
        else
            out.re += *q;
    }
    if (terms.size() == 2 && !saw_imag)
        return {std::nullopt, "two real terms in one coefficient"};
    return {out, ""};
}

}  // namespace

ParseOutcome parse_poly_spec(const std::string& text) {
    ParseOutcome out;
    std::vector<std::pair<std::string, int>> entries;  // text, offset
    std::string cur;
    int cur_pos = 0;
    for (size_t k = 0; k <= text.size(); ++k) {
        if (k == text.size() || text[k] == ',') {
            entries.emplace_back(cur, cur_pos);
            cur.clear();
            cur_pos = static_cast<int>(k) + 1;
        } else {
            cur += text[k];
        }
    }
    if (entries.size() < 2) {
        out.error = "need at least two coefficients";
        out.error_pos = 0;
        return out;
    }

    std::vector<QComplex> desc;
    for (const auto& [etext, pos] : entries) {
        EntryParse ep = parse_entry(etext);
        if (!ep.value) {
            std::ostringstream os;
            os << "coefficient " << desc.size() + 1 << " at offset " << pos << ": " << ep.error;
            out.error = os.str();
            out.error_pos = pos;
            return out;
        }
        desc.push_back(*ep.value);
    }
    if (!(desc.front() == QComplex(1, 0))) {
        out.error = "leading coefficient must be 1 (monic)";
        out.error_pos = entries.front().second;
        return out;
    }

    std::vector<QComplex> asc(desc.rbegin(), desc.rend());
    ParsedPoly p;
    p.exact = QCPoly(asc);
    p.degree = p.exact.deg();
    if (p.degree + 1 != static_cast<int>(desc.size())) {
        out.error = "leading coefficient vanished after parsing";
        out.error_pos = 0;
        return out;
    }
    p.floating = CPoly::from_exact(p.exact);
    for (const auto& c : p.floating.coeffs())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            out.error = "coefficient overflows double precision";
            out.error_pos = 0;
            return out;
        }
    out.poly = std::move(p);
    return out;
}

}  // namespace bb
