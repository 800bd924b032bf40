#include "rational.hpp"

#include <cctype>

namespace bb {

std::optional<Rat> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) return std::nullopt;
    if (t[0] == '+') t = t.substr(1);  // GMP string parsing rejects a leading +
    if (t.empty()) return std::nullopt;

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        try {
            Int num(t.substr(0, slash));
            Int den(t.substr(slash + 1));
            if (sgn(den) == 0) return std::nullopt;
            Rat q(num, den);
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }

    auto dot = t.find('.');
    if (dot == std::string::npos) {
        try {
            return Rat(Int(t));
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }

    // decimal: sign? digits '.' digits
    std::string ipart = t.substr(0, dot), fpart = t.substr(dot + 1);
    bool neg = false;
    if (!ipart.empty() && (ipart[0] == '+' || ipart[0] == '-')) {
        neg = ipart[0] == '-';
        ipart = ipart.substr(1);
    }
    if (ipart.empty() && fpart.empty()) return std::nullopt;
    for (char c : ipart)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    for (char c : fpart)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    try {
        Int num = ipart.empty() ? Int(0) : Int(ipart);
        Int den = 1;
        for (size_t k = 0; k < fpart.size(); ++k) den *= 10;
        num *= den;
        if (!fpart.empty()) num += Int(fpart);
        Rat q(num, den);
        q.canonicalize();
        if (neg) q = -q;
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string QComplex::to_string() const {
    if (sgn(im) == 0) return rat_to_string(re);
    std::string s = sgn(re) == 0 ? "" : rat_to_string(re);
    if (sgn(im) > 0 && !s.empty()) s += "+";
    s += rat_to_string(im) + "i";
    return s;
}

}  // namespace bb
