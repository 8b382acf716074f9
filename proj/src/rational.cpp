#include "schubert/rational.hpp"

#include <cctype>

#include "schubert/error.hpp"

namespace schubert {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    size_t pos = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (pos == text.size()) throw InputError("bad rational literal '" + text + "'");
    bool seen_slash = false;
    for (size_t k = pos; k < text.size(); ++k) {
        if (text[k] == '/' && !seen_slash && k + 1 < text.size() && k > pos) {
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw InputError("bad rational literal '" + text + "'");
    }
    Rational q;
    if (q.set_str(text, 10) != 0) throw InputError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace schubert
