// Line-oriented text formats for the three presentations, word naming, and
// the DOT export of the GKM graph.

#include "schubert/serialize.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "schubert/error.hpp"

namespace schubert {

namespace {

std::string trimmed(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

// "word: polynomial" -> (word text, polynomial text).
std::pair<std::string, std::string> split_entry(const std::string& line) {
    size_t colon = line.find(':');
    if (colon == std::string::npos)
        throw InputError("expected 'word: polynomial', got \"" + line + "\"");
    return {trimmed(line.substr(0, colon)), trimmed(line.substr(colon + 1))};
}

}  // namespace

std::string format_word(const WeylElement& w) {
    if (w.is_identity()) return "e";
    std::string out;
    for (int letter : w.reduced_word()) out += "s" + std::to_string(letter + 1);
    return out;
}

WeylElement parse_word_name(const RootSystem& rs, const std::string& text) {
    std::string s = trimmed(text);
    if (s.empty()) throw InputError("empty word name");
    if (s == "e") return identity_element(rs);
    Word word;
    size_t k = 0;
    while (k < s.size()) {
        if (s[k] != 's')
            throw InputError("bad word name \"" + s + "\": expected 's' at position " +
                             std::to_string(k));
        size_t j = ++k;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == k) throw InputError("bad word name \"" + s + "\": missing subscript");
        int letter = std::stoi(s.substr(k, j - k));
        if (letter < 1 || letter > rs.n)
            throw InputError("word name \"" + s + "\": subscript " + std::to_string(letter) +
                             " out of range for rank " + std::to_string(rs.n));
        word.push_back(letter - 1);
        k = j;
    }
    return from_word(rs, word);
}

Word parse_word_csv(const RootSystem& rs, const std::string& text) {
    std::string s = trimmed(text);
    if (s.empty() || s == "e") return {};
    Word word;
    size_t k = 0;
    while (k <= s.size()) {
        size_t comma = s.find(',', k);
        std::string item = trimmed(s.substr(k, comma == std::string::npos ? comma : comma - k));
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad word \"" + s + "\": expected comma-separated 1-based letters");
        int letter = std::stoi(item);
        if (letter < 1 || letter > rs.n)
            throw InputError("word \"" + s + "\": letter " + std::to_string(letter) +
                             " out of range for rank " + std::to_string(rs.n));
        word.push_back(letter - 1);
        if (comma == std::string::npos) break;
        k = comma + 1;
    }
    return word;
}

std::string serialize_schubert_sum(const SchubertSum& s, CoordMode mode, bool alpha_basis) {
    if (s.is_zero()) return "0\n";
    std::string out;
    for (const auto& [w, c] : s.coeffs)
        out += format_word(w) + ": " + format_rendered(*s.rs, c, mode, alpha_basis) + "\n";
    return out;
}

SchubertSum parse_schubert_sum(const RootSystem& rs, const std::string& text, CoordMode mode) {
    SchubertSum s(rs);
    std::vector<std::string> lines = split_lines(text);
    if (lines.size() == 1 && lines[0] == "0") return s;
    for (const std::string& line : lines) {
        auto [word_text, poly_text] = split_entry(line);
        WeylElement w = parse_word_name(rs, word_text);
        if (s.coeffs.count(w))
            throw InputError("duplicate coefficient line for " + format_word(w));
        s.add(w, parse_polynomial(rs, poly_text, mode));
    }
    return s;
}

std::string serialize_gkm(const GKMClass& h, CoordMode mode, bool alpha_basis) {
    std::string out;
    for (const auto& [v, value] : h.values)
        out += format_word(v) + ": " + format_rendered(*h.rs, value, mode, alpha_basis) + "\n";
    return out;
}

GKMClass parse_gkm(const RootSystem& rs, const std::string& text, CoordMode mode) {
    std::map<WeylElement, DoublePolynomial> parsed;
    int cutoff = 0;
    for (const std::string& line : split_lines(text)) {
        auto [word_text, poly_text] = split_entry(line);
        WeylElement v = parse_word_name(rs, word_text);
        if (parsed.count(v)) throw InputError("duplicate vertex line for " + format_word(v));
        parsed.emplace(v, parse_polynomial(rs, poly_text, mode));
        if (v.length() > cutoff) cutoff = v.length();
    }
    if (parsed.empty()) throw InputError("empty fixed-point table");
    GKMClass h(rs, cutoff);
    if (parsed.size() != h.values.size())
        throw InputError("fixed-point table covers " + std::to_string(parsed.size()) +
                         " vertices; lengths up to " + std::to_string(cutoff) + " need " +
                         std::to_string(h.values.size()));
    for (auto& [v, value] : parsed) h.values.at(v) = std::move(value);
    validate_gkm_edges(h);
    return h;
}

std::string serialize_borel(const RootSystem& rs, const DoublePolynomial& f, CoordMode mode,
                            bool alpha_basis) {
    return format_rendered(rs, f, mode, alpha_basis) + "\n";
}

DoublePolynomial parse_borel(const RootSystem& rs, const std::string& text, CoordMode mode) {
    return parse_polynomial(rs, text, mode);
}

std::string gkm_to_dot(const RootSystem& rs, int cutoff, CoordMode mode) {
    // A graph nobody can render is not worth an hour of enumeration; cap the
    // vertex count far below the generic enumeration limit.
    constexpr size_t kDotVertexCap = 50'000;
    int top = static_cast<int>(rs.positive_roots.size());
    if (cutoff < 0 || cutoff > top) cutoff = top;
    std::vector<WeylElement> vertices = enumerate_up_to_length(rs, cutoff, kDotVertexCap);
    std::set<WeylElement> present(vertices.begin(), vertices.end());

    std::ostringstream out;
    out << "graph gkm_" << rs.type.to_string() << " {\n";
    for (const WeylElement& v : vertices) {
        out << "  \"" << format_word(v) << "\"";
        if (rs.type.family == Family::A) {
            out << " [label=\"" << format_word(v) << " = ";
            bool first = true;
            for (int value : one_line_notation(v)) {
                if (!first && rs.n + 1 > 9) out << ",";
                out << value;
                first = false;
            }
            out << "\"]";
        }
        out << ";\n";
    }
    for (const WeylElement& v : vertices) {
        for (const RootVec& beta : rs.positive_roots) {
            WeylElement u = multiply(reflection(rs, beta), v);
            if (!(v < u) || !present.count(u)) continue;
            QVec beta_q(beta.begin(), beta.end());
            out << "  \"" << format_word(v) << "\" -- \"" << format_word(u) << "\" [label=\""
                << format_weight_t(rs, beta_q, mode) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace schubert
