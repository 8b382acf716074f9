// Polynomial expression parsing and the canonical text renderings, including
// the type-A sum-zero coordinate adapter and simple-root-basis display.

#include "schubert/expr.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

struct Token {
    enum Kind { Num, Ident, Op, End } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < s.size()) {
        char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) { ++k; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = k;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Num, s.substr(k, j - k)});
            k = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = k;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Ident, s.substr(k, j - k)});
            k = j;
            continue;
        }
        if (c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')' || c == '/') {
            out.push_back({Token::Op, std::string(1, c)});
            ++k;
            continue;
        }
        throw InputError(std::string("unexpected character '") + c + "' in expression");
    }
    out.push_back({Token::End, ""});
    return out;
}

class Parser {
public:
    Parser(const RootSystem& rs, const std::string& text, CoordMode mode)
        : rs_(rs), mode_(mode), toks_(tokenize(text)) {
        if (mode == CoordMode::TypeAZ && rs.type.family != Family::A)
            throw InputError("z coordinates require type A");
    }

    DoublePolynomial parse() {
        DoublePolynomial p = expr();
        if (peek().kind != Token::End) throw InputError("trailing input in expression");
        return p;
    }

private:
    const RootSystem& rs_;
    CoordMode mode_;
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool take_op(const std::string& t) {
        if (peek().kind == Token::Op && peek().text == t) { ++pos_; return true; }
        return false;
    }

    DoublePolynomial expr() {
        bool neg = false;
        if (take_op("-")) neg = true;
        else take_op("+");
        DoublePolynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (take_op("+")) acc += term();
            else if (take_op("-")) acc -= term();
            else break;
        }
        return acc;
    }

    DoublePolynomial term() {
        DoublePolynomial acc = factor();
        while (take_op("*")) acc = acc * factor();
        return acc;
    }

    DoublePolynomial factor() {
        DoublePolynomial base = atom();
        if (take_op("^")) {
            Token t = take();
            if (t.kind != Token::Num) throw InputError("exponent must be a number");
            base = base.pow(std::stoi(t.text));
        }
        return base;
    }

    DoublePolynomial atom() {
        if (take_op("-")) return -atom();
        if (take_op("(")) {
            DoublePolynomial p = expr();
            if (!take_op(")")) throw InputError("missing ')'");
            return p;
        }
        Token t = take();
        if (t.kind == Token::Num) {
            Rational q(t.text);
            if (take_op("/")) {
                Token d = take();
                if (d.kind != Token::Num) throw InputError("bad rational literal");
                Rational den(d.text);
                if (den == 0) throw InputError("zero denominator");
                q /= den;
            }
            return DoublePolynomial::constant(rs_.n, q);
        }
        if (t.kind == Token::Ident) return variable(t.text);
        throw InputError("unexpected token '" + t.text + "' in expression");
    }

    DoublePolynomial variable(const std::string& name) {
        size_t split = 0;
        while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split])))
            ++split;
        std::string prefix = name.substr(0, split);
        if (split == name.size()) throw InputError("variable '" + name + "' has no index");
        int idx = std::stoi(name.substr(split));
        bool t_family;
        if (prefix == "t") t_family = true;
        else if (prefix == "x") t_family = false;
        else if (prefix == "z" && mode_ == CoordMode::TypeAZ) t_family = false;
        else throw InputError("unknown variable '" + name + "'");

        int n = rs_.n;
        if (mode_ == CoordMode::Canonical) {
            if (idx < 1 || idx > n) throw InputError("variable index out of range: " + name);
            return t_family ? DoublePolynomial::t_var(n, idx - 1)
                            : DoublePolynomial::x_var(n, idx - 1);
        }
        // TypeAZ: z_i = omega_{i-1} - omega_i, omega_0 = omega_{n+1} = 0.
        if (idx < 1 || idx > n + 1)
            throw InputError("variable index out of range: " + name);
        DoublePolynomial p(n);
        if (idx - 2 >= 0) {
            Exponents e(2 * n, 0);
            e[(t_family ? 0 : n) + idx - 2] = 1;
            p.add_term(e, 1);
        }
        if (idx - 1 < n) {
            Exponents e(2 * n, 0);
            e[(t_family ? 0 : n) + idx - 1] = 1;
            p.add_term(e, -1);
        }
        return p;
    }
};

std::string format_with_names(const DoublePolynomial& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
            first = false;
        } else {
            if (a < 0) { out << " - "; a = -a; }
            else out << " + ";
        }
        std::ostringstream mono;
        bool any_var = false;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (any_var) mono << "*";
            mono << names[k];
            if (e[k] > 1) mono << "^" << e[k];
            any_var = true;
        }
        if (!any_var) out << to_string(a);
        else {
            if (a != 1) out << to_string(a) << "*";
            out << mono.str();
        }
    }
    return out.str();
}

std::vector<std::string> canonical_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace

DoublePolynomial parse_polynomial(const RootSystem& rs, const std::string& text,
                                  CoordMode mode) {
    return Parser(rs, text, mode).parse();
}

std::string format_polynomial(const DoublePolynomial& f) {
    return format_with_names(f, canonical_names(f.rank()));
}

std::string format_polynomial_za(const RootSystem& rs, const DoublePolynomial& f) {
    if (rs.type.family != Family::A)
        throw InputError("z coordinates require type A");
    int n = rs.n;
    // omega_j = -(z_1 + ... + z_j): the image is free of index n+1.
    DoublePolynomial out(n + 1);
    out += DoublePolynomial::constant(n + 1, 0);
    std::map<int, std::vector<DoublePolynomial>> powers;
    auto image_power = [&](bool t_family, int j, int m) -> const DoublePolynomial& {
        int key = (t_family ? 0 : n) + j;
        auto it = powers.find(key);
        if (it == powers.end()) {
            DoublePolynomial img(n + 1);
            for (int k = 0; k <= j; ++k) {
                Exponents e(2 * (n + 1), 0);
                e[(t_family ? 0 : n + 1) + k] = 1;
                img.add_term(e, -1);
            }
            it = powers.emplace(key, std::vector<DoublePolynomial>{
                                         DoublePolynomial::constant(n + 1, 1), img})
                     .first;
        }
        auto& ps = it->second;
        while (static_cast<int>(ps.size()) <= m) ps.push_back(ps.back() * ps[1]);
        return ps[m];
    };
    DoublePolynomial acc(n + 1);
    for (const auto& [e, c] : f.terms()) {
        DoublePolynomial term = DoublePolynomial::constant(n + 1, c);
        for (int j = 0; j < n; ++j) {
            if (e[j] != 0) term = term * image_power(true, j, e[j]);
            if (e[n + j] != 0) term = term * image_power(false, j, e[n + j]);
        }
        acc += term;
    }
    std::vector<std::string> names;
    for (int i = 1; i <= n + 1; ++i) names.push_back("t" + std::to_string(i));
    for (int i = 1; i <= n + 1; ++i) names.push_back("x" + std::to_string(i));
    return format_with_names(acc, names);
}

std::string format_polynomial_alpha(const RootSystem& rs, const DoublePolynomial& f) {
    int n = rs.n;
    // omega_j = sum_i cartan_inverse[i][j] alpha_i, applied per family.
    std::map<int, DoublePolynomial> images;
    for (int j = 0; j < n; ++j) {
        DoublePolynomial timg(n), ximg(n);
        for (int i = 0; i < n; ++i) {
            const Rational& c = rs.cartan_inverse[i][j];
            if (c == 0) continue;
            Exponents et(2 * n, 0), ex(2 * n, 0);
            et[i] = 1;
            ex[n + i] = 1;
            timg.add_term(et, c);
            ximg.add_term(ex, c);
        }
        images.emplace(j, std::move(timg));
        images.emplace(n + j, std::move(ximg));
    }
    DoublePolynomial conv = f.substitute(images);
    bool has_t = conv.t_degree() > 0, has_x = conv.x_degree() > 0;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back((has_t && has_x ? "at" : "a") + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        names.push_back((has_t && has_x ? "ax" : "a") + std::to_string(i));
    return format_with_names(conv, names);
}

std::string format_weight_t(const RootSystem& rs, const QVec& lambda_alpha, CoordMode mode) {
    DoublePolynomial p = weight_as_t_form(rs, lambda_alpha).to_polynomial(rs.n);
    return mode == CoordMode::TypeAZ ? format_polynomial_za(rs, p) : format_polynomial(p);
}

std::string format_rendered(const RootSystem& rs, const DoublePolynomial& f, CoordMode mode,
                            bool alpha_basis) {
    if (alpha_basis) return format_polynomial_alpha(rs, f);
    if (mode == CoordMode::TypeAZ) return format_polynomial_za(rs, f);
    return format_polynomial(f);
}

}  // namespace schubert
