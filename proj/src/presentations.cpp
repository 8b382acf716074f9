#include "schubert/presentations.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

namespace {

void require_system(const RootSystem* rs) {
    if (rs == nullptr) throw InputError("class has no root system attached");
}

void require_letter(const RootSystem& rs, int i) {
    if (i < 0 || i >= rs.n) throw InputError("simple-reflection index out of range");
}

void require_reduced(const RootSystem& rs, const Word& word) {
    for (int i : word) require_letter(rs, i);
    if (from_word(rs, word).length() != static_cast<int>(word.size()))
        throw InputError("divided-difference word is not reduced");
}

int longest_length(const RootSystem& rs) {
    return static_cast<int>(rs.positive_roots.size());
}

RootVec simple_root_vec(int n, int i) {
    RootVec e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    return e;
}

RootVec negated(RootVec beta) {
    for (long& c : beta) c = -c;
    return beta;
}

}  // namespace

// ---- SchubertSum ---------------------------------------------------------

void SchubertSum::add(const WeylElement& w, const DoublePolynomial& c) {
    require_system(rs);
    if (w.root_system() != rs) throw InputError("basis element from a different root system");
    if (c.is_zero()) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

bool SchubertSum::coeffs_t_only() const {
    for (const auto& [w, c] : coeffs)
        if (c.x_degree() > 0) return false;
    return true;
}

int SchubertSum::total_degree() const {
    int deg = -1;
    for (const auto& [w, c] : coeffs)
        deg = std::max(deg, w.length() + c.total_degree());
    return deg;
}

bool SchubertSum::operator==(const SchubertSum& other) const {
    return coeffs == other.coeffs;
}

SchubertSum schubert_basis_class(const RootSystem& rs, const WeylElement& w) {
    SchubertSum s(rs);
    s.add(w, DoublePolynomial::constant(rs.n, rat(1)));
    return s;
}

// ---- GKMClass ------------------------------------------------------------

GKMClass::GKMClass(const RootSystem& r, int cutoff_len) : rs(&r) {
    int top = longest_length(r);
    cutoff = (cutoff_len < 0 || cutoff_len > top) ? top : cutoff_len;
    for (const WeylElement& v : gkm_vertices(r, cutoff))
        values.emplace(v, DoublePolynomial(r.n));
}

bool GKMClass::full() const {
    require_system(rs);
    return cutoff >= longest_length(*rs);
}

bool GKMClass::is_zero() const {
    for (const auto& [v, h] : values)
        if (!h.is_zero()) return false;
    return true;
}

int GKMClass::max_value_degree() const {
    int deg = -1;
    for (const auto& [v, h] : values) deg = std::max(deg, h.total_degree());
    return deg;
}

bool GKMClass::operator==(const GKMClass& other) const {
    return cutoff == other.cutoff && values == other.values;
}

std::vector<WeylElement> gkm_vertices(const RootSystem& rs, int cutoff) {
    int top = longest_length(rs);
    if (cutoff < 0 || cutoff > top) cutoff = top;
    return enumerate_up_to_length(rs, cutoff);
}

void validate_gkm_edges(const GKMClass& h) {
    require_system(h.rs);
    const RootSystem& rs = *h.rs;
    std::vector<WeylElement> refl;
    refl.reserve(rs.positive_roots.size());
    for (const RootVec& beta : rs.positive_roots) refl.push_back(reflection(rs, beta));
    for (const auto& [v, hv] : h.values) {
        for (size_t b = 0; b < refl.size(); ++b) {
            WeylElement u = multiply(refl[b], v);
            auto it = h.values.find(u);
            if (it == h.values.end() || !(v < u)) continue;
            DoublePolynomial diff = hv - it->second;
            if (diff.is_zero()) continue;
            try {
                exact_divide(diff, root_as_t_form(rs, rs.positive_roots[b]));
            } catch (const DivisionError&) {
                throw InputError("not a valid fixed-point class: values at two "
                                 "reflection-related vertices do not differ by a "
                                 "multiple of the connecting root");
            }
        }
    }
}

// ---- divided differences -------------------------------------------------

GKMClass dd_gkm(int i, const GKMClass& h) {
    require_system(h.rs);
    const RootSystem& rs = *h.rs;
    require_letter(rs, i);
    if (!h.full() && h.cutoff < 1)
        throw InputError("vertex range too small for a divided difference");
    GKMClass out(rs, h.full() ? h.cutoff : h.cutoff - 1);
    WeylElement si = simple_reflection(rs, i);
    RootVec alpha_i = simple_root_vec(rs.n, i);
    for (auto& [v, slot] : out.values) {
        const DoublePolynomial& a = h.values.at(v);
        const DoublePolynomial& b = h.values.at(multiply(v, si));
        DoublePolynomial diff = a - b;
        if (diff.is_zero()) continue;
        LinearForm denom = root_as_t_form(rs, negated(v.apply_root(alpha_i)));
        slot = exact_divide(diff, denom);
    }
    return out;
}

SchubertSum dd_schubert(int i, const SchubertSum& s) {
    require_system(s.rs);
    const RootSystem& rs = *s.rs;
    require_letter(rs, i);
    WeylElement si = simple_reflection(rs, i);
    SchubertSum out(rs);
    for (const auto& [w, c] : s.coeffs)
        if (w.is_right_descent(i)) out.add(multiply(w, si), c);
    return out;
}

GKMClass dd_word(const std::vector<int>& word, const GKMClass& h) {
    require_system(h.rs);
    require_reduced(*h.rs, word);
    GKMClass out = h;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = dd_gkm(*it, out);
    return out;
}

DoublePolynomial dd_word(const RootSystem& rs, const std::vector<int>& word,
                         const DoublePolynomial& f) {
    require_reduced(rs, word);
    DoublePolynomial out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = divided_difference_borel(rs, *it, out);
    return out;
}

SchubertSum dd_word(const std::vector<int>& word, const SchubertSum& s) {
    require_system(s.rs);
    require_reduced(*s.rs, word);
    SchubertSum out = s;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = dd_schubert(*it, out);
    return out;
}

// ---- Weyl group action ---------------------------------------------------

GKMClass weyl_act_gkm(const WeylElement& w, const GKMClass& h) {
    require_system(h.rs);
    const RootSystem& rs = *h.rs;
    if (w.root_system() != &rs) throw InputError("element from a different root system");
    if (w.is_identity()) return h;
    int cut = h.cutoff;
    if (!h.full()) {
        cut = h.cutoff - w.length();
        if (cut < 0) throw InputError("vertex range too small for this group action");
    }
    GKMClass out(rs, cut);
    for (auto& [v, slot] : out.values) slot = h.values.at(multiply(v, w));
    return out;
}

SchubertSum weyl_act_schubert(int i, const SchubertSum& s) {
    require_system(s.rs);
    const RootSystem& rs = *s.rs;
    require_letter(rs, i);
    QVec lambda(static_cast<size_t>(rs.n), rat(0));
    lambda[static_cast<size_t>(i)] = rat(1);
    SchubertSum out = s;
    for (const auto& [w, c] : chevalley_multiply(rs, lambda, dd_schubert(i, s)).coeffs)
        out.add(w, c);
    return out;
}

SchubertSum weyl_act_schubert(const WeylElement& w, const SchubertSum& s) {
    require_system(s.rs);
    if (w.root_system() != s.rs) throw InputError("element from a different root system");
    SchubertSum out = s;
    const Word& word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = weyl_act_schubert(*it, out);
    return out;
}

// ---- Chevalley rule ------------------------------------------------------

SchubertSum chevalley_multiply(const RootSystem& rs, const QVec& lambda_alpha,
                               const SchubertSum& s) {
    if (s.rs != &rs) throw InputError("class from a different root system");
    if (lambda_alpha.size() != static_cast<size_t>(rs.n))
        throw InputError("weight has wrong rank");
    std::vector<WeylElement> refl;
    std::vector<Rational> pairing;
    for (const RootVec& beta : rs.positive_roots) {
        refl.push_back(reflection(rs, beta));
        pairing.push_back(rs.coroot_pair(lambda_alpha, beta));
    }
    SchubertSum out(rs);
    for (const auto& [v, c] : s.coeffs) {
        LinearForm diag = weight_as_t_form(rs, v.apply(lambda_alpha));
        out.add(v, diag.to_polynomial(rs.n) * c);
        for (size_t b = 0; b < refl.size(); ++b) {
            if (pairing[b] == 0) continue;
            WeylElement vs = multiply(v, refl[b]);
            if (vs.length() != v.length() + 1) continue;
            out.add(vs, c * (-pairing[b]));
        }
    }
    return out;
}

// ---- localization --------------------------------------------------------

namespace {

// Roots v(alpha) turned positive by successive letters of a reduced word:
// factor a is (s_{j_1} ... s_{j_{a-1}})(alpha_{j_a}).
std::vector<RootVec> prefix_roots(const RootSystem& rs, const Word& word) {
    std::vector<RootVec> roots;
    roots.reserve(word.size());
    WeylElement p = identity_element(rs);
    for (int j : word) {
        roots.push_back(p.apply_root(simple_root_vec(rs.n, j)));
        p = multiply(p, simple_reflection(rs, j));
    }
    return roots;
}

void billey_search(const Word& word, const std::vector<DoublePolynomial>& factor,
                   const std::vector<WeylElement>& simple, const WeylElement& target,
                   size_t pos, const WeylElement& cur, int chosen,
                   const DoublePolynomial& product, DoublePolynomial& result) {
    int k = target.length();
    if (chosen == k) {
        if (cur == target) result += product;
        return;
    }
    if (static_cast<int>(word.size() - pos) < k - chosen) return;
    // take word[pos]; only subwords reduced at every step can reach target
    WeylElement next = multiply(cur, simple[static_cast<size_t>(word[pos])]);
    if (next.length() == cur.length() + 1)
        billey_search(word, factor, simple, target, pos + 1, next, chosen + 1,
                      product * factor[pos], result);
    billey_search(word, factor, simple, target, pos + 1, cur, chosen, product, result);
}

}  // namespace

DoublePolynomial billey_localize(const WeylElement& w, const WeylElement& v) {
    const RootSystem* rsp = w.root_system();
    if (rsp != v.root_system()) throw InputError("elements from different root systems");
    const RootSystem& rs = *rsp;
    DoublePolynomial result(rs.n);
    if (w.length() > v.length()) return result;
    if (w.is_identity()) return DoublePolynomial::constant(rs.n, rat(1));
    const Word& word = v.reduced_word();
    std::vector<DoublePolynomial> factor;
    for (const RootVec& beta : prefix_roots(rs, word))
        factor.push_back(root_as_t_form(rs, beta).to_polynomial(rs.n));
    std::vector<WeylElement> simple;
    for (int i = 0; i < rs.n; ++i) simple.push_back(simple_reflection(rs, i));
    billey_search(word, factor, simple, w, 0, identity_element(rs), 0,
                  DoublePolynomial::constant(rs.n, rat(1)), result);
    return result;
}

std::vector<LinearForm> billey_self_factors(const WeylElement& w) {
    const RootSystem& rs = *w.root_system();
    std::vector<LinearForm> out;
    for (const RootVec& beta : prefix_roots(rs, w.reduced_word()))
        out.push_back(root_as_t_form(rs, beta));
    return out;
}

// ---- conversions ---------------------------------------------------------

GKMClass borel_to_gkm(const RootSystem& rs, const DoublePolynomial& f, int cutoff) {
    if (f.rank() != rs.n) throw InputError("polynomial has wrong rank");
    GKMClass out(rs, cutoff);
    for (auto& [v, slot] : out.values)
        slot = evaluate_x_to_t(weyl_act_x(rs, v, f));
    return out;
}

GKMClass schubert_to_gkm(const SchubertSum& s, int cutoff) {
    require_system(s.rs);
    if (!s.coeffs_t_only())
        throw InputError("Schubert coefficients must be polynomials in t only");
    const RootSystem& rs = *s.rs;
    GKMClass out(rs, cutoff);
    for (auto& [v, slot] : out.values)
        for (const auto& [w, c] : s.coeffs) slot += c * billey_localize(w, v);
    return out;
}

SchubertSum gkm_to_schubert(const GKMClass& h) {
    require_system(h.rs);
    const RootSystem& rs = *h.rs;
    SchubertSum out(rs);
    int deg = h.max_value_degree();
    if (deg < 0) return out;
    if (!h.full() && h.cutoff < deg)
        throw InputError("vertex range too small: the class has degree " +
                         std::to_string(deg) + " but values stop at length " +
                         std::to_string(h.cutoff));
    int top = std::min(deg, h.cutoff);
    WeylElement e = identity_element(rs);
    // One divided difference per element: D_w = D_{first letter} o D_{rest},
    // where rest = s_first * w is shorter and already computed.
    std::map<WeylElement, GKMClass> chain;
    chain.emplace(e, h);
    out.add(e, h.values.at(e));
    for (const WeylElement& u : enumerate_up_to_length(rs, top)) {
        if (u.is_identity()) continue;
        int first = u.reduced_word()[0];
        WeylElement rest = multiply(simple_reflection(rs, first), u);
        const GKMClass& derived = chain.emplace(u, dd_gkm(first, chain.at(rest))).first->second;
        out.add(u, derived.values.at(e));
    }
    return out;
}

SchubertSum borel_to_schubert(const RootSystem& rs, const DoublePolynomial& f) {
    if (f.rank() != rs.n) throw InputError("polynomial has wrong rank");
    SchubertSum out(rs);
    if (f.is_zero()) return out;
    int top = f.x_degree();
    WeylElement e = identity_element(rs);
    std::map<WeylElement, DoublePolynomial> chain;
    chain.emplace(e, f);
    out.add(e, evaluate_x_to_t(f));
    for (const WeylElement& u : enumerate_up_to_length(rs, top)) {
        if (u.is_identity()) continue;
        int first = u.reduced_word()[0];
        WeylElement rest = multiply(simple_reflection(rs, first), u);
        const DoublePolynomial& derived =
            chain.emplace(u, divided_difference_borel(rs, first, chain.at(rest)))
                .first->second;
        out.add(u, evaluate_x_to_t(derived));
    }
    return out;
}

DoublePolynomial schubert_to_borel(const SchubertSum& s, const SigmaTable& sig) {
    require_system(s.rs);
    if (sig.rs != s.rs) throw InputError("representative table for a different root system");
    if (!s.coeffs_t_only())
        throw InputError("Schubert coefficients must be polynomials in t only");
    DoublePolynomial out(s.rs->n);
    for (const auto& [w, c] : s.coeffs) out += c * double_schubert(w, sig);
    return out;
}

DoublePolynomial gkm_to_borel(const GKMClass& h, const SigmaTable& sig) {
    return schubert_to_borel(gkm_to_schubert(h), sig);
}

}  // namespace schubert
