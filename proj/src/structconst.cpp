// Structure constants of the Schubert basis by the localization recursion and
// by the double polynomial route, with optional persistence of the pieces.

#include "schubert/structconst.hpp"

#include <algorithm>
#include <utility>

#include "schubert/error.hpp"
#include "schubert/serialize.hpp"

namespace schubert {

std::string method_name(Method m) { return m == Method::Gkm ? "gkm" : "borel"; }

namespace {

const RootSystem& common_system(const WeylElement& u, const WeylElement& v) {
    if (u.root_system() != v.root_system())
        throw InputError("factors live in different root systems");
    return *u.root_system();
}

// {w : u <= w, v <= w, l(w) <= l(u)+l(v)}, sorted by (length, word); every
// nonzero coefficient lives here by Bruhat support and degree counting.
std::vector<WeylElement> candidate_set(const WeylElement& u, const WeylElement& v) {
    const RootSystem& rs = *u.root_system();
    std::vector<WeylElement> out;
    for (const WeylElement& w : enumerate_up_to_length(rs, u.length() + v.length()))
        if (bruhat_leq(u, w) && bruhat_leq(v, w)) out.push_back(w);
    return out;
}

CacheKey result_key(const WeylElement& u, const WeylElement& v, Method m) {
    const WeylElement& a = v < u ? v : u;
    const WeylElement& b = v < u ? u : v;
    return CacheKey{kStoreSchemaVersion, u.root_system()->type.to_string(), "structconst",
                    {format_word(a), format_word(b), method_name(m)}};
}

CacheKey sigma_key(const RootSystem& rs, const std::string& tag) {
    return CacheKey{kStoreSchemaVersion, rs.type.to_string(), "sigma", {tag}};
}

std::map<WeylElement, DoublePolynomial> parse_poly_table(const RootSystem& rs,
                                                         const std::string& text) {
    return parse_schubert_sum(rs, text, CoordMode::Canonical).coeffs;
}

std::string serialize_poly_table(const RootSystem& rs,
                                 const std::map<WeylElement, DoublePolynomial>& table) {
    SchubertSum dump(rs);
    dump.coeffs = table;
    return serialize_schubert_sum(dump, CoordMode::Canonical);
}

}  // namespace

StructConstResult multiply_via_gkm(const WeylElement& u, const WeylElement& v,
                                   const Store* store) {
    const RootSystem& rs = common_system(u, v);
    CacheKey rkey = result_key(u, v, Method::Gkm);
    if (store)
        if (auto hit = store->get(rkey))
            return {u, v, parse_schubert_sum(rs, *hit, CoordMode::Canonical), Method::Gkm};

    std::map<std::pair<WeylElement, WeylElement>, DoublePolynomial> memo;
    auto localize = [&](const WeylElement& q, const WeylElement& w) -> const DoublePolynomial& {
        auto found = memo.find({q, w});
        if (found != memo.end()) return found->second;
        CacheKey key{kStoreSchemaVersion, rs.type.to_string(), "localization",
                     {format_word(q), format_word(w)}};
        if (store)
            if (auto hit = store->get(key))
                return memo.emplace(std::pair{q, w}, parse_polynomial(rs, *hit)).first->second;
        DoublePolynomial value = billey_localize(q, w);
        if (store) store->put(key, format_polynomial(value) + "\n");
        return memo.emplace(std::pair{q, w}, std::move(value)).first->second;
    };

    SchubertSum expansion(rs);
    std::vector<std::pair<WeylElement, DoublePolynomial>> solved;
    for (const WeylElement& w : candidate_set(u, v)) {
        DoublePolynomial rhs = localize(u, w) * localize(v, w);
        // same-length candidates restrict to zero at w, so earlier strata
        // suffice
        for (const auto& [q, cq] : solved)
            if (q.length() < w.length()) rhs -= cq * localize(q, w);
        if (rhs.is_zero()) continue;
        for (const LinearForm& factor : billey_self_factors(w)) rhs = exact_divide(rhs, factor);
        solved.emplace_back(w, rhs);
        expansion.add(w, rhs);
    }
    if (store) store->put(rkey, serialize_schubert_sum(expansion, CoordMode::Canonical));
    return {u, v, expansion, Method::Gkm};
}

StructConstResult multiply_via_borel(const WeylElement& u, const WeylElement& v,
                                     const Store* store) {
    const RootSystem& rs = common_system(u, v);
    CacheKey rkey = result_key(u, v, Method::Borel);
    if (store)
        if (auto hit = store->get(rkey))
            return {u, v, parse_schubert_sum(rs, *hit, CoordMode::Canonical), Method::Borel};

    SigmaTable sig = sigma_table_cached(rs, std::max(u.length(), v.length()), store);
    DoublePolynomial su = double_schubert_cached(u, sig, store);
    DoublePolynomial sv = u == v ? su : double_schubert_cached(v, sig, store);
    SchubertSum expansion = borel_to_schubert(rs, su * sv);
    if (store) store->put(rkey, serialize_schubert_sum(expansion, CoordMode::Canonical));
    return {u, v, expansion, Method::Borel};
}

PositivityReport check_graham_positivity(const StructConstResult& r) {
    const RootSystem& rs = *r.u.root_system();
    // t_j -> sum_i inverse-cartan[i][j] t_i turns fundamental-weight
    // coordinates into simple-root coordinates.
    std::map<int, DoublePolynomial> images;
    for (int j = 0; j < rs.n; ++j) {
        DoublePolynomial image(rs.n);
        for (int i = 0; i < rs.n; ++i)
            image += DoublePolynomial::t_var(rs.n, i) * rs.cartan_inverse[i][j];
        images[j] = image;
    }
    PositivityReport report;
    for (const auto& [w, c] : r.expansion.coeffs) {
        DoublePolynomial in_alpha = c.substitute(images);
        for (const auto& [exps, coeff] : in_alpha.terms()) {
            if (coeff < 0) {
                report.nonnegative = false;
                report.violations.push_back(format_word(w) + ": " +
                                            format_polynomial_alpha(rs, c));
                break;
            }
        }
    }
    return report;
}

std::map<WeylElement, long> specialize_ordinary(const StructConstResult& r) {
    std::map<WeylElement, long> out;
    for (const auto& [w, c] : r.expansion.coeffs) {
        Rational c0 = c.constant_term();
        if (c0 == 0) continue;
        if (c0.get_den() != 1 || c0 < 0)
            throw Error("constant coefficient of " + format_word(w) +
                        " is not a nonnegative integer: " + c0.get_str());
        out.emplace(w, c0.get_num().get_si());
    }
    return out;
}

SigmaTable sigma_table_cached(const RootSystem& rs, int max_length, const Store* store) {
    if (!store) return default_sigma_table(rs, max_length);
    if (default_sigma_source(rs) == SigmaSource::BggTop) {
        CacheKey key = sigma_key(rs, "full");
        if (auto hit = store->get(key))
            return SigmaTable{&rs, SigmaSource::BggTop, parse_poly_table(rs, *hit)};
        SigmaTable table = sigma_bgg(rs);
        store->put(key, serialize_poly_table(rs, table.sigma));
        return table;
    }
    SigmaTable table{&rs, SigmaSource::LinearSystem, {}};
    int top = std::min(max_length, static_cast<int>(rs.positive_roots.size()));
    for (int k = 0; k <= top; ++k) {
        CacheKey key = sigma_key(rs, "k" + std::to_string(k));
        std::map<WeylElement, DoublePolynomial> part;
        if (auto hit = store->get(key)) {
            part = parse_poly_table(rs, *hit);
        } else {
            part = sigma_linear_system(rs, k);
            store->put(key, serialize_poly_table(rs, part));
        }
        table.sigma.insert(part.begin(), part.end());
    }
    return table;
}

DoublePolynomial double_schubert_cached(const WeylElement& w, const SigmaTable& sig,
                                        const Store* store) {
    if (!store) return double_schubert(w, sig);
    const RootSystem& rs = *w.root_system();
    CacheKey key{kStoreSchemaVersion, rs.type.to_string(), "double-schubert",
                 {format_word(w)}};
    if (auto hit = store->get(key)) return parse_polynomial(rs, *hit);
    DoublePolynomial s = double_schubert(w, sig);
    store->put(key, format_polynomial(s) + "\n");
    return s;
}

}  // namespace schubert
