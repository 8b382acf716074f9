#include <algorithm>
#include <string>

#include "schubert/error.hpp"
#include "schubert/presentations.hpp"

namespace schubert {

namespace {

// Above this group order the seed-and-push-down construction is not
// materialized and per-degree linear systems are used instead.
constexpr long kBggOrderBound = 20'000;

std::string word_text(const WeylElement& w) {
    if (w.is_identity()) return "e";
    std::string out;
    for (int i : w.reduced_word()) out += "s" + std::to_string(i + 1);
    return out;
}

// Type A top-degree seed: the staircase monomial in the permutation
// coordinates z_i = omega_{i-1}(x) - omega_i(x), highest power first.
DoublePolynomial staircase_seed(const RootSystem& rs) {
    DoublePolynomial out = DoublePolynomial::constant(rs.n, rat(1));
    for (int i = 1; i <= rs.n; ++i) {
        LinearForm z = LinearForm::zero(rs.n);
        if (i >= 2) z.x_coeffs[static_cast<size_t>(i - 2)] = rat(1);
        z.x_coeffs[static_cast<size_t>(i - 1)] = rat(-1);
        out = out * z.to_polynomial(rs.n).pow(rs.n + 1 - i);
    }
    return out;
}

// General top-degree seed: product of the negated positive roots in x,
// scaled by 1/|W|.
DoublePolynomial root_product_seed(const RootSystem& rs) {
    DoublePolynomial out = DoublePolynomial::constant(rs.n, rat(1) / rat(rs.weyl_order));
    for (const RootVec& beta : rs.positive_roots) {
        LinearForm form = root_as_x_form(rs, beta);
        for (Rational& c : form.x_coeffs) c = -c;
        out = out * form.to_polynomial(rs.n);
    }
    return out;
}

}  // namespace

const DoublePolynomial& SigmaTable::at(const WeylElement& v) const {
    auto it = sigma.find(v);
    if (it == sigma.end())
        throw InputError("no polynomial representative for " + word_text(v) +
                         "; the table was built for smaller degrees");
    return it->second;
}

SigmaTable sigma_bgg(const RootSystem& rs, std::size_t max_elements) {
    std::vector<WeylElement> all =
        enumerate_up_to_length(rs, static_cast<int>(rs.positive_roots.size()), max_elements);
    WeylElement w0 = longest_element(rs);
    DoublePolynomial seed =
        rs.type.family == Family::A ? staircase_seed(rs) : root_product_seed(rs);

    // derived[u] = D_u(seed), one divided difference per element.
    std::map<WeylElement, DoublePolynomial> derived;
    derived.emplace(identity_element(rs), seed);
    for (const WeylElement& u : all) {
        if (u.is_identity()) continue;
        int first = u.reduced_word()[0];
        WeylElement rest = multiply(simple_reflection(rs, first), u);
        derived.emplace(u, divided_difference_borel(rs, first, derived.at(rest)));
    }

    SigmaTable table;
    table.rs = &rs;
    table.source = SigmaSource::BggTop;
    for (const WeylElement& v : all)
        table.sigma.emplace(v, derived.at(multiply(inverse(v), w0)));
    return table;
}

std::map<WeylElement, DoublePolynomial> sigma_linear_system(const RootSystem& rs, int k) {
    if (k < 0) throw InputError("negative degree");
    std::map<WeylElement, DoublePolynomial> out;
    if (k == 0) {
        out.emplace(identity_element(rs), DoublePolynomial::constant(rs.n, rat(1)));
        return out;
    }

    std::vector<WeylElement> up_to = enumerate_up_to_length(rs, k);
    std::vector<WeylElement> rows;
    for (const WeylElement& u : up_to)
        if (u.length() == k) rows.push_back(u);
    if (rows.empty()) return out;

    // degree-k monomials in x alone, listed in the canonical term order
    std::vector<Exponents> cols;
    Exponents acc(static_cast<size_t>(2 * rs.n), 0);
    auto emit = [&](auto&& self, int var, int remaining) -> void {
        if (var == 2 * rs.n - 1) {
            acc[static_cast<size_t>(var)] = remaining;
            cols.push_back(acc);
            acc[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int p = remaining; p >= 0; --p) {
            acc[static_cast<size_t>(var)] = p;
            self(self, var + 1, remaining - p);
        }
        acc[static_cast<size_t>(var)] = 0;
    };
    emit(emit, rs.n, k);
    std::sort(cols.begin(), cols.end(), TermOrder{});

    size_t m = rows.size();
    size_t nc = cols.size();
    // [ M | I ]: M[r][c] = D_{rows[r]} applied to the monomial cols[c], a
    // rational constant since the operator drops the degree to zero.
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(nc + m, rat(0)));
    for (size_t c = 0; c < nc; ++c) {
        DoublePolynomial mono = DoublePolynomial::monomial(rs.n, cols[c], rat(1));
        std::map<WeylElement, DoublePolynomial> chain;
        chain.emplace(identity_element(rs), mono);
        for (const WeylElement& u : up_to) {
            if (u.is_identity()) continue;
            int first = u.reduced_word()[0];
            WeylElement rest = multiply(simple_reflection(rs, first), u);
            chain.emplace(u, divided_difference_borel(rs, first, chain.at(rest)));
        }
        for (size_t r = 0; r < m; ++r) A[r][c] = chain.at(rows[r]).constant_term();
    }
    for (size_t r = 0; r < m; ++r) A[r][nc + r] = rat(1);

    // reduced row echelon, pivots restricted to the monomial columns
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < nc && r < m; ++c) {
        size_t p = r;
        while (p < m && A[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(A[p], A[r]);
        Rational inv = rat(1) / A[r][c];
        for (size_t j = c; j < nc + m; ++j) A[r][j] *= inv;
        for (size_t other = 0; other < m; ++other) {
            if (other == r || A[other][c] == 0) continue;
            Rational factor = A[other][c];
            for (size_t j = c; j < nc + m; ++j) A[other][j] -= factor * A[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < m)
        throw Error("representative system is rank deficient");

    // basic solution per element: free monomial columns stay at zero
    for (size_t j = 0; j < m; ++j) {
        DoublePolynomial sigma(rs.n);
        for (size_t rr = 0; rr < m; ++rr) {
            const Rational& c = A[rr][nc + j];
            if (c != 0) sigma.add_term(cols[pivot_col[rr]], c);
        }
        out.emplace(rows[j], sigma);
    }
    return out;
}

SigmaSource default_sigma_source(const RootSystem& rs) {
    return rs.weyl_order <= kBggOrderBound ? SigmaSource::BggTop
                                           : SigmaSource::LinearSystem;
}

SigmaTable default_sigma_table(const RootSystem& rs, int max_length) {
    if (default_sigma_source(rs) == SigmaSource::BggTop) return sigma_bgg(rs);
    SigmaTable table;
    table.rs = &rs;
    table.source = SigmaSource::LinearSystem;
    int top = std::min(max_length, static_cast<int>(rs.positive_roots.size()));
    for (int k = 0; k <= top; ++k)
        for (auto& [v, s] : sigma_linear_system(rs, k)) table.sigma.emplace(v, s);
    return table;
}

// ---- length-additive factorizations --------------------------------------

namespace {

using DecompSet = std::set<std::vector<WeylElement>>;

const DecompSet& decompositions(const WeylElement& w, int k,
                                std::map<std::pair<WeylElement, int>, DecompSet>& memo) {
    auto key = std::make_pair(w, k);
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;

    DecompSet result;
    if (k == 0) {
        if (w.is_identity()) result.insert(std::vector<WeylElement>());
    } else if (!w.is_identity() && k <= w.length()) {
        const RootSystem& rs = *w.root_system();
        for (int i = 0; i < rs.n; ++i) {
            if (!w.is_right_descent(i)) continue;
            WeylElement si = simple_reflection(rs, i);
            WeylElement u = multiply(w, si);
            // extend the last factor by s_i
            for (const auto& tuple : decompositions(u, k, memo)) {
                std::vector<WeylElement> longer = tuple;
                WeylElement last = multiply(tuple.back(), si);
                if (last.length() != tuple.back().length() + 1) continue;
                longer.back() = last;
                result.insert(std::move(longer));
            }
            // or start a new factor s_i
            for (const auto& tuple : decompositions(u, k - 1, memo)) {
                std::vector<WeylElement> longer = tuple;
                longer.push_back(si);
                result.insert(std::move(longer));
            }
        }
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

std::set<std::vector<WeylElement>> factor_decompositions(const WeylElement& w, int k) {
    if (k < 0) throw InputError("negative factor count");
    std::map<std::pair<WeylElement, int>, DecompSet> memo;
    return decompositions(w, k, memo);
}

DoublePolynomial double_schubert(const WeylElement& w, const SigmaTable& sig) {
    const RootSystem& rs = *w.root_system();
    if (sig.rs != &rs) throw InputError("representative table for a different root system");
    if (w.is_identity()) return DoublePolynomial::constant(rs.n, rat(1));

    std::map<WeylElement, DoublePolynomial> at_t;
    auto sigma_t = [&](const WeylElement& v) -> const DoublePolynomial& {
        auto it = at_t.find(v);
        if (it == at_t.end()) it = at_t.emplace(v, evaluate_x_to_t(sig.at(v))).first;
        return it->second;
    };

    DoublePolynomial total(rs.n);
    std::map<std::pair<WeylElement, int>, std::set<std::vector<WeylElement>>> memo;
    for (int k = 1; k <= w.length(); ++k) {
        Rational sign = (k % 2 == 1) ? rat(-1) : rat(1);
        for (const auto& tuple : decompositions(w, k, memo)) {
            DoublePolynomial term = DoublePolynomial::constant(rs.n, sign);
            for (int j = 0; j + 1 < k; ++j) term = term * sigma_t(tuple[static_cast<size_t>(j)]);
            const DoublePolynomial& last = sig.at(tuple.back());
            term = term * (sigma_t(tuple.back()) - last);
            total += term;
        }
    }
    return total;
}

}  // namespace schubert
