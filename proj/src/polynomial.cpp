// Sparse exact-rational polynomials in t_1..t_n, x_1..x_n with the operations
// the cohomology presentations are built on: Weyl substitution on x, exact
// division by linear forms, divided differences.

#include "schubert/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

DoublePolynomial DoublePolynomial::constant(int n, const Rational& c) {
    DoublePolynomial p(n);
    p.add_term(Exponents(2 * n, 0), c);
    return p;
}

DoublePolynomial DoublePolynomial::t_var(int n, int i) {
    DoublePolynomial p(n);
    Exponents e(2 * n, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

DoublePolynomial DoublePolynomial::x_var(int n, int i) {
    DoublePolynomial p(n);
    Exponents e(2 * n, 0);
    e[n + i] = 1;
    p.add_term(e, 1);
    return p;
}

DoublePolynomial DoublePolynomial::monomial(int n, const Exponents& e, const Rational& c) {
    DoublePolynomial p(n);
    p.add_term(e, c);
    return p;
}

int DoublePolynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int DoublePolynomial::x_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin() + n_, e.end(), 0));
    return d;
}

int DoublePolynomial::t_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.begin() + n_, 0));
    return d;
}

bool DoublePolynomial::is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
        int de = std::accumulate(e.begin(), e.end(), 0);
        if (d == -2) d = de;
        else if (d != de) return false;
    }
    return true;
}

Rational DoublePolynomial::constant_term() const {
    Exponents zero(2 * n_, 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DoublePolynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != 2 * n_)
        throw InputError("exponent vector length mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DoublePolynomial DoublePolynomial::operator-() const {
    DoublePolynomial r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

DoublePolynomial DoublePolynomial::operator+(const DoublePolynomial& o) const {
    DoublePolynomial r = *this;
    r += o;
    return r;
}

DoublePolynomial DoublePolynomial::operator-(const DoublePolynomial& o) const {
    DoublePolynomial r = *this;
    r -= o;
    return r;
}

DoublePolynomial& DoublePolynomial::operator+=(const DoublePolynomial& o) {
    if (n_ != o.n_ && !o.terms_.empty() && !terms_.empty())
        throw InputError("polynomial rank mismatch");
    if (terms_.empty()) n_ = o.n_ ? o.n_ : n_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

DoublePolynomial& DoublePolynomial::operator-=(const DoublePolynomial& o) {
    if (n_ != o.n_ && !o.terms_.empty() && !terms_.empty())
        throw InputError("polynomial rank mismatch");
    if (terms_.empty()) n_ = o.n_ ? o.n_ : n_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

DoublePolynomial DoublePolynomial::operator*(const DoublePolynomial& o) const {
    if (n_ != o.n_) throw InputError("polynomial rank mismatch");
    DoublePolynomial r(n_);
    Exponents e(2 * n_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < 2 * n_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

DoublePolynomial DoublePolynomial::operator*(const Rational& c) const {
    DoublePolynomial r(n_);
    if (c == 0) return r;
    for (const auto& [e, q] : terms_) r.terms_.emplace(e, q * c);
    return r;
}

DoublePolynomial DoublePolynomial::pow(int k) const {
    if (k < 0) throw InputError("negative power");
    DoublePolynomial r = constant(n_, 1);
    for (int j = 0; j < k; ++j) r = r * *this;
    return r;
}

DoublePolynomial DoublePolynomial::substitute(
    const std::map<int, DoublePolynomial>& images) const {
    DoublePolynomial out(n_);
    // Memoize powers of each image across terms.
    std::map<int, std::vector<DoublePolynomial>> powers;
    for (const auto& [v, img] : images)
        powers[v] = {DoublePolynomial::constant(n_, 1), img};
    auto power_of = [&](int v, int m) -> const DoublePolynomial& {
        auto& ps = powers[v];
        while (static_cast<int>(ps.size()) <= m) ps.push_back(ps.back() * ps[1]);
        return ps[m];
    };
    for (const auto& [e, c] : terms_) {
        DoublePolynomial term(n_);
        Exponents rest = e;
        bool touched = false;
        for (const auto& [v, img] : images) {
            if (e[v] == 0) continue;
            rest[v] = 0;
            const DoublePolynomial& p = power_of(v, e[v]);
            term = touched ? term * p : p;
            touched = true;
        }
        DoublePolynomial base = monomial(n_, rest, c);
        out += touched ? base * term : base;
    }
    return out;
}

LinearForm LinearForm::zero(int n) {
    return LinearForm{QVec(n, Rational(0)), QVec(n, Rational(0))};
}

bool LinearForm::is_zero() const {
    auto nz = [](const Rational& q) { return q != 0; };
    return std::none_of(t_coeffs.begin(), t_coeffs.end(), nz) &&
           std::none_of(x_coeffs.begin(), x_coeffs.end(), nz);
}

DoublePolynomial LinearForm::to_polynomial(int n) const {
    DoublePolynomial p(n);
    for (int i = 0; i < n; ++i) {
        if (t_coeffs[i] != 0) {
            Exponents e(2 * n, 0);
            e[i] = 1;
            p.add_term(e, t_coeffs[i]);
        }
        if (x_coeffs[i] != 0) {
            Exponents e(2 * n, 0);
            e[n + i] = 1;
            p.add_term(e, x_coeffs[i]);
        }
    }
    return p;
}

LinearForm weight_as_t_form(const RootSystem& rs, const QVec& lambda_alpha) {
    LinearForm f = LinearForm::zero(rs.n);
    f.t_coeffs = rs.to_fundamental_coords(lambda_alpha);
    return f;
}

LinearForm weight_as_x_form(const RootSystem& rs, const QVec& lambda_alpha) {
    LinearForm f = LinearForm::zero(rs.n);
    f.x_coeffs = rs.to_fundamental_coords(lambda_alpha);
    return f;
}

LinearForm root_as_t_form(const RootSystem& rs, const RootVec& beta) {
    return weight_as_t_form(rs, QVec(beta.begin(), beta.end()));
}

LinearForm root_as_x_form(const RootSystem& rs, const RootVec& beta) {
    return weight_as_x_form(rs, QVec(beta.begin(), beta.end()));
}

DoublePolynomial weyl_act_x(const RootSystem& rs, const WeylElement& w,
                            const DoublePolynomial& f) {
    if (f.rank() != rs.n) throw InputError("polynomial rank does not match root system");
    if (w.is_identity()) return f;
    std::map<int, DoublePolynomial> images;
    for (int j = 0; j < rs.n; ++j) {
        QVec img = w.apply(rs.fundamental_weights[j]);
        QVec m = rs.to_fundamental_coords(img);
        DoublePolynomial p(rs.n);
        for (int i = 0; i < rs.n; ++i) {
            if (m[i] == 0) continue;
            Exponents e(2 * rs.n, 0);
            e[rs.n + i] = 1;
            p.add_term(e, m[i]);
        }
        images.emplace(rs.n + j, std::move(p));
    }
    return f.substitute(images);
}

DoublePolynomial evaluate_x_to_t(const DoublePolynomial& f) {
    int n = f.rank();
    DoublePolynomial r(n);
    Exponents e(2 * n);
    for (const auto& [ef, c] : f.terms()) {
        for (int i = 0; i < n; ++i) {
            e[i] = ef[i] + ef[n + i];
            e[n + i] = 0;
        }
        r.add_term(e, c);
    }
    return r;
}

DoublePolynomial exact_divide(const DoublePolynomial& f, const LinearForm& d) {
    if (d.is_zero()) throw DivisionError("division by the zero form");
    int n = f.rank();
    if (f.is_zero()) return DoublePolynomial(n);
    // Pivot: first variable with a nonzero coefficient in d.
    int pivot = -1;
    Rational lead;
    for (int k = 0; k < 2 * n; ++k) {
        const Rational& c = k < n ? d.t_coeffs[k] : d.x_coeffs[k - n];
        if (c != 0) { pivot = k; lead = c; break; }
    }
    DoublePolynomial divisor = d.to_polynomial(n);
    DoublePolynomial q(n), r = f;
    while (!r.is_zero()) {
        int m = 0;
        for (const auto& [e, c] : r.terms()) m = std::max(m, e[pivot]);
        if (m == 0) {
            std::ostringstream msg;
            msg << "inexact division: remainder with " << r.term_count() << " term(s)";
            throw DivisionError(msg.str());
        }
        // Top stratum in the pivot variable, with the pivot power stripped.
        DoublePolynomial top(n);
        for (const auto& [e, c] : r.terms()) {
            if (e[pivot] != m) continue;
            Exponents es = e;
            es[pivot] = 0;
            top.add_term(es, c / lead);
        }
        Exponents shift(2 * n, 0);
        shift[pivot] = m - 1;
        DoublePolynomial qterm = top * DoublePolynomial::monomial(n, shift, 1);
        q += qterm;
        r -= qterm * divisor;
    }
    return q;
}

DoublePolynomial divided_difference_borel(const RootSystem& rs, int i,
                                          const DoublePolynomial& f) {
    if (i < 0 || i >= rs.n) throw InputError("simple-root index out of range");
    // s_i changes only x_i: x_i -> x_i - alpha_i(x).
    DoublePolynomial xi = DoublePolynomial::x_var(rs.n, i);
    RootVec alpha(rs.n, 0);
    alpha[i] = 1;
    DoublePolynomial alpha_x = root_as_x_form(rs, alpha).to_polynomial(rs.n);
    DoublePolynomial num = f - f.substitute({{rs.n + i, xi - alpha_x}});
    if (num.is_zero()) return DoublePolynomial(rs.n);
    LinearForm denom = LinearForm::zero(rs.n);
    QVec m = rs.to_fundamental_coords(QVec(alpha.begin(), alpha.end()));
    for (int k = 0; k < rs.n; ++k) denom.x_coeffs[k] = -m[k];
    return exact_divide(num, denom);
}

DoublePolynomial leibniz_power_rule(const RootSystem& rs, int i,
                                    const DoublePolynomial& g, int m) {
    if (i < 0 || i >= rs.n) throw InputError("simple-root index out of range");
    if (m < 0) throw InputError("negative power");
    for (const auto& [e, c] : g.terms())
        if (e[rs.n + i] != 0)
            throw InputError("leibniz_power_rule: factor depends on the pivot variable");
    int n = rs.n;
    if (m == 0) return DoublePolynomial(n);  // g is s_i-invariant
    DoublePolynomial xi = DoublePolynomial::x_var(n, i);
    RootVec alpha(n, 0);
    alpha[i] = 1;
    DoublePolynomial sxi = xi - root_as_x_form(rs, alpha).to_polynomial(n);
    // sum_{k=1..m} (s_i x_i)^{k-1} x_i^{m-k}, then the overall minus sign so
    // that m = 1 gives D_i x_i = -1.
    DoublePolynomial sum(n);
    DoublePolynomial spow = DoublePolynomial::constant(n, 1);
    std::vector<DoublePolynomial> xpow{DoublePolynomial::constant(n, 1)};
    for (int k = 1; k <= m; ++k) xpow.push_back(xpow.back() * xi);
    for (int k = 1; k <= m; ++k) {
        sum += spow * xpow[m - k];
        spow = spow * sxi;
    }
    return -(g * sum);
}

}  // namespace schubert
