#pragma once

#include <map>
#include <vector>

#include "schubert/cartan.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Exponent vector of length 2n: positions 0..n-1 are t_1..t_n, positions
// n..2n-1 are x_1..x_n. Variables represent the fundamental weights; each one
// has cohomological degree 2 (polynomial degree 1).
using Exponents = std::vector<int>;

// Canonical term order: higher total degree first, ties broken by
// lexicographically larger exponent vector first. Serialization and all
// deterministic choices follow this order.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial in t_1..t_n, x_1..x_n over Rational. Invariant: no zero
// coefficients are stored, so equality is map equality.
class DoublePolynomial {
public:
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    DoublePolynomial() = default;
    explicit DoublePolynomial(int n) : n_(n) {}

    static DoublePolynomial constant(int n, const Rational& c);
    static DoublePolynomial t_var(int n, int i);  // t_{i+1}
    static DoublePolynomial x_var(int n, int i);  // x_{i+1}
    static DoublePolynomial monomial(int n, const Exponents& e, const Rational& c);

    int rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    int x_degree() const;
    int t_degree() const;
    bool is_homogeneous() const;

    // The coefficient of the constant term (the value at t = x = 0 is not
    // meant here: this is the degree-0 coefficient).
    Rational constant_term() const;

    void add_term(const Exponents& e, const Rational& c);

    DoublePolynomial operator-() const;
    DoublePolynomial operator+(const DoublePolynomial& o) const;
    DoublePolynomial operator-(const DoublePolynomial& o) const;
    DoublePolynomial operator*(const DoublePolynomial& o) const;
    DoublePolynomial operator*(const Rational& c) const;
    DoublePolynomial& operator+=(const DoublePolynomial& o);
    DoublePolynomial& operator-=(const DoublePolynomial& o);
    bool operator==(const DoublePolynomial& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    DoublePolynomial pow(int k) const;

    // Simultaneous substitution var_index -> polynomial for the listed
    // variables (indices in 0..2n-1); unlisted variables stay themselves.
    DoublePolynomial substitute(const std::map<int, DoublePolynomial>& images) const;

private:
    int n_ = 0;
    TermMap terms_;
};

// Homogeneous degree-1 form c_t . t + c_x . x in fundamental-weight
// coordinates.
struct LinearForm {
    QVec t_coeffs;
    QVec x_coeffs;

    static LinearForm zero(int n);
    DoublePolynomial to_polynomial(int n) const;
    bool is_zero() const;
};

// Embeds a weight (simple-root coordinates) as a linear form in the t or x
// variables: coefficients are the fundamental-weight coordinates cartan*lambda.
LinearForm weight_as_t_form(const RootSystem& rs, const QVec& lambda_alpha);
LinearForm weight_as_x_form(const RootSystem& rs, const QVec& lambda_alpha);
LinearForm root_as_t_form(const RootSystem& rs, const RootVec& beta);
LinearForm root_as_x_form(const RootSystem& rs, const RootVec& beta);

// w acting on the x variables only: x_j picks up the fundamental-weight
// coordinates of w(omega_j). t variables are untouched.
DoublePolynomial weyl_act_x(const RootSystem& rs, const WeylElement& w,
                            const DoublePolynomial& f);

// Substitutes x_i -> t_i (the evaluation map used by localization at the
// identity vertex, and by sigma(x) -> sigma(t) instantiation).
DoublePolynomial evaluate_x_to_t(const DoublePolynomial& f);

// Exact division by a nonzero linear form; throws DivisionError carrying the
// leading remainder term when the division is not exact.
DoublePolynomial exact_divide(const DoublePolynomial& f, const LinearForm& d);

// Divided difference on the Borel side:
//   D_i f = (f - s_i^x f) / (-alpha_i(x)).
// Lowers x-degree by 1; D_i o D_i = 0; braid relations hold.
DoublePolynomial divided_difference_borel(const RootSystem& rs, int i,
                                          const DoublePolynomial& f);

// Fast path for D_i(g * x_i^m) when g contains no x_i:
//   -g * sum_{k=1..m} (s_i x_i)^{k-1} x_i^{m-k},  s_i x_i = x_i - alpha_i(x).
// Sign normalized to agree with divided_difference_borel (D_i x_i = -1).
DoublePolynomial leibniz_power_rule(const RootSystem& rs, int i,
                                    const DoublePolynomial& g, int m);

}  // namespace schubert
