#pragma once

#include <map>
#include <set>
#include <vector>

#include "schubert/cartan.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// A cohomology class written in the Schubert basis: sum of coeff[w] * X_w.
// Coefficients are polynomials in t (a general double polynomial is allowed
// while an expression is being assembled, but every finished class produced
// by the conversions below has t-only coefficients).
struct SchubertSum {
    const RootSystem* rs = nullptr;
    std::map<WeylElement, DoublePolynomial> coeffs;

    SchubertSum() = default;
    explicit SchubertSum(const RootSystem& r) : rs(&r) {}

    // Adds c * X_w, dropping the entry if the total becomes zero.
    void add(const WeylElement& w, const DoublePolynomial& c);

    bool is_zero() const { return coeffs.empty(); }
    bool coeffs_t_only() const;

    // Largest l(w) + deg coeff[w]; -1 for the zero class.
    int total_degree() const;

    bool operator==(const SchubertSum& other) const;
};

SchubertSum schubert_basis_class(const RootSystem& rs, const WeylElement& w);

// A class in the GKM (fixed-point) presentation: one t-polynomial per group
// element of length <= cutoff.  `values` always holds every vertex in that
// range, including zero entries.  cutoff == -1 denotes the whole group.
struct GKMClass {
    const RootSystem* rs = nullptr;
    int cutoff = -1;
    std::map<WeylElement, DoublePolynomial> values;

    GKMClass() = default;
    GKMClass(const RootSystem& r, int cutoff_len);

    // True when every group element is present.
    bool full() const;

    bool is_zero() const;
    int max_value_degree() const;

    bool operator==(const GKMClass& other) const;
};

std::vector<WeylElement> gkm_vertices(const RootSystem& rs, int cutoff);

// Every pair {v, reflection(beta) * v} with both endpoints present must
// differ by a multiple of beta(t).  Throws InputError when violated.
void validate_gkm_edges(const GKMClass& h);

// ---- divided difference operators ----------------------------------------

// (D_i h)_v = (h_v - h_{v s_i}) / (-v(alpha_i)(t)).  The vertex set shrinks
// by one length level unless h covers the whole group.  i is 0-based.
GKMClass dd_gkm(int i, const GKMClass& h);

// D_i on the Borel presentation; see divided_difference_borel.
inline DoublePolynomial dd_borel(const RootSystem& rs, int i,
                                 const DoublePolynomial& f) {
    return divided_difference_borel(rs, i, f);
}

// D_i on the Schubert basis: X_w -> X_{w s_i} when that shortens w, else 0.
SchubertSum dd_schubert(int i, const SchubertSum& s);

// Composite D_{word}: the rightmost letter acts first, so dd_word({0, 1}, f)
// computes D_2 applied first and D_1 second (1-based reading D_{s1 s2}).
// The word must be reduced; otherwise the result is identically zero and an
// InputError is raised to flag the unintended call.
GKMClass dd_word(const std::vector<int>& word, const GKMClass& h);
DoublePolynomial dd_word(const RootSystem& rs, const std::vector<int>& word,
                         const DoublePolynomial& f);
SchubertSum dd_word(const std::vector<int>& word, const SchubertSum& s);

// ---- Weyl group action ---------------------------------------------------

// (w . h)_v = h_{v w}; coefficients are untouched.  Shrinks the vertex set
// by l(w) levels unless h covers the whole group.
GKMClass weyl_act_gkm(const WeylElement& w, const GKMClass& h);

// Action of s_i, resp. of a general element, on the Schubert basis via
// s_i = id + (multiplication by alpha_i(x)) composed with D_i.
SchubertSum weyl_act_schubert(int i, const SchubertSum& s);
SchubertSum weyl_act_schubert(const WeylElement& w, const SchubertSum& s);

// ---- multiplication by a linear class ------------------------------------

// Product of the degree-one class lambda(x) with a Schubert-basis class.
// lambda is given by its coordinates in the simple-root basis.  On a basis
// element: lambda(x) X_v = v(lambda)(t) X_v - sum <lambda, beta^> X_{v s_beta}
// over positive roots beta with l(v s_beta) = l(v) + 1.
SchubertSum chevalley_multiply(const RootSystem& rs, const QVec& lambda_alpha,
                               const SchubertSum& s);

// ---- localization --------------------------------------------------------

// Restriction of the Schubert class X_w to the fixed point v, as a
// t-polynomial.  Computed as a sum over those subsequences of a reduced word
// for v that are reduced words for w; each subsequence contributes the
// product of its prefix-reflected simple roots.
DoublePolynomial billey_localize(const WeylElement& w, const WeylElement& v);

// The factored self-restriction: prefix-reflected roots of the full word.
std::vector<LinearForm> billey_self_factors(const WeylElement& w);

// ---- conversions between the three presentations -------------------------

GKMClass borel_to_gkm(const RootSystem& rs, const DoublePolynomial& f,
                      int cutoff = -1);

GKMClass schubert_to_gkm(const SchubertSum& s, int cutoff = -1);

// Coefficient extraction d_w = (D_{word(w)} h)_e by increasing length.  The
// vertex range of h must reach the top degree of the class, otherwise the
// expansion cannot be certified complete and an InputError is raised.
SchubertSum gkm_to_schubert(const GKMClass& h);

// d_w = (D_{word(w)} f) with x evaluated at t, for all l(w) <= deg_x f.
SchubertSum borel_to_schubert(const RootSystem& rs, const DoublePolynomial& f);

// ---- polynomial representatives ------------------------------------------

enum class SigmaSource { BggTop, LinearSystem };

// Polynomial representatives sigma[v] (x-only) of the non-equivariant
// Schubert classes, normalized by D_u sigma_v = delta_{u,v} for l(u) = l(v).
struct SigmaTable {
    const RootSystem* rs = nullptr;
    SigmaSource source = SigmaSource::BggTop;
    std::map<WeylElement, DoublePolynomial> sigma;

    const DoublePolynomial& at(const WeylElement& v) const;
};

// Representatives seeded at the longest element and pushed down by divided
// differences: sigma_v = D_{v^-1 w0} sigma_{w0}.  For type A the seed is the
// staircase monomial; otherwise it is the normalized product of the negated
// positive roots, which requires materializing the whole group (guarded by
// max_elements).
SigmaTable sigma_bgg(const RootSystem& rs,
                     std::size_t max_elements = 4'000'000);

// Representatives of a single degree k, from the exact linear system
// D_u(sigma_v) = delta_{u,v} over degree-k monomials in x.  Solved by
// reduced row echelon over the rationals; free columns are set to zero, so
// the result is deterministic.
std::map<WeylElement, DoublePolynomial> sigma_linear_system(const RootSystem& rs,
                                                            int k);

// Policy behind default_sigma_table: the pushed-down table when the whole
// group is small enough to hold, per-degree linear systems otherwise.
SigmaSource default_sigma_source(const RootSystem& rs);

// BGG table when the group is small (or type A), per-degree linear systems
// up to max_length otherwise.
SigmaTable default_sigma_table(const RootSystem& rs, int max_length);

// ---- double Schubert polynomials -----------------------------------------

// Length-additive factorizations of w into k non-identity elements,
// (w_1, ..., w_k) with w = w_1 ... w_k and l(w) = sum l(w_j).
std::set<std::vector<WeylElement>> factor_decompositions(const WeylElement& w,
                                                         int k);

// Borel-presentation representative of the equivariant class X_w, assembled
// from sigma representatives over all length-additive factorizations:
//   S_w = sum_k (-1)^k sum_{(w_1..w_k)} sigma_{w_1}(t) ... sigma_{w_{k-1}}(t)
//                                       (sigma_{w_k}(t) - sigma_{w_k}(x)).
DoublePolynomial double_schubert(const WeylElement& w, const SigmaTable& sig);

// sum d_w S_w for a class with known Schubert coefficients.
DoublePolynomial schubert_to_borel(const SchubertSum& s, const SigmaTable& sig);

DoublePolynomial gkm_to_borel(const GKMClass& h, const SigmaTable& sig);

}  // namespace schubert
