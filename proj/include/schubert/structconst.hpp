#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/presentations.hpp"
#include "schubert/store.hpp"

namespace schubert {

enum class Method { Gkm, Borel };

std::string method_name(Method m);

// Expansion X_u X_v = sum c_{uv}^w X_w. Coefficients are t-polynomials,
// homogeneous of degree l(u)+l(v)-l(w), supported on w above both u and v.
struct StructConstResult {
    WeylElement u, v;
    SchubertSum expansion;
    Method method;
};

// Localization recursion: walk the candidates {w : u <= w, v <= w,
// l(w) <= l(u)+l(v)} by increasing length and solve
//   i_w(X_u) i_w(X_v) = sum_{q <= w} c^q i_w(X_q)
// for c^w, dividing the remainder exactly by the factored self-restriction
// i_w(X_w). A store, when given, persists the individual localizations.
StructConstResult multiply_via_gkm(const WeylElement& u, const WeylElement& v,
                                   const Store* store = nullptr);

// Polynomial route: the product of the double polynomial representatives,
// pushed back through coefficient extraction.
StructConstResult multiply_via_borel(const WeylElement& u, const WeylElement& v,
                                     const Store* store = nullptr);

struct PositivityReport {
    bool nonnegative = true;
    // "word: coefficient" in simple-root coordinates, one per failure.
    std::vector<std::string> violations;
};

// Rewrites every coefficient in simple-root coordinates and flags negative
// monomial coefficients. A violation indicates a bug, not new mathematics.
PositivityReport check_graham_positivity(const StructConstResult& r);

// Sets t to zero; the surviving coefficients (top cohomological degree) are
// the ordinary structure constants and must be nonnegative integers.
std::map<WeylElement, long> specialize_ordinary(const StructConstResult& r);

// ---- store-backed building blocks -----------------------------------------
//
// The cached variants must only be combined with the default representative
// policy; the store pays no attention to where a table came from.

// default_sigma_table read through the store (whole table for small groups,
// one entry per degree otherwise).
SigmaTable sigma_table_cached(const RootSystem& rs, int max_length, const Store* store);

DoublePolynomial double_schubert_cached(const WeylElement& w, const SigmaTable& sig,
                                        const Store* store);

}  // namespace schubert
