#pragma once

#include <string>
#include <vector>

#include "schubert/polynomial.hpp"

namespace schubert {

// Coordinate conventions for polynomial text I/O.
//
// Canonical: variables t1..tn, x1..xn are the fundamental weights.
//
// TypeAZ (type A rank n only): variables t1..t(n+1), x1..x(n+1) (z is an
// alias for x) are the A-type coordinates with sum zero; z_i maps to
// omega_{i-1} - omega_i. Rendering eliminates index n+1, i.e. prints the
// unique representative free of the last coordinate.
enum class CoordMode { Canonical, TypeAZ };

// Grammar: + - * ^ ( ), rational literals ("3", "3/4"), variables as above.
// Multiplication must be explicit. Throws InputError on anything else.
DoublePolynomial parse_polynomial(const RootSystem& rs, const std::string& text,
                                  CoordMode mode = CoordMode::Canonical);

// Canonical serialization: terms in the canonical order, " + "/" - " joined,
// unit coefficients elided, "^" powers, "0" for the zero polynomial.
std::string format_polynomial(const DoublePolynomial& f);

// Serialization after eliminating the last A-type coordinate; byte-stable.
std::string format_polynomial_za(const RootSystem& rs, const DoublePolynomial& f);

// Serialization in simple-root coordinates: variables a1..an for a polynomial
// living in a single family (all-t or all-x), at1../ax1.. for a mixed one.
std::string format_polynomial_alpha(const RootSystem& rs, const DoublePolynomial& f);

// Weight rendered as a linear t-polynomial in the given mode.
std::string format_weight_t(const RootSystem& rs, const QVec& lambda_alpha, CoordMode mode);

std::string format_rendered(const RootSystem& rs, const DoublePolynomial& f, CoordMode mode,
                            bool alpha_basis);

}  // namespace schubert
