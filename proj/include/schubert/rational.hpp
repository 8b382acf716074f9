#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace schubert {

// Exact arbitrary-precision rational. All coefficient arithmetic in the
// library goes through this type; no floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "5", "-5", "3/4". Rejects anything mpq_class cannot parse and zero
// denominators.
Rational parse_rational(const std::string& text);

// Canonical text: integer when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rational& q);

// Weights and linear forms are coordinate vectors over Rational.
using QVec = std::vector<Rational>;

}  // namespace schubert
