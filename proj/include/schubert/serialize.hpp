#pragma once

#include <string>

#include "schubert/expr.hpp"
#include "schubert/presentations.hpp"

namespace schubert {

// "e" for the identity, otherwise the canonical reduced word spelled
// "s1s2s1". Subscripts are 1-based.
std::string format_word(const WeylElement& w);

// Inverse of format_word; also accepts non-canonical spellings of the same
// element ("s2s1s2" names the same element as "s1s2s1" in A2). The word need
// not be reduced. Throws InputError on malformed text or out-of-range
// subscripts.
WeylElement parse_word_name(const RootSystem& rs, const std::string& text);

// Comma-separated 1-based letters ("4,2" is s_4 s_2); "e" or the empty
// string denote the identity. Returns the 0-based letter sequence.
Word parse_word_csv(const RootSystem& rs, const std::string& text);

// ---- class serialization ---------------------------------------------------
//
// Every serializer ends its output with a newline and is byte-deterministic.
// The alpha flag switches rendering to simple-root coordinates (display only;
// the parsers accept canonical and type-A z coordinates).

// One "word: polynomial" line per nonzero coefficient, sorted by
// (length, word); the zero class serializes as "0".
std::string serialize_schubert_sum(const SchubertSum& s, CoordMode mode,
                                   bool alpha_basis = false);
SchubertSum parse_schubert_sum(const RootSystem& rs, const std::string& text,
                               CoordMode mode);

// One "word: polynomial" line per vertex, zero values included, sorted by
// (length, word).
std::string serialize_gkm(const GKMClass& h, CoordMode mode,
                          bool alpha_basis = false);

// The cutoff is inferred as the largest length present; the vertex set must
// then be exactly all elements up to that length, and the edge condition is
// checked. Throws InputError on gaps, duplicates or divisibility failures.
GKMClass parse_gkm(const RootSystem& rs, const std::string& text,
                   CoordMode mode);

// A single polynomial expression.
std::string serialize_borel(const RootSystem& rs, const DoublePolynomial& f,
                            CoordMode mode, bool alpha_basis = false);
DoublePolynomial parse_borel(const RootSystem& rs, const std::string& text,
                             CoordMode mode);

// ---- graph export ----------------------------------------------------------

// Undirected DOT graph of the vertices of length <= cutoff (whole group for
// -1), one edge per pair {v, s_beta v} of present vertices, labeled by the
// t-form of the positive root beta. Vertex labels carry the one-line notation
// in type A. Throws CapacityError past 50000 vertices; lower the cutoff.
std::string gkm_to_dot(const RootSystem& rs, int cutoff, CoordMode mode);

}  // namespace schubert
