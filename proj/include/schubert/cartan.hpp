#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/rational.hpp"

namespace schubert {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Cartan type such as A2, C3, E8. Rank limits: A n>=1, B/C n>=2, D n>=3,
// E n in {6,7,8}, F n=4, G n=2.
struct CartanType {
    Family family;
    int rank;

    std::string to_string() const;
    bool operator==(const CartanType&) const = default;
};

// Parses "A2", "E8", ... and validates the rank. Throws InputError.
CartanType parse_cartan_type(const std::string& text);

// Integer vector in the simple-root basis. Roots always have integer
// coordinates; general weights use QVec instead.
using RootVec = std::vector<long>;

// A finite crystallographic root system in Bourbaki numbering, with all data
// expressed in the simple-root basis. Simple-root indices are 0-based in code
// and rendered 1-based in every text format.
//
// Immutable after construction; safe to share across threads.
struct RootSystem {
    CartanType type;
    int n;  // rank

    // cartan[i][j] = <alpha_j, alpha_i^vee>. Rows index coroots.
    std::vector<std::vector<long>> cartan;

    // Positive rationals d with diag(d) * cartan symmetric, normalized so the
    // short-root norm (alpha_i, alpha_i) = 2*d_i has minimum 2.
    QVec symmetrizer;

    // Closure of the simple roots under simple reflections, positives only,
    // sorted by height, ties lex-descending. positive_roots[i] = e_i for i < n.
    std::vector<RootVec> positive_roots;

    // fundamental_weights[j] = omega_j in simple-root coordinates
    // (column j of the inverse Cartan matrix).
    std::vector<QVec> fundamental_weights;

    std::vector<std::vector<Rational>> cartan_inverse;

    // Degrees of the basic Weyl-invariant polynomials; their product is the
    // order of the Weyl group.
    std::vector<long> degrees;
    long weyl_order;

    // W-invariant inner product with short norm 2.
    Rational inner(const QVec& a, const QVec& b) const;

    // coroot_pair(lambda, beta) = 2(lambda, beta)/(beta, beta).
    Rational coroot_pair(const QVec& lambda, const RootVec& beta) const;

    // <lambda, alpha_i^vee> = sum_j cartan[i][j] * lambda_j.
    Rational simple_coroot_pair(const QVec& lambda, int i) const;

    // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
    QVec reflect_simple(int i, const QVec& lambda) const;

    // s_beta(lambda) = lambda - coroot_pair(lambda, beta) beta.
    QVec reflect_root(const RootVec& beta, const QVec& lambda) const;

    // Index into positive_roots, or -1. Negative roots match their positive
    // counterpart only via is_positive_root(-beta).
    int find_positive_root(const RootVec& beta) const;

    // Fundamental-weight coordinates of lambda: (cartan * lambda), i.e. the
    // vector of pairings <lambda, alpha_i^vee>.
    QVec to_fundamental_coords(const QVec& lambda) const;

    // Inverse of to_fundamental_coords.
    QVec from_fundamental_coords(const QVec& m) const;

private:
    std::map<RootVec, int> root_index_;
    friend RootSystem build_root_system(CartanType);
};

RootSystem build_root_system(CartanType type);
RootSystem build_root_system(const std::string& type_text);

}  // namespace schubert
