#pragma once

#include <cstdint>
#include <vector>

#include "schubert/cartan.hpp"

namespace schubert {

// Word in the simple reflections, 0-based letters, applied left to right:
// {0,1} stands for s_1 s_2 in 1-based notation.
using Word = std::vector<int>;

// Weyl group element as the n x n integer matrix of its action on the
// simple-root basis (column j = coordinates of w(alpha_j)). The matrix is the
// canonical form: equality, hashing and ordering ignore how the element was
// produced. Length and the canonical reduced word (lexicographically smallest
// descent peeled first) are computed on construction.
//
// Immutable; safe to share across threads.
class WeylElement {
public:
    const RootSystem* root_system() const { return rs_; }
    const std::vector<long>& matrix() const { return mat_; }
    int length() const { return len_; }
    const Word& reduced_word() const { return word_; }
    bool is_identity() const { return len_ == 0; }

    long mat(int row, int col) const { return mat_[static_cast<size_t>(row) * n_ + col]; }

    // w(alpha_j) < 0, i.e. l(w s_j) = l(w) - 1.
    bool is_right_descent(int j) const;

    QVec apply(const QVec& lambda) const;
    RootVec apply_root(const RootVec& beta) const;

    // det of the matrix: (-1)^length.
    int sign() const { return len_ % 2 == 0 ? 1 : -1; }

    bool operator==(const WeylElement& o) const { return rs_ == o.rs_ && mat_ == o.mat_; }
    // Total order by (length, canonical word); used for all deterministic
    // container orderings and serializations.
    bool operator<(const WeylElement& o) const;

    std::uint64_t hash() const;

private:
    WeylElement(const RootSystem* rs, std::vector<long> mat);
    const RootSystem* rs_ = nullptr;
    int n_ = 0;
    std::vector<long> mat_;
    int len_ = 0;
    Word word_;

    friend WeylElement identity_element(const RootSystem&);
    friend WeylElement from_word(const RootSystem&, const Word&);
    friend WeylElement multiply(const WeylElement&, const WeylElement&);
    friend WeylElement reflection(const RootSystem&, const RootVec&);
    friend std::vector<WeylElement> enumerate_up_to_length(const RootSystem&, int, size_t);
    friend WeylElement longest_element(const RootSystem&);
};

WeylElement identity_element(const RootSystem& rs);

// Product of simple reflections in word order; the word need not be reduced.
WeylElement from_word(const RootSystem& rs, const Word& word);

WeylElement simple_reflection(const RootSystem& rs, int i);

// Throws InputError when the factors live in different root systems.
WeylElement multiply(const WeylElement& u, const WeylElement& v);

WeylElement inverse(const WeylElement& w);

// Reflection s_beta for a positive root beta (simple-root coordinates).
WeylElement reflection(const RootSystem& rs, const RootVec& beta);

// Bruhat order via the descent recursion:
//   u <= w  iff  u = e, or for a right descent i of w:
//   (u s_i <= w s_i) when i is a descent of u, else (u <= w s_i).
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

// All elements of length <= cutoff, sorted by (length, canonical word).
// Throws CapacityError when more than max_elements would be produced.
std::vector<WeylElement> enumerate_up_to_length(const RootSystem& rs, int cutoff,
                                                size_t max_elements = 4'000'000);

// Longest element; requires the full group to fit under max_elements-free
// climbing (always fine: reached in #positive-roots steps).
WeylElement longest_element(const RootSystem& rs);

// Type A only: one-line notation [pi(1)..pi(n+1)], 1-based values, where w
// permutes the A-type coordinates z_i by w(z_i) = z_{pi(i)}.
std::vector<int> one_line_notation(const WeylElement& w);

}  // namespace schubert
