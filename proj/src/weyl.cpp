// Weyl group elements over the simple-root basis: construction from words,
// length by inversion count, canonical reduced words, Bruhat order, bounded
// enumeration.

#include "schubert/weyl.hpp"

#include <algorithm>
#include <unordered_map>

#include "schubert/error.hpp"

namespace schubert {

namespace {

std::vector<long> identity_matrix(int n) {
    std::vector<long> m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
    return m;
}

// In place: M <- M * S_i, i.e. col_j -= cartan[i][j] * col_i for all j.
// Copy col_i first: its own update (j = i) negates it.
void right_mult_simple(const RootSystem& rs, std::vector<long>& m, int i) {
    int n = rs.n;
    std::vector<long> coli(n);
    for (int r = 0; r < n; ++r) coli[r] = m[static_cast<size_t>(r) * n + i];
    for (int j = 0; j < n; ++j) {
        long c = rs.cartan[i][j];
        if (c == 0) continue;
        for (int r = 0; r < n; ++r) m[static_cast<size_t>(r) * n + j] -= c * coli[r];
    }
}

// Column j holds w(alpha_j), which is plus or minus a positive root, so any
// negative entry marks the negative case.
bool column_negative(const std::vector<long>& m, int n, int j) {
    for (int r = 0; r < n; ++r)
        if (m[static_cast<size_t>(r) * n + j] < 0) return true;
    return false;
}

int smallest_descent(const std::vector<long>& m, int n) {
    for (int j = 0; j < n; ++j)
        if (column_negative(m, n, j)) return j;
    return -1;
}

}  // namespace

WeylElement::WeylElement(const RootSystem* rs, std::vector<long> mat)
    : rs_(rs), n_(rs->n), mat_(std::move(mat)) {
    // Length = number of positive roots sent negative.
    for (const auto& beta : rs_->positive_roots) {
        bool neg = false;
        for (int r = 0; r < n_ && !neg; ++r) {
            long v = 0;
            for (int c = 0; c < n_; ++c)
                if (beta[c] != 0) v += mat_[static_cast<size_t>(r) * n_ + c] * beta[c];
            neg = v < 0;
        }
        if (neg) ++len_;
    }
    // Canonical reduced word by smallest-descent peeling from the right.
    std::vector<long> m = mat_;
    word_.reserve(len_);
    for (int step = 0; step < len_; ++step) {
        int i = smallest_descent(m, n_);
        word_.push_back(i);
        right_mult_simple(*rs_, m, i);
    }
    std::reverse(word_.begin(), word_.end());
}

bool WeylElement::is_right_descent(int j) const {
    if (j < 0 || j >= n_) throw InputError("simple-root index out of range");
    return column_negative(mat_, n_, j);
}

QVec WeylElement::apply(const QVec& lambda) const {
    QVec out(n_, Rational(0));
    for (int c = 0; c < n_; ++c) {
        if (lambda[c] == 0) continue;
        for (int r = 0; r < n_; ++r) {
            long e = mat_[static_cast<size_t>(r) * n_ + c];
            if (e != 0) out[r] += e * lambda[c];
        }
    }
    return out;
}

RootVec WeylElement::apply_root(const RootVec& beta) const {
    RootVec out(n_, 0);
    for (int c = 0; c < n_; ++c) {
        if (beta[c] == 0) continue;
        for (int r = 0; r < n_; ++r) out[r] += mat_[static_cast<size_t>(r) * n_ + c] * beta[c];
    }
    return out;
}

bool WeylElement::operator<(const WeylElement& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    return word_ < o.word_;
}

std::uint64_t WeylElement::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (long v : mat_) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

WeylElement identity_element(const RootSystem& rs) {
    return WeylElement(&rs, identity_matrix(rs.n));
}

WeylElement from_word(const RootSystem& rs, const Word& word) {
    std::vector<long> m = identity_matrix(rs.n);
    for (int i : word) {
        if (i < 0 || i >= rs.n) throw InputError("word letter out of range");
        right_mult_simple(rs, m, i);
    }
    return WeylElement(&rs, std::move(m));
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    return from_word(rs, {i});
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
    if (u.root_system() != v.root_system())
        throw InputError("product of elements from different root systems");
    const RootSystem& rs = *u.root_system();
    int n = rs.n;
    std::vector<long> m(static_cast<size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            long a = u.matrix()[static_cast<size_t>(r) * n + k];
            if (a == 0) continue;
            for (int c = 0; c < n; ++c)
                m[static_cast<size_t>(r) * n + c] += a * v.matrix()[static_cast<size_t>(k) * n + c];
        }
    return WeylElement(&rs, std::move(m));
}

WeylElement inverse(const WeylElement& w) {
    Word rev = w.reduced_word();
    std::reverse(rev.begin(), rev.end());
    return from_word(*w.root_system(), rev);
}

WeylElement reflection(const RootSystem& rs, const RootVec& beta) {
    if (rs.find_positive_root(beta) < 0)
        throw InputError("reflection: vector is not a positive root");
    int n = rs.n;
    std::vector<long> m(static_cast<size_t>(n) * n, 0);
    QVec bq(beta.begin(), beta.end());
    for (int j = 0; j < n; ++j) {
        QVec ej(n, Rational(0));
        ej[j] = 1;
        Rational p = rs.coroot_pair(ej, beta);
        for (int r = 0; r < n; ++r) {
            Rational entry = (r == j ? 1 : 0) - p * beta[r];
            if (entry.get_den() != 1)
                throw Error("reflection matrix is not integral");
            m[static_cast<size_t>(r) * n + j] = entry.get_num().get_si();
        }
    }
    return WeylElement(&rs, std::move(m));
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
    if (u.root_system() != w.root_system())
        throw InputError("Bruhat comparison across root systems");
    const RootSystem& rs = *u.root_system();
    int n = rs.n;
    std::vector<long> um = u.matrix(), wm = w.matrix();
    const std::vector<long> id = identity_matrix(n);
    while (true) {
        if (um == id) return true;
        int i = smallest_descent(wm, n);
        if (i < 0) return false;  // w = e, u != e
        right_mult_simple(rs, wm, i);
        if (column_negative(um, n, i)) right_mult_simple(rs, um, i);
    }
}

std::vector<WeylElement> enumerate_up_to_length(const RootSystem& rs, int cutoff,
                                                size_t max_elements) {
    std::vector<WeylElement> out;
    std::unordered_map<std::uint64_t, std::vector<std::vector<long>>> seen;
    auto insert_new = [&](const std::vector<long>& m) {
        std::uint64_t h = 1469598103934665603ULL;
        for (long v : m) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        auto& bucket = seen[h];
        for (const auto& b : bucket)
            if (b == m) return false;
        bucket.push_back(m);
        return true;
    };

    std::vector<std::vector<long>> layer{identity_matrix(rs.n)};
    insert_new(layer[0]);
    size_t total = 1;
    out.push_back(identity_element(rs));
    for (int len = 0; len < cutoff && !layer.empty(); ++len) {
        std::vector<std::vector<long>> next;
        for (const auto& m : layer) {
            for (int i = 0; i < rs.n; ++i) {
                if (column_negative(m, rs.n, i)) continue;  // descent: shorter product
                std::vector<long> nm = m;
                right_mult_simple(rs, nm, i);
                if (insert_new(nm)) {
                    if (++total > max_elements)
                        throw CapacityError("enumerate_up_to_length: element cap exceeded");
                    next.push_back(std::move(nm));
                }
            }
        }
        std::vector<WeylElement> elems;
        elems.reserve(next.size());
        for (auto& m : next) elems.push_back(WeylElement(&rs, std::move(m)));
        std::sort(elems.begin(), elems.end());
        out.insert(out.end(), elems.begin(), elems.end());
        layer.clear();
        for (const auto& e : elems) layer.push_back(e.matrix());
    }
    return out;
}

WeylElement longest_element(const RootSystem& rs) {
    // Climb ascents; terminates after #positive-roots steps.
    std::vector<long> m = identity_matrix(rs.n);
    while (true) {
        int asc = -1;
        for (int i = 0; i < rs.n; ++i)
            if (!column_negative(m, rs.n, i)) { asc = i; break; }
        if (asc < 0) break;
        right_mult_simple(rs, m, asc);
    }
    return WeylElement(&rs, std::move(m));
}

std::vector<int> one_line_notation(const WeylElement& w) {
    const RootSystem& rs = *w.root_system();
    if (rs.type.family != Family::A)
        throw InputError("one-line notation requires type A");
    int n = rs.n;
    // z_i = omega_{i-1} - omega_i with omega_0 = omega_{n+1} = 0.
    auto zvec = [&](int i) {  // i in 1..n+1
        QVec z(n, Rational(0));
        if (i - 2 >= 0)
            for (int r = 0; r < n; ++r) z[r] += rs.fundamental_weights[i - 2][r];
        if (i - 1 < n)
            for (int r = 0; r < n; ++r) z[r] -= rs.fundamental_weights[i - 1][r];
        return z;
    };
    std::vector<QVec> zs;
    for (int i = 1; i <= n + 1; ++i) zs.push_back(zvec(i));
    std::vector<int> pi(n + 1, 0);
    for (int i = 1; i <= n + 1; ++i) {
        QVec img = w.apply(zs[i - 1]);
        int match = -1;
        for (int j = 1; j <= n + 1; ++j)
            if (img == zs[j - 1]) { match = j; break; }
        if (match < 0) throw Error("one-line notation: image is not a coordinate");
        pi[i - 1] = match;
    }
    return pi;
}

}  // namespace schubert
