// Root-system construction: Cartan matrices in Bourbaki numbering, the
// symmetrizer, positive roots by reflection closure, fundamental weights.

#include "schubert/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "schubert/error.hpp"

namespace schubert {

std::string CartanType::to_string() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType parse_cartan_type(const std::string& text) {
    if (text.size() < 2) throw InputError("bad Cartan type '" + text + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (f < 'A' || f > 'G') throw InputError("bad Cartan family in '" + text + "'");
    for (size_t k = 1; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw InputError("bad rank in Cartan type '" + text + "'");
    int rank = 0;
    try {
        rank = std::stoi(text.substr(1));
    } catch (const std::exception&) {
        throw InputError("bad rank in Cartan type '" + text + "'");
    }
    CartanType t{static_cast<Family>(f), rank};
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok) throw InputError("rank " + std::to_string(rank) + " out of range for family " +
                              std::string(1, f));
    return t;
}

namespace {

// cartan[i][j] = <alpha_j, alpha_i^vee>; rows index coroots. Off-diagonal
// asymmetry: the -2/-3 entry sits in the short root's row.
std::vector<std::vector<long>> make_cartan(CartanType t) {
    int n = t.rank;
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto chain_edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
            break;
        case Family::B:
            // alpha_n short (1-based): <alpha_{n-1}, alpha_n^vee> = -2.
            for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
            break;
        case Family::C:
            // alpha_n long (1-based): <alpha_n, alpha_{n-1}^vee> = -2.
            for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
            break;
        case Family::D:
            for (int i = 0; i + 1 < n - 2; ++i) chain_edge(i, i + 1);
            chain_edge(n - 3, n - 2);
            chain_edge(n - 3, n - 1);
            break;
        case Family::E:
            // Bourbaki: chain 1-3-4-5-6(-7(-8)) with node 2 attached to node 4.
            chain_edge(0, 2);
            chain_edge(1, 3);
            for (int i = 2; i + 1 < n; ++i) chain_edge(i, i + 1);
            break;
        case Family::F:
            // 1-2 => 3-4; alpha_1, alpha_2 long, alpha_3, alpha_4 short.
            chain_edge(0, 1);
            chain_edge(2, 3);
            c[1][2] = -1;
            c[2][1] = -2;
            break;
        case Family::G:
            // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3.
            c[0][1] = -3;
            c[1][0] = -1;
            break;
    }
    return c;
}

std::vector<long> make_degrees(CartanType t) {
    int n = t.rank;
    std::vector<long> d;
    switch (t.family) {
        case Family::A:
            for (int k = 2; k <= n + 1; ++k) d.push_back(k);
            break;
        case Family::B:
        case Family::C:
            for (int k = 1; k <= n; ++k) d.push_back(2 * k);
            break;
        case Family::D:
            for (int k = 1; k < n; ++k) d.push_back(2 * k);
            d.push_back(n);
            std::sort(d.begin(), d.end());
            break;
        case Family::E:
            if (n == 6) d = {2, 5, 6, 8, 9, 12};
            if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
            if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        case Family::F: d = {2, 6, 8, 12}; break;
        case Family::G: d = {2, 6}; break;
    }
    return d;
}

}  // namespace

Rational RootSystem::inner(const QVec& a, const QVec& b) const {
    // (alpha_i, alpha_j) = d_i * cartan[i][j].
    Rational s = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (cartan[i][j] == 0 || b[j] == 0) continue;
            s += a[i] * b[j] * symmetrizer[i] * cartan[i][j];
        }
    }
    return s;
}

Rational RootSystem::coroot_pair(const QVec& lambda, const RootVec& beta) const {
    QVec bq(beta.begin(), beta.end());
    Rational bb = inner(bq, bq);
    if (bb == 0) throw InputError("coroot_pair: zero vector is not a root");
    return 2 * inner(lambda, bq) / bb;
}

Rational RootSystem::simple_coroot_pair(const QVec& lambda, int i) const {
    Rational s = 0;
    for (int j = 0; j < n; ++j)
        if (cartan[i][j] != 0 && lambda[j] != 0) s += cartan[i][j] * lambda[j];
    return s;
}

QVec RootSystem::reflect_simple(int i, const QVec& lambda) const {
    QVec r = lambda;
    r[i] -= simple_coroot_pair(lambda, i);
    return r;
}

QVec RootSystem::reflect_root(const RootVec& beta, const QVec& lambda) const {
    Rational p = coroot_pair(lambda, beta);
    QVec r = lambda;
    for (int i = 0; i < n; ++i) r[i] -= p * beta[i];
    return r;
}

int RootSystem::find_positive_root(const RootVec& beta) const {
    auto it = root_index_.find(beta);
    return it == root_index_.end() ? -1 : it->second;
}

QVec RootSystem::to_fundamental_coords(const QVec& lambda) const {
    QVec m(n, Rational(0));
    for (int i = 0; i < n; ++i) m[i] = simple_coroot_pair(lambda, i);
    return m;
}

QVec RootSystem::from_fundamental_coords(const QVec& m) const {
    QVec a(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[j] != 0) a[i] += cartan_inverse[i][j] * m[j];
    return a;
}

RootSystem build_root_system(CartanType type) {
    RootSystem rs;
    rs.type = type;
    rs.n = type.rank;
    rs.cartan = make_cartan(type);
    int n = rs.n;

    // Symmetrizer over the Dynkin graph: d_j = d_i * c[i][j] / c[j][i] along
    // edges. Connected for every family, so one sweep from node 0 suffices.
    rs.symmetrizer.assign(n, Rational(0));
    rs.symmetrizer[0] = 1;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        for (int j = 0; j < n; ++j) {
            if (rs.cartan[i][j] == 0 || i == j || rs.symmetrizer[j] != 0) continue;
            rs.symmetrizer[j] = rs.symmetrizer[i] * rat(rs.cartan[i][j]) / rat(rs.cartan[j][i]);
            queue.push_back(j);
        }
    }
    Rational dmin = rs.symmetrizer[0];
    for (const auto& d : rs.symmetrizer) dmin = std::min(dmin, d);
    for (auto& d : rs.symmetrizer) d /= dmin;

    // Positive roots: saturate {alpha_i} under all simple reflections,
    // keeping vectors with nonnegative coordinates.
    std::set<RootVec> pos;
    std::vector<RootVec> frontier;
    for (int i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& b : frontier) {
            for (int i = 0; i < n; ++i) {
                long p = 0;
                for (int j = 0; j < n; ++j) p += rs.cartan[i][j] * b[j];
                RootVec r = b;
                r[i] -= p;
                if (std::all_of(r.begin(), r.end(), [](long v) { return v >= 0; }) &&
                    pos.insert(r).second)
                    next.push_back(r);
            }
        }
        frontier = std::move(next);
    }
    rs.positive_roots.assign(pos.begin(), pos.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const RootVec& a, const RootVec& b) {
                  long ha = std::accumulate(a.begin(), a.end(), 0L);
                  long hb = std::accumulate(b.begin(), b.end(), 0L);
                  if (ha != hb) return ha < hb;
                  return a > b;  // puts alpha_1..alpha_n first, in order
              });
    for (size_t k = 0; k < rs.positive_roots.size(); ++k)
        rs.root_index_[rs.positive_roots[k]] = static_cast<int>(k);

    // Invert the Cartan matrix by exact Gauss-Jordan elimination.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = rs.cartan[i][j];
        aug[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw Error("singular Cartan matrix");
        std::swap(aug[col], aug[piv]);
        Rational lead = aug[col][col];
        for (int j = 0; j < 2 * n; ++j) aug[col][j] /= lead;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    rs.cartan_inverse.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.cartan_inverse[i][j] = aug[i][n + j];

    rs.fundamental_weights.assign(n, QVec(n, Rational(0)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) rs.fundamental_weights[j][i] = rs.cartan_inverse[i][j];

    rs.degrees = make_degrees(type);
    rs.weyl_order = 1;
    for (long d : rs.degrees) rs.weyl_order *= d;
    return rs;
}

RootSystem build_root_system(const std::string& type_text) {
    return build_root_system(parse_cartan_type(type_text));
}

}  // namespace schubert
