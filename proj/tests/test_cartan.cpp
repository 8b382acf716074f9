#include "schubert/cartan.hpp"

#include <algorithm>

#include "doctest.h"
#include "schubert/error.hpp"

using namespace schubert;

TEST_CASE("cartan type parsing") {
    CHECK(parse_cartan_type("A2").to_string() == "A2");
    CHECK(parse_cartan_type("a2").to_string() == "A2");
    CHECK(parse_cartan_type("E8").family == Family::E);
    CHECK(parse_cartan_type("D3").rank == 3);
    CHECK_THROWS_AS(parse_cartan_type("A0"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("B1"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("D2"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("E9"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("F3"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("G3"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("H2"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("A"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("2A"), InputError);
}

TEST_CASE("cartan matrices match the classification") {
    auto a2 = build_root_system("A2");
    CHECK(a2.cartan == std::vector<std::vector<long>>{{2, -1}, {-1, 2}});

    // Off-diagonal -2 sits in the short root's row.
    auto b3 = build_root_system("B3");
    CHECK(b3.cartan[1][2] == -1);
    CHECK(b3.cartan[2][1] == -2);

    auto c3 = build_root_system("C3");
    CHECK(c3.cartan[1][2] == -2);
    CHECK(c3.cartan[2][1] == -1);

    auto c2 = build_root_system("C2");
    CHECK(c2.cartan == std::vector<std::vector<long>>{{2, -2}, {-1, 2}});

    auto g2 = build_root_system("G2");
    CHECK(g2.cartan == std::vector<std::vector<long>>{{2, -3}, {-1, 2}});

    auto f4 = build_root_system("F4");
    CHECK(f4.cartan[0][1] == -1);
    CHECK(f4.cartan[1][0] == -1);
    CHECK(f4.cartan[1][2] == -1);
    CHECK(f4.cartan[2][1] == -2);
    CHECK(f4.cartan[2][3] == -1);
    CHECK(f4.cartan[3][2] == -1);

    // E8 node 2 hangs off node 4 (1-based Bourbaki labels).
    auto e8 = build_root_system("E8");
    CHECK(e8.cartan[0][2] == -1);
    CHECK(e8.cartan[1][3] == -1);
    CHECK(e8.cartan[0][1] == 0);
    CHECK(e8.cartan[2][3] == -1);
    for (int i = 3; i < 7; ++i) CHECK(e8.cartan[i][i + 1] == -1);
}

TEST_CASE("symmetrizer makes the cartan matrix symmetric, short norm 2") {
    for (const char* t : {"A3", "B3", "C3", "D4", "E6", "F4", "G2"}) {
        RootSystem rs = build_root_system(t);
        CAPTURE(t);
        Rational dmin = rs.symmetrizer[0];
        for (int i = 0; i < rs.n; ++i) {
            dmin = std::min(dmin, rs.symmetrizer[i]);
            for (int j = 0; j < rs.n; ++j)
                CHECK(rs.symmetrizer[i] * rs.cartan[i][j] ==
                      rs.symmetrizer[j] * rs.cartan[j][i]);
        }
        CHECK(dmin == 1);
    }
    auto b3 = build_root_system("B3");
    CHECK(b3.symmetrizer == QVec{2, 2, 1});
    auto g2 = build_root_system("G2");
    CHECK(g2.symmetrizer == QVec{1, 3});
}

TEST_CASE("positive root counts") {
    CHECK(build_root_system("A2").positive_roots.size() == 3);
    CHECK(build_root_system("A3").positive_roots.size() == 6);
    CHECK(build_root_system("B3").positive_roots.size() == 9);
    CHECK(build_root_system("C2").positive_roots.size() == 4);
    CHECK(build_root_system("D4").positive_roots.size() == 12);
    CHECK(build_root_system("F4").positive_roots.size() == 24);
    CHECK(build_root_system("G2").positive_roots.size() == 6);
    CHECK(build_root_system("E8").positive_roots.size() == 120);
}

TEST_CASE("positive roots are sorted by height and start with the simples") {
    RootSystem rs = build_root_system("B3");
    for (int i = 0; i < rs.n; ++i) {
        RootVec e(rs.n, 0);
        e[i] = 1;
        CHECK(rs.positive_roots[i] == e);
        CHECK(rs.find_positive_root(e) == i);
    }
    long prev = 1;
    for (const auto& beta : rs.positive_roots) {
        long h = 0;
        for (long c : beta) {
            CHECK(c >= 0);
            h += c;
        }
        CHECK(h >= prev);
        prev = h;
    }
    // Highest root of B3 is alpha_1 + 2 alpha_2 + 2 alpha_3.
    CHECK(rs.positive_roots.back() == RootVec{1, 2, 2});
}

TEST_CASE("coroot pairings reproduce the cartan matrix") {
    for (const char* t : {"A2", "C2", "B3", "F4", "G2"}) {
        RootSystem rs = build_root_system(t);
        CAPTURE(t);
        for (int i = 0; i < rs.n; ++i) {
            RootVec ai(rs.n, 0);
            ai[i] = 1;
            for (int j = 0; j < rs.n; ++j) {
                QVec aj(rs.n, Rational(0));
                aj[j] = 1;
                CHECK(rs.coroot_pair(aj, ai) == rs.cartan[i][j]);
                CHECK(rs.simple_coroot_pair(aj, i) == rs.cartan[i][j]);
            }
        }
    }
}

TEST_CASE("fundamental weights are dual to the simple coroots") {
    for (const char* t : {"A3", "C2", "G2", "F4", "E6"}) {
        RootSystem rs = build_root_system(t);
        CAPTURE(t);
        for (int j = 0; j < rs.n; ++j)
            for (int i = 0; i < rs.n; ++i)
                CHECK(rs.simple_coroot_pair(rs.fundamental_weights[j], i) ==
                      (i == j ? 1 : 0));
    }
}

TEST_CASE("fundamental coordinate maps invert each other") {
    RootSystem rs = build_root_system("F4");
    QVec lam{rat(3, 2), rat(-1), rat(0), rat(7, 3)};
    CHECK(rs.from_fundamental_coords(rs.to_fundamental_coords(lam)) == lam);
    QVec m{rat(1), rat(0), rat(-2), rat(5, 4)};
    CHECK(rs.to_fundamental_coords(rs.from_fundamental_coords(m)) == m);
}

TEST_CASE("reflections preserve the inner product and fix root lengths") {
    RootSystem rs = build_root_system("G2");
    QVec a1{1, 0};
    QVec a2{0, 1};
    CHECK(rs.inner(a1, a1) == 2);  // short
    CHECK(rs.inner(a2, a2) == 6);  // long
    CHECK(rs.inner(a1, a2) == -3);
    for (const auto& beta : rs.positive_roots) {
        QVec bq(beta.begin(), beta.end());
        CHECK(rs.inner(rs.reflect_simple(0, bq), rs.reflect_simple(0, bq)) ==
              rs.inner(bq, bq));
        CHECK(rs.reflect_root(beta, bq) == QVec{-bq[0], -bq[1]});
    }
}

TEST_CASE("weyl group orders") {
    CHECK(build_root_system("A3").weyl_order == 24);
    CHECK(build_root_system("B3").weyl_order == 48);
    CHECK(build_root_system("C2").weyl_order == 8);
    CHECK(build_root_system("D4").weyl_order == 192);
    CHECK(build_root_system("F4").weyl_order == 1152);
    CHECK(build_root_system("G2").weyl_order == 12);
    CHECK(build_root_system("E6").weyl_order == 51840);
    CHECK(build_root_system("E8").weyl_order == 696729600);
}
