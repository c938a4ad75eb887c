#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sew/group.hpp"

using namespace sew;

TEST_CASE("cyclic products") {
    auto z2 = make_group("Z2");
    CHECK(z2->n == 2);
    auto z24 = make_group("Z2xZ4");
    CHECK(z24->n == 8);
    CHECK(z24->is_abelian());
    for (int g = 0; g < z24->n; ++g) {
        auto cls = z24->conjugacy_classes();
        CHECK(cls.size() == 8);  // abelian: all singletons
        break;
    }
    CHECK_THROWS(make_group("Z1"));
    CHECK_THROWS(make_group("Q8"));
}

TEST_CASE("s3 presentation") {
    auto s3 = make_s3();
    CHECK(s3->n == 6);
    int c = Group::s3_index(1, 0), t = Group::s3_index(0, 1);
    // tct = c^2
    CHECK(s3->mul(s3->mul(t, c), t) == s3->pow(c, 2));
    CHECK(s3->pow(c, 3) == s3->id());
    CHECK(s3->pow(t, 2) == s3->id());
    // classes {e}, [c] (size 2), [t] (size 3)
    auto cls = s3->conjugacy_classes();
    REQUIRE(cls.size() == 3);
    std::vector<size_t> sizes;
    for (auto& k : cls) sizes.push_back(k.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});
    // centralizer of c is {e,c,c2}
    auto zc = s3->centralizer(c);
    CHECK(zc == std::vector<int>{0, 1, 2});
}

TEST_CASE("z3z3 semidirect z2") {
    auto g = make_z3z3_z2();
    CHECK(g->n == 18);
    int c1 = Group::zzz_index(1, 0, 0), c2 = Group::zzz_index(0, 1, 0), t = Group::zzz_index(0, 0, 1);
    CHECK(g->mul(g->mul(t, c1), t) == g->pow(c1, 2));
    CHECK(g->mul(g->mul(t, c2), t) == g->pow(c2, 2));
    CHECK(g->mul(c1, c2) == g->mul(c2, c1));
}

TEST_CASE("s3 irreps: dimensions, homomorphism, orthogonality") {
    auto s3 = make_s3();
    auto reps = s3->irreps();
    REQUIRE(reps.size() == 3);
    int sum = 0;
    for (auto& r : reps) sum += r.dim * r.dim;
    CHECK(sum == 6);
    // rho(g) rho(h) = rho(gh), all irreps
    for (auto& r : reps)
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                int ab = s3->mul(a, b);
                for (int i = 0; i < r.dim; ++i)
                    for (int j = 0; j < r.dim; ++j) {
                        Cyc acc;
                        for (int k = 0; k < r.dim; ++k) acc = acc + r.at(a, i, k) * r.at(b, k, j);
                        CHECK(acc == r.at(ab, i, j));
                    }
            }
    // unitarity: rho(g) rho(g)^dagger = 1
    for (auto& r : reps)
        for (int a = 0; a < 6; ++a)
            for (int i = 0; i < r.dim; ++i)
                for (int j = 0; j < r.dim; ++j) {
                    Cyc acc;
                    for (int k = 0; k < r.dim; ++k) acc = acc + r.at(a, i, k) * r.at(a, j, k).conj();
                    CHECK(acc == (i == j ? Cyc(1) : Cyc(0)));
                }
    // character orthogonality
    for (size_t x = 0; x < reps.size(); ++x)
        for (size_t y = 0; y < reps.size(); ++y) {
            Cyc acc;
            for (int a = 0; a < 6; ++a) acc = acc + reps[x].character(a) * reps[y].character(a).conj();
            CHECK(acc == (x == y ? Cyc(6) : Cyc(0)));
        }
    // rho_pi(c) diagonal with entries e^{+-2pi i/3}
    auto& pi = reps[2];
    int c = Group::s3_index(1, 0);
    CHECK(pi.at(c, 0, 0) == Cyc::root(8));
    CHECK(pi.at(c, 1, 1) == Cyc::root(16));
    CHECK(pi.at(c, 0, 1).is_zero());
}

TEST_CASE("rep(s3) fusion: pi x pi = 1 + s + pi by characters") {
    auto s3 = make_s3();
    auto reps = s3->irreps();
    // multiplicity of irrep r in pi(x)pi: (1/|G|) sum chi_pi^2 chi_r*
    for (size_t r = 0; r < 3; ++r) {
        Cyc acc;
        for (int a = 0; a < 6; ++a)
            acc = acc + reps[2].character(a) * reps[2].character(a) * reps[r].character(a).conj();
        CHECK(acc == Cyc(6));  // multiplicity 1 each
    }
}

TEST_CASE("abelian irreps orthogonality") {
    auto g = make_group("Z2xZ4");
    auto reps = g->irreps();
    REQUIRE(reps.size() == 8);
    for (size_t x = 0; x < reps.size(); ++x)
        for (size_t y = 0; y < reps.size(); ++y) {
            Cyc acc;
            for (int a = 0; a < 8; ++a) acc = acc + reps[x].character(a) * reps[y].character(a).conj();
            CHECK(acc == (x == y ? Cyc(8) : Cyc(0)));
        }
}

TEST_CASE("direct product of s3 copies") {
    auto g = make_group("S3xS3");
    CHECK(g->n == 36);
    CHECK_FALSE(g->is_abelian());
    CHECK(g->conjugacy_classes().size() == 9);
}
