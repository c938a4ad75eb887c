#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sew/num.hpp"
#include "sew/zmod.hpp"

using namespace sew;

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK((Rat(7, 3)).mod1() == Rat(1, 3));
    CHECK((Rat(-1, 3)).mod1() == Rat(2, 3));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
}

TEST_CASE("cyclotomic roots of unity") {
    // zeta^24 = 1, zeta^12 = -1
    CHECK(Cyc::root(24) == Cyc(1));
    CHECK(Cyc::root(12) == Cyc(-1));
    // 1 + w + w^2 = 0 for w = zeta^8
    Cyc w = Cyc::root(8);
    CHECK((Cyc(1) + w + w * w).is_zero());
    // i^2 = -1
    Cyc i = Cyc::root(6);
    CHECK(i * i == Cyc(-1));
    // conjugation
    CHECK(w.conj() == Cyc::root(16));
    CHECK((w * w.conj()) == Cyc(1));
    // phase from rationals
    CHECK(Cyc::phase(Rat(1, 3)) == w);
    CHECK(Cyc::phase(Rat(1, 2)) == Cyc(-1));
    CHECK(Cyc::phase(Rat(3, 4)) == -i);
    CHECK_THROWS(Cyc::phase(Rat(1, 5)));
}

TEST_CASE("cyclotomic products stay exact") {
    Cyc z = Cyc::root(1);
    Cyc acc(1);
    for (int k = 0; k < 48; ++k) acc = acc * z;
    CHECK(acc == Cyc(1));
    // sum of all 24th roots vanishes
    Cyc s;
    for (int k = 0; k < 24; ++k) s = s + Cyc::root(k);
    CHECK(s.is_zero());
}

TEST_CASE("snf over Z_{p^k}: kernel and solve") {
    // A = [[2,4],[0,4]] over Z_8
    std::vector<long long> A = {2, 4, 0, 4};
    SnfPk s = snf_mod_pk(A, 2, 2, 2, 3);
    // rank over Z_8 should be 2 with diagonal p-powers
    CHECK(s.rank == 2);
    auto ker = kernel_mod_pk(s);
    // check each kernel generator annihilates A
    for (auto& g : ker) {
        long long r0 = (2 * g.vec[0] + 4 * g.vec[1]) % 8;
        long long r1 = (4 * g.vec[1]) % 8;
        CHECK(r0 == 0);
        CHECK(r1 == 0);
    }
    std::vector<long long> b = {6, 4}, x;
    bool ok = solve_mod_pk(s, b, x);
    CHECK(ok);
    CHECK((2 * x[0] + 4 * x[1]) % 8 == 6);
    CHECK((4 * x[1]) % 8 == 4);
    std::vector<long long> b2 = {1, 0};
    CHECK_FALSE(solve_mod_pk(s, b2, x));
}

TEST_CASE("echelon row basis") {
    EchelonPk e(2, 2);  // Z_4
    e.insert({{0, 2}, {1, 1}});
    e.insert({{0, 2}, {1, 1}});
    e.insert({{1, 2}});
    auto rows = e.rows();
    CHECK(rows.size() == 2);
}

TEST_CASE("crt invariant combination") {
    auto inv = crt_invariants({{2, 4}, {3}});
    // largest-with-largest: 4*3=12, 2
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 12);
}
