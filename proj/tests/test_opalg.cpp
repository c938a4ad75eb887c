#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sew/opalg.hpp"

using namespace sew;

static Sites s3_sites(int n) {
    Sites st;
    auto g = make_s3();
    for (int i = 0; i < n; ++i) st.add(g);
    return st;
}

TEST_CASE("primitive relations: L+^g L+^h = L+^{gh}, L-^g L-^h = L-^{hg}") {
    Sites st = s3_sites(1);
    auto g3 = make_s3();
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) {
            OpSum lhs = op_mul(st, op_lplus(st, 0, g), op_lplus(st, 0, h));
            CHECK(op_equal(st, lhs, op_lplus(st, 0, g3->mul(g, h))));
            // with L-^g|h> = |h g^-1> the right actions compose as L-^{gh}
            OpSum lhs2 = op_mul(st, op_lminus(st, 0, g), op_lminus(st, 0, h));
            CHECK(op_equal(st, lhs2, op_lminus(st, 0, g3->mul(g, h))));
            OpSum lhs3 = op_mul(st, op_tplus(st, 0, g), op_tplus(st, 0, h));
            if (g == h) CHECK(op_equal(st, lhs3, op_tplus(st, 0, g)));
            else CHECK(op_is_zero(st, lhs3));
            CHECK(commutator_is_zero(st, op_lplus(st, 0, g), op_lminus(st, 0, h)));
        }
}

TEST_CASE("L+^e is the identity") {
    Sites st = s3_sites(2);
    CHECK(op_equal(st, op_lplus(st, 0, 0), op_identity()));
}

TEST_CASE("S3 diagonals act as stated") {
    Sites st = s3_sites(1);
    int ct = Group::s3_index(1, 1);
    OpSum zl = op_s3_zl(st, 0);
    OpSum proj = op_tplus(st, 0, ct);
    OpSum lhs = op_mul(st, zl, proj);
    CHECK(op_equal(st, lhs, op_scale(proj, Cyc::root(8))));
    int c2t = Group::s3_index(2, 1);
    OpSum z = op_s3_z(st, 0);
    OpSum p2 = op_tplus(st, 0, c2t);
    CHECK(op_equal(st, op_mul(st, z, p2), op_scale(p2, Cyc(-1))));
    auto g3 = make_s3();
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) {
            OpSum conj = op_conjugate(st, op_tplus(st, 0, h), op_sigma(st, 0, g));
            CHECK(op_equal(st, conj, op_tplus(st, 0, g3->conj(h, g))));
        }
}

TEST_CASE("mpo symmetry: identity irrep, sign product, fusion") {
    Sites st = s3_sites(3);
    auto reps = make_s3()->irreps();
    OpSum b1 = mpo_symmetry(st, reps[0], {0, 1, 2});
    CHECK(op_equal(st, b1, op_identity()));
    OpSum bs = mpo_symmetry(st, reps[1], {0, 1});
    OpSum prod = op_mul(st, op_s3_z(st, 0), op_s3_z(st, 1));
    CHECK(op_equal(st, bs, prod));
    OpSum bpi = mpo_symmetry(st, reps[2], {0, 1, 2});
    OpSum lhs = op_mul(st, bpi, bpi);
    OpSum rhs = op_add(st, op_add(st, mpo_symmetry(st, reps[0], {0, 1, 2}),
                                  mpo_symmetry(st, reps[1], {0, 1, 2})),
                        bpi);
    CHECK(op_equal(st, lhs, rhs));
}

TEST_CASE("dagger and conjugation") {
    Sites st = s3_sites(1);
    for (int g = 0; g < 6; ++g) {
        OpSum l = op_lplus(st, 0, g);
        OpSum unit = op_mul(st, l, op_dagger(st, l));
        CHECK(op_equal(st, unit, op_identity()));
    }
    OpSum zl = op_s3_zl(st, 0);
    OpSum zl2 = op_dagger(st, op_dagger(st, zl));
    CHECK(op_equal(st, zl, zl2));
}

TEST_CASE("cellular fast path agrees with streaming on dressed shifts") {
    Sites st;
    auto z2 = make_group("Z2");
    for (int i = 0; i < 4; ++i) st.add(z2);
    auto cz = [&](int a, int b) {
        return op_cell(st, {a, b}, [](const std::vector<int>& d) { return Rat(d[0] * d[1], 2); });
    };
    OpSum a = op_mul(st, op_lplus(st, 0, 1), cz(1, 2));
    OpSum b = op_mul(st, op_lplus(st, 3, 1), cz(1, 2));
    CHECK(commutator_is_zero(st, a, b));
    OpSum c = op_mul(st, op_lplus(st, 1, 1), cz(1, 2));
    bool fast = commutator_is_zero(st, a, c);
    OpSum ab = op_mul(st, a, c), ba = op_mul(st, c, a);
    bool exact = op_equal(st, ab, ba);
    CHECK(fast == exact);
}

TEST_CASE("toric code on a 2x2 torus: commuting terms, ground dim 4") {
    Sites st;
    auto z2 = make_group("Z2");
    for (int i = 0; i < 8; ++i) st.add(z2);
    auto ex = [&](int x, int y) { return 2 * ((x & 1) + 2 * (y & 1)); };
    auto ey = [&](int x, int y) { return ex(x, y) + 1; };
    StabilizerModel m;
    m.sites = st;
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 2; ++x) {
            OpSum a = op_identity();
            for (int e : {ex(x, y), ex(x - 1, y), ey(x, y), ey(x, y - 1)})
                a = op_mul(st, a, op_lplus(st, e, 1));
            m.terms.push_back({"A", a});
            m.patch_projectors.push_back(op_scale(op_add(st, op_identity(), a), Cyc(Rat(1, 2))));
            OpSum b = op_identity();
            for (int e : {ex(x, y), ex(x, y + 1), ey(x, y), ey(x + 1, y)})
                b = op_mul(st, b, op_zphase(st, e, 1));
            m.terms.push_back({"B", b});
            m.patch_projectors.push_back(op_scale(op_add(st, op_identity(), b), Cyc(Rat(1, 2))));
        }
    for (int i = 0; i < 8; ++i) m.patch_sites.push_back(i);
    auto rep = check_model(m);
    CHECK(rep.passed());
    CHECK(rep.ground_dim == Rat(4));
    StabilizerModel bad = m;
    bad.terms[1].op = op_scale(bad.terms[1].op, Cyc(-1));
    bad.patch_projectors[1] =
        op_scale(op_add(bad.sites, op_identity(), bad.terms[1].op), Cyc(Rat(1, 2)));
    auto rep2 = check_model(bad);
    CHECK_FALSE(rep2.frustration_free);
}

TEST_CASE("cluster chain ground space: 4 on open 4-site chain") {
    Sites st;
    auto z2 = make_group("Z2");
    for (int i = 0; i < 4; ++i) st.add(z2);
    std::vector<OpSum> projs;
    for (int i = 1; i < 3; ++i) {
        OpSum zxz = op_mul(st, op_mul(st, op_zphase(st, i - 1, 1), op_lplus(st, i, 1)),
                           op_zphase(st, i + 1, 1));
        projs.push_back(op_scale(op_add(st, op_identity(), zxz), Cyc(Rat(1, 2))));
    }
    CHECK(ground_space_dim(st, {0, 1, 2, 3}, projs) == Rat(4));
}

TEST_CASE("trivial product-state model has ground dim 1") {
    Sites st;
    auto z2 = make_group("Z2");
    for (int i = 0; i < 3; ++i) st.add(z2);
    std::vector<OpSum> projs;
    for (int i = 0; i < 3; ++i)
        projs.push_back(op_scale(op_add(st, op_identity(), op_lplus(st, i, 1)), Cyc(Rat(1, 2))));
    CHECK(ground_space_dim(st, {0, 1, 2}, projs) == Rat(1));
}

TEST_CASE("entangler conjugation: CZ dressing of X") {
    Sites st;
    auto z2 = make_group("Z2");
    for (int i = 0; i < 3; ++i) st.add(z2);
    Entangler u;
    for (int e = 0; e < 2; ++e) {
        PhaseCell c;
        c.sites = {e, e + 1};
        c.table = {Rat(0), Rat(0), Rat(0), Rat(1, 2)};
        u.cells.push_back(c);
    }
    OpSum conj = conjugate_by_entangler(st, op_lplus(st, 1, 1), u);
    OpSum want =
        op_mul(st, op_mul(st, op_zphase(st, 0, 1), op_lplus(st, 1, 1)), op_zphase(st, 2, 1));
    CHECK(op_equal(st, conj, want));
    auto bad = zero_cochain(make_group("Z2"), 2);
    bad.at({1, 0}) = Rat(1, 4);
    CHECK_THROWS(entangler_from_cocycle(st, bad, {{0, 1}}, {1}));
}
