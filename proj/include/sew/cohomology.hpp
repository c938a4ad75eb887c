#pragma once

// Cochain complex of a finite group with U(1) coefficients.  Values are
// exact rationals in [0,1) (phase exponents), so cocycle and equivalence
// tests are exact.

#include <functional>
#include <string>
#include <vector>

#include "sew/group.hpp"

namespace sew {

struct Cochain {
    GroupPtr group;
    int degree = 0;
    bool homogeneous = false;  // homogeneous cochains take degree+1 arguments
    std::vector<Rat> vals;     // indexed by |G|^nargs tuples, little-endian

    int nargs() const { return degree + (homogeneous ? 1 : 0); }
    size_t size() const {
        size_t s = 1;
        for (int i = 0; i < nargs(); ++i) s *= group->n;
        return s;
    }
    size_t index(const std::vector<int>& g) const {
        size_t ix = 0;
        for (int i = nargs() - 1; i >= 0; --i) ix = ix * group->n + g[i];
        return ix;
    }
    const Rat& at(const std::vector<int>& g) const { return vals[index(g)]; }
    Rat& at(const std::vector<int>& g) { return vals[index(g)]; }
    bool is_trivial() const {
        for (auto& v : vals)
            if (!v.mod1().is_zero()) return false;
        return true;
    }
};

Cochain zero_cochain(const GroupPtr& g, int degree, bool homogeneous = false);
Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);
Cochain slant_product(const Cochain& c, int g);
Cochain cup_product(const Cochain& a, const Cochain& b);   // homogeneous flavor
Cochain to_homogeneous(const Cochain& c);
Cochain to_inhomogeneous(const Cochain& nu);
Cochain cochain_mul(const Cochain& a, const Cochain& b);   // pointwise sum of exponents
Cochain cochain_inv(const Cochain& a);

// omega' / omega = delta(chi) solvable with chi valued in (1/M')Z/Z,
// M' = |G|^2 (absorbs the coefficient-sequence kernel).
bool are_cohomologous(const Cochain& a, const Cochain& b);

// Isomorphism type of H^n(G, U(1)) as invariant factors, via Smith normal
// form over Z_{p^{v_p(|G|)}} corrected by the image of H^{n-1}(G, U(1)).
std::vector<long long> cohomology_group(const GroupPtr& g, int n);

// The paper's named cocycles.
//   typeI-3cocycle(p)            on Z2        : (-1)^{p g1 g2 g3}
//   typeII-3cocycle(p)           on Z2xZ2     : (-1)^{p g1^(1) g2^(2) g3^(2)}
//   typeIII-3cocycle(p)          on Z2^3      : (-1)^{p g1^(1) g2^(2) g3^(3)}
//   abelian-typeII-2cocycle(k,i,j) on a cyclic product: exp(2 pi i k a_i b_j / gcd(n_i,n_j))
//   s3xs3-2cocycle               on S3xS3     : (-1)^{q1 q2'}
//   z3z3z2-2cocycle(n)           on (Z3xZ3):Z2: exp(2 pi i n i1 j2 (-1)^{k1} / 3)
//   cluster-2cocycle             on Z2xZ2     : (-1)^{a1 b2}
Cochain cocycle_library(const std::string& name, const std::vector<int>& params = {});

// Topological action for a product of cyclic groups split into named copies
// A/B/C: coefficient k over gcd(n_i, n_j) per cup pair.
struct TopAction {
    std::vector<int> moduli;                 // per-copy factor moduli (one copy's G)
    int ncopies = 1;                         // 1, 2 (A,B) or 3 (A,B,C)
    // coeff[c1][c2] is a qxq integer matrix; entry (i,j) multiplies the
    // cup product X^{c1}_i u X^{c2}_j with weight coeff/gcd(n_i,n_j).
    std::vector<std::vector<std::vector<int>>> coeff;

    int q() const { return (int)moduli.size(); }
    static TopAction zero(const std::vector<int>& moduli, int ncopies);
    int& k(int c1, int i, int c2, int j) { return coeff[c1][c2][(size_t)i * q() + j]; }
    int kval(int c1, int i, int c2, int j) const { return coeff[c1][c2][(size_t)i * q() + j]; }
};

// 2-cocycle on the product group (ncopies * q cyclic factors) realizing the
// action: nu(a,b) = sum k_{IJ}/gcd * a_I b_J.
Cochain action_to_cocycle(const TopAction& a);
GroupPtr action_group(const TopAction& a);

}  // namespace sew
