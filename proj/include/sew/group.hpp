#pragma once

// Finite-group core: multiplication tables, conjugacy data and the irreps of
// the groups used by the models (cyclic products, S3, (Z3xZ3):Z2 and direct
// products thereof).  Elements carry a canonical index 0..n-1 plus a
// structured form used by the gauging code.

#include <memory>
#include <string>
#include <vector>

#include "sew/num.hpp"

namespace sew {

enum class GroupKind { CyclicProduct, S3, Z3Z3Z2, Product };

struct Irrep {
    std::string label;
    int dim = 1;
    std::vector<std::vector<Cyc>> mats;  // per element, dim x dim row-major

    const Cyc& at(int g, int r, int c) const { return mats[g][(size_t)r * dim + c]; }
    Cyc character(int g) const {
        Cyc t;
        for (int r = 0; r < dim; ++r) t = t + at(g, r, r);
        return t;
    }
};

class Group {
  public:
    GroupKind kind;
    std::string name;
    int n = 0;                        // order
    std::vector<int> mul_table;       // n x n
    std::vector<int> inv_table;
    std::vector<std::string> elem_names;
    std::vector<int> moduli;          // cyclic products: factor moduli
    std::vector<std::vector<int>> exps;  // cyclic products: exponent tuples

    int mul(int a, int b) const { return mul_table[(size_t)a * n + b]; }
    int inv(int a) const { return inv_table[a]; }
    int id() const { return 0; }
    bool is_abelian() const {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }
    int order_of(int g) const {
        int k = 1, x = g;
        while (x != 0) { x = mul(x, g); ++k; }
        return k;
    }
    int exponent() const {
        long long e = 1;
        for (int g = 0; g < n; ++g) e = std::lcm(e, (long long)order_of(g));
        return (int)e;
    }
    int conj(int h, int g) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
    int pow(int g, int k) const {
        int r = 0;
        k %= order_of(g);
        if (k < 0) k += order_of(g);
        for (int i = 0; i < k; ++i) r = mul(r, g);
        return r;
    }

    std::vector<std::vector<int>> conjugacy_classes() const;
    std::vector<int> centralizer(int g) const;
    std::vector<Irrep> irreps() const;

    // S3 structured form: g = c^n t^q, element index = n + 3q.
    static int s3_index(int nn, int q) { return ((nn % 3 + 3) % 3) + 3 * ((q % 2 + 2) % 2); }
    static std::pair<int, int> s3_nq(int g) { return {g % 3, g / 3}; }

    // (Z3xZ3):Z2 structured form: g = c1^i c2^j t^k, index = i + 3j + 9k.
    static int zzz_index(int i, int j, int k) {
        return ((i % 3 + 3) % 3) + 3 * ((j % 3 + 3) % 3) + 9 * ((k % 2 + 2) % 2);
    }
    static std::array<int, 3> zzz_ijk(int g) { return {g % 3, (g / 3) % 3, g / 9}; }

    void validate() const;  // associativity, identity, inverses (order <= 40 exhaustive)
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr make_cyclic_product(const std::vector<int>& moduli);
GroupPtr make_s3();
GroupPtr make_z3z3_z2();
GroupPtr make_product(const GroupPtr& a, const GroupPtr& b);

// Parse descriptors from the CLI config grammar: "Z2", "Z2xZ4", "S3",
// "Z3Z3:Z2", "S3xS3".
GroupPtr make_group(const std::string& descriptor);

}  // namespace sew
