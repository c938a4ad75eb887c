#include "sew/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sew/zmod.hpp"

namespace sew {

Cochain zero_cochain(const GroupPtr& g, int degree, bool homogeneous) {
    Cochain c;
    c.group = g;
    c.degree = degree;
    c.homogeneous = homogeneous;
    c.vals.assign(c.size(), Rat(0));
    return c;
}

static void for_tuples(int n, int len, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> t(len, 0);
    while (true) {
        fn(t);
        int i = 0;
        while (i < len && ++t[i] == n) t[i++] = 0;
        if (i == len) break;
    }
}

Cochain coboundary(const Cochain& c) {
    const auto& G = *c.group;
    Cochain d;
    d.group = c.group;
    d.degree = c.degree + 1;
    d.homogeneous = c.homogeneous;
    d.vals.assign(d.size(), Rat(0));
    if (c.homogeneous) {
        // (delta nu)(g0..g_{n+1}) = sum_i (-1)^i nu(..omit g_i..)
        for_tuples(G.n, d.nargs(), [&](const std::vector<int>& g) {
            Rat acc(0);
            std::vector<int> sub(c.nargs());
            for (int omit = 0; omit < d.nargs(); ++omit) {
                int k = 0;
                for (int i = 0; i < d.nargs(); ++i)
                    if (i != omit) sub[k++] = g[i];
                Rat v = c.at(sub);
                acc = (omit % 2 == 0) ? acc + v : acc - v;
            }
            d.at(g) = acc.mod1();
        });
        return d;
    }
    int n = c.degree;
    for_tuples(G.n, n + 1, [&](const std::vector<int>& g) {
        Rat acc(0);
        std::vector<int> sub(n);
        // c(g2..g_{n+1})
        for (int i = 0; i < n; ++i) sub[i] = g[i + 1];
        acc = acc + c.at(sub);
        // (-1)^{n+1} c(g1..gn)
        for (int i = 0; i < n; ++i) sub[i] = g[i];
        acc = ((n + 1) % 2 == 0) ? acc + c.at(sub) : acc - c.at(sub);
        // sum_i (-1)^i c(g1,..,g_i g_{i+1},..,g_{n+1})
        for (int i = 1; i <= n; ++i) {
            int k = 0;
            for (int j = 0; j < n + 1; ++j) {
                if (j == i - 1) { sub[k++] = G.mul(g[j], g[j + 1]); ++j; }
                else sub[k++] = g[j];
            }
            Rat v = c.at(sub);
            acc = (i % 2 == 0) ? acc + v : acc - v;
        }
        d.at(g) = acc.mod1();
    });
    return d;
}

bool is_cocycle(const Cochain& c) { return coboundary(c).is_trivial(); }

Cochain slant_product(const Cochain& c, int g) {
    if (c.homogeneous) throw std::invalid_argument("slant_product expects inhomogeneous flavor");
    if (c.degree < 1) throw std::invalid_argument("slant_product needs degree >= 1");
    const auto& G = *c.group;
    Cochain r = zero_cochain(c.group, c.degree - 1);
    int n1 = c.degree - 1;  // output degree
    for_tuples(G.n, n1, [&](const std::vector<int>& h) {
        Rat acc(0);
        std::vector<int> arg(c.degree);
        // (-1)^{n1} c(g, h1..h_{n1})
        arg[0] = g;
        for (int i = 0; i < n1; ++i) arg[i + 1] = h[i];
        acc = (n1 % 2 == 0) ? acc + c.at(arg) : acc - c.at(arg);
        // sum_i (-1)^{n1+i} c(h1..h_i, g, h_{i+1}..)
        for (int i = 1; i <= n1; ++i) {
            int k = 0;
            for (int j = 0; j < i; ++j) arg[k++] = h[j];
            arg[k++] = g;
            for (int j = i; j < n1; ++j) arg[k++] = h[j];
            Rat v = c.at(arg);
            acc = ((n1 + i) % 2 == 0) ? acc + v : acc - v;
        }
        r.at(h) = acc.mod1();
    });
    return r;
}

Cochain cup_product(const Cochain& a, const Cochain& b) {
    if (!a.homogeneous || !b.homogeneous) throw std::invalid_argument("cup_product expects homogeneous cochains");
    if (a.group != b.group && a.group->n != b.group->n) throw std::invalid_argument("cup_product: group mismatch");
    const auto& G = *a.group;
    Cochain r;
    r.group = a.group;
    r.degree = a.degree + b.degree;
    r.homogeneous = true;
    r.vals.assign(r.size(), Rat(0));
    for_tuples(G.n, r.nargs(), [&](const std::vector<int>& g) {
        std::vector<int> ga(g.begin(), g.begin() + a.degree + 1);
        std::vector<int> gb(g.begin() + a.degree, g.end());
        r.at(g) = (a.at(ga) + b.at(gb)).mod1();
    });
    return r;
}

Cochain to_inhomogeneous(const Cochain& nu) {
    if (!nu.homogeneous) return nu;
    const auto& G = *nu.group;
    Cochain c = zero_cochain(nu.group, nu.degree);
    for_tuples(G.n, nu.degree, [&](const std::vector<int>& g) {
        std::vector<int> arg(nu.degree + 1);
        arg[0] = G.id();
        for (int i = 0; i < nu.degree; ++i) arg[i + 1] = G.mul(arg[i], g[i]);
        c.at(g) = nu.at(arg);
    });
    return c;
}

Cochain to_homogeneous(const Cochain& c) {
    if (c.homogeneous) return c;
    const auto& G = *c.group;
    Cochain nu;
    nu.group = c.group;
    nu.degree = c.degree;
    nu.homogeneous = true;
    nu.vals.assign(nu.size(), Rat(0));
    for_tuples(G.n, c.degree + 1, [&](const std::vector<int>& g) {
        std::vector<int> arg(c.degree);
        for (int i = 0; i < c.degree; ++i) arg[i] = G.mul(G.inv(g[i]), g[i + 1]);
        nu.at(g) = c.at(arg);
    });
    return nu;
}

Cochain cochain_mul(const Cochain& a, const Cochain& b) {
    Cochain r = a;
    for (size_t i = 0; i < r.vals.size(); ++i) r.vals[i] = (r.vals[i] + b.vals[i]).mod1();
    return r;
}

Cochain cochain_inv(const Cochain& a) {
    Cochain r = a;
    for (auto& v : r.vals) v = (-v).mod1();
    return r;
}

// ------------------------------------------------------------------ solving

// Assemble the coboundary matrix delta: C^{deg} -> C^{deg+1} as sparse rows
// over the |G|^{deg} unknowns (one row per (deg+1)-tuple).
static std::vector<SparseRow> coboundary_rows(const Group& G, int deg) {
    Cochain probe;
    probe.group = nullptr;
    int nun = 1;
    for (int i = 0; i < deg; ++i) nun *= G.n;
    std::vector<SparseRow> rows;
    std::vector<int> sub(deg);
    auto index_of = [&](const std::vector<int>& arg) {
        size_t ix = 0;
        for (int i = deg - 1; i >= 0; --i) ix = ix * G.n + arg[i];
        return (int)ix;
    };
    for_tuples(G.n, deg + 1, [&](const std::vector<int>& g) {
        std::map<int, long long> row;
        auto add = [&](const std::vector<int>& arg, long long s) { row[index_of(arg)] += s; };
        for (int i = 0; i < deg; ++i) sub[i] = g[i + 1];
        add(sub, 1);
        for (int i = 0; i < deg; ++i) sub[i] = g[i];
        add(sub, (deg + 1) % 2 == 0 ? 1 : -1);
        for (int i = 1; i <= deg; ++i) {
            int k = 0;
            for (int j = 0; j < deg + 1; ++j) {
                if (j == i - 1) { sub[k++] = G.mul(g[j], g[j + 1]); ++j; }
                else sub[k++] = g[j];
            }
            add(sub, i % 2 == 0 ? 1 : -1);
        }
        SparseRow sr;
        for (auto& kv : row)
            if (kv.second) sr.push_back(kv);
        rows.push_back(std::move(sr));
    });
    (void)nun;
    return rows;
}

bool are_cohomologous(const Cochain& a, const Cochain& b) {
    if (a.group->n != b.group->n || a.degree != b.degree)
        throw std::invalid_argument("are_cohomologous: mismatched cochains");
    const auto& G = *a.group;
    Cochain d = cochain_mul(to_inhomogeneous(b), cochain_inv(to_inhomogeneous(a)));
    if (d.is_trivial()) return true;
    if (d.degree < 1) return false;
    long long M = (long long)G.n * G.n;
    for (auto& v : d.vals) M = std::lcm(M, v.den);
    int nun = 1;
    for (int i = 0; i < d.degree - 1; ++i) nun *= G.n;
    auto rows = coboundary_rows(G, d.degree - 1);
    long long rem = M;
    for (long long p = 2; rem > 1; ++p) {
        if (rem % p) continue;
        int k = 0;
        long long pk = 1;
        while (rem % p == 0) { rem /= p; ++k; pk *= p; }
        // compress the augmented system [A|b] with invertible row ops, then
        // test b in im(A) on the small residue via dense SNF
        EchelonPk ech(p, k);
        for (size_t i = 0; i < rows.size(); ++i) {
            SparseRow r = rows[i];
            const Rat& v = d.vals[i];
            long long vm = (long long)(((__int128)v.num * (M / v.den)) % M);  // value in Z_M
            long long scaled = ((vm % pk) + pk) % pk;                          // project to Z_{p^k}
            if (scaled) r.push_back({nun, scaled});
            ech.insert(std::move(r));
        }
        auto basis = ech.rows();
        int m = (int)basis.size();
        if (m == 0) continue;
        std::vector<long long> A((size_t)m * nun, 0), bb(m, 0);
        for (int i = 0; i < m; ++i)
            for (auto& e : basis[i]) {
                if (e.first == nun) bb[i] = e.second;
                else A[(size_t)i * nun + e.first] = e.second;
            }
        SnfPk s = snf_mod_pk(std::move(A), m, nun, p, k);
        std::vector<long long> x;
        if (!solve_mod_pk(s, bb, x)) return false;
    }
    return true;
}

// Kernel generators of delta_deg over Z_{p^a}, via a sparse row basis of the
// cocycle system followed by a dense SNF on the compressed basis.
static std::vector<KernelGen> cocycle_kernel(const Group& G, int deg, long long p, int a) {
    long long pk = 1;
    for (int i = 0; i < a; ++i) pk *= p;
    int ncols = 1;
    for (int i = 0; i < deg; ++i) ncols *= G.n;
    EchelonPk ech(p, a);
    for (auto& r0 : coboundary_rows(G, deg)) {
        SparseRow sr;
        for (auto& kv : r0) {
            long long v = ((kv.second % pk) + pk) % pk;
            if (v) sr.push_back({kv.first, v});
        }
        if (!sr.empty()) ech.insert(std::move(sr));
    }
    auto basis = ech.rows();
    int nb = (int)basis.size();
    std::vector<long long> B((size_t)std::max(nb, 1) * ncols, 0);
    for (int i = 0; i < nb; ++i)
        for (auto& e : basis[i]) B[(size_t)i * ncols + e.first] = e.second;
    SnfPk sb = snf_mod_pk(std::move(B), std::max(nb, 1), ncols, p, a);
    return kernel_mod_pk(sb);
}

// H^n(G, U(1)) via Z_{p^a} coefficients with the H^{n-1} correction.
std::vector<long long> cohomology_group(const GroupPtr& gp, int n) {
    const auto& G = *gp;
    if (n == 0) return {};
    double tuples = 1;
    for (int i = 0; i < n + 1; ++i) tuples *= G.n;
    if (tuples > 2.5e5) throw std::invalid_argument("cohomology_group: size limit exceeded");

    std::vector<std::vector<long long>> parts;
    long long order = G.n;
    for (long long p = 2; order > 1; ++p) {
        if (order % p) continue;
        int a = 0;
        while (order % p == 0) { order /= p; ++a; }
        long long pk = 1;
        for (int i = 0; i < a; ++i) pk *= p;

        int ncols = 1;
        for (int i = 0; i < n; ++i) ncols *= G.n;
        int nprev = 1;
        for (int i = 0; i < n - 1; ++i) nprev *= G.n;

        auto kgens = cocycle_kernel(G, n, p, a);

        // coboundaries: delta of the (1/p^a)-valued basis cochains
        std::vector<std::vector<long long>> rels;
        for (int bix = 0; bix < nprev; ++bix) {
            Cochain c = zero_cochain(gp, n - 1);
            c.vals[bix] = Rat(1, pk);
            Cochain dc = coboundary(c);
            std::vector<long long> col(ncols, 0);
            bool nz = false;
            for (int i = 0; i < ncols; ++i) {
                const Rat& v = dc.vals[i];
                long long x = v.num * (pk / v.den) % pk;
                col[i] = ((x % pk) + pk) % pk;
                nz |= col[i] != 0;
            }
            if (nz) rels.push_back(std::move(col));
        }
        // correction: connecting images of H^{n-1}(G,U(1))_p generators,
        // delta(lift/p^a)*p^a for each Z_{p^a}-valued (n-1)-cocycle generator
        if (n >= 2) {
            for (auto& z : cocycle_kernel(G, n - 1, p, a)) {
                Cochain c = zero_cochain(gp, n - 1);
                for (int i = 0; i < nprev; ++i) c.vals[i] = Rat(z.vec[i], pk * pk);
                Cochain dc = coboundary(c);
                std::vector<long long> col(ncols, 0);
                bool nz = false;
                for (int i = 0; i < ncols; ++i) {
                    Rat v = dc.vals[i];
                    if ((pk * pk) % v.den != 0) throw std::logic_error("cohomology: connecting map denominator");
                    long long x = v.num * ((pk * pk) / v.den);
                    if (x % pk != 0) throw std::logic_error("cohomology: connecting map not integral");
                    col[i] = (x / pk) % pk;
                    nz |= col[i] != 0;
                }
                if (nz) rels.push_back(std::move(col));
            }
        }

        // module = <kgens> / <rels>
        int t = (int)kgens.size();
        if (t == 0) { parts.push_back({}); continue; }
        std::vector<long long> K((size_t)ncols * t, 0);
        std::vector<long long> ord(t);
        for (int j = 0; j < t; ++j) {
            ord[j] = kgens[j].ann;
            for (int i = 0; i < ncols; ++i) K[(size_t)i * t + j] = kgens[j].vec[i];
        }
        SnfPk sk = snf_mod_pk(std::move(K), ncols, t, p, a);
        std::vector<std::vector<long long>> relcoords;
        for (auto& r : rels) {
            std::vector<long long> y;
            if (!solve_mod_pk(sk, r, y)) throw std::logic_error("cohomology: image not inside kernel");
            relcoords.push_back(std::move(y));
        }
        parts.push_back(module_invariants_pk(relcoords, ord, p, a));
    }
    return crt_invariants(std::move(parts));
}

// ------------------------------------------------------------------ library

Cochain cocycle_library(const std::string& name, const std::vector<int>& params) {
    auto bit = [](int x) { return x & 1; };
    if (name == "typeI-3cocycle") {
        int p = params.empty() ? 1 : params[0];
        auto g = make_cyclic_product({2});
        Cochain c = zero_cochain(g, 3);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int d = 0; d < 2; ++d) c.at({a, b, d}) = Rat(p * a * b * d, 2).mod1();
        return c;
    }
    if (name == "typeII-3cocycle") {
        int p = params.empty() ? 1 : params[0];
        auto g = make_cyclic_product({2, 2});
        Cochain c = zero_cochain(g, 3);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int d = 0; d < 4; ++d)
                    c.at({a, b, d}) = Rat(p * bit(a) * bit(b >> 1) * bit(d >> 1), 2).mod1();
        return c;
    }
    if (name == "typeIII-3cocycle") {
        int p = params.empty() ? 1 : params[0];
        auto g = make_cyclic_product({2, 2, 2});
        Cochain c = zero_cochain(g, 3);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                for (int d = 0; d < 8; ++d)
                    c.at({a, b, d}) = Rat(p * bit(a) * bit(b >> 1) * bit(d >> 2), 2).mod1();
        return c;
    }
    if (name == "cluster-2cocycle") {
        auto g = make_cyclic_product({2, 2});
        Cochain c = zero_cochain(g, 2);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) c.at({a, b}) = Rat(bit(a) * bit(b >> 1), 2).mod1();
        return c;
    }
    if (name == "abelian-typeII-2cocycle") {
        // params: k, i, j, then the moduli list
        if (params.size() < 4) throw std::invalid_argument("abelian-typeII-2cocycle needs (k,i,j,moduli...)");
        int k = params[0], i = params[1], j = params[2];
        std::vector<int> moduli(params.begin() + 3, params.end());
        auto g = make_cyclic_product(moduli);
        int gc = std::gcd(moduli[i], moduli[j]);
        if (k < 0 || k >= gc) throw std::invalid_argument("abelian-typeII-2cocycle: k out of range");
        Cochain c = zero_cochain(g, 2);
        for (int a = 0; a < g->n; ++a)
            for (int b = 0; b < g->n; ++b)
                c.at({a, b}) = Rat((long long)k * g->exps[a][i] * g->exps[b][j], gc).mod1();
        return c;
    }
    if (name == "s3xs3-2cocycle") {
        auto s3 = make_s3();
        auto g = make_product(s3, s3);
        Cochain c = zero_cochain(g, 2);
        for (int a = 0; a < 36; ++a)
            for (int b = 0; b < 36; ++b) {
                auto [n1, q1] = Group::s3_nq(a % 6);   // first copy of first argument
                auto [n2p, q2p] = Group::s3_nq(b / 6); // second copy of second argument
                (void)n1; (void)n2p;
                c.at({a, b}) = Rat(q1 * q2p, 2).mod1();
            }
        return c;
    }
    if (name == "z3z3z2-2cocycle") {
        int nn = params.empty() ? 1 : params[0];
        auto g = make_z3z3_z2();
        Cochain c = zero_cochain(g, 2);
        for (int a = 0; a < 18; ++a)
            for (int b = 0; b < 18; ++b) {
                auto [i1, j1, k1] = Group::zzz_ijk(a);
                auto [i2, j2, k2] = Group::zzz_ijk(b);
                (void)j1; (void)i2; (void)k2;
                long long e = (long long)nn * i1 * j2 * (k1 ? -1 : 1);
                c.at({a, b}) = Rat(e, 3).mod1();
            }
        return c;
    }
    throw std::invalid_argument("cocycle_library: unknown name " + name);
}

TopAction TopAction::zero(const std::vector<int>& moduli, int ncopies) {
    TopAction a;
    a.moduli = moduli;
    a.ncopies = ncopies;
    a.coeff.assign(ncopies, std::vector<std::vector<int>>(
                                 ncopies, std::vector<int>(moduli.size() * moduli.size(), 0)));
    return a;
}

GroupPtr action_group(const TopAction& a) {
    std::vector<int> all;
    for (int c = 0; c < a.ncopies; ++c) all.insert(all.end(), a.moduli.begin(), a.moduli.end());
    return make_cyclic_product(all);
}

Cochain action_to_cocycle(const TopAction& a) {
    auto g = action_group(a);
    int q = a.q();
    Cochain c = zero_cochain(g, 2);
    for (int x = 0; x < g->n; ++x)
        for (int y = 0; y < g->n; ++y) {
            Rat acc(0);
            for (int c1 = 0; c1 < a.ncopies; ++c1)
                for (int c2 = 0; c2 < a.ncopies; ++c2)
                    for (int i = 0; i < q; ++i)
                        for (int j = 0; j < q; ++j) {
                            int k = a.kval(c1, i, c2, j);
                            if (!k) continue;
                            int gc = std::gcd(a.moduli[i], a.moduli[j]);
                            acc = acc + Rat((long long)k * g->exps[x][c1 * q + i] * g->exps[y][c2 * q + j], gc);
                        }
            c.at({x, y}) = acc.mod1();
        }
    return c;
}

}  // namespace sew
