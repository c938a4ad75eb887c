#pragma once

// Linear algebra over Z_{p^k} (local rings) plus small helpers shared by the
// cohomology module: sparse row echelon for big coboundary systems, dense
// Smith normal form for module presentations, and a CRT combiner for
// invariant factors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sew {

inline long long mod_pow(long long b, long long e, long long m) {
    long long r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Multiplicative inverse of a unit in Z_{p^k}.
inline long long unit_inv(long long a, long long p, long long pk) {
    // Euler: a^(phi(p^k)-1); phi(p^k) = p^k - p^(k-1)
    long long phi = pk - pk / p;
    return mod_pow(a, phi - 1, pk);
}

inline int p_valuation(long long a, long long p) {
    if (a == 0) return INT32_MAX;
    int v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

using SparseRow = std::vector<std::pair<int, long long>>;  // (col, val) sorted by col

// Row echelon over Z_{p^k}.  Rows are normalized so the leading entry is a
// pure power of p.  Used to compress huge sparse systems (cocycle
// conditions) to a small row basis before dense SNF.
class EchelonPk {
  public:
    EchelonPk(long long p, int k) : p_(p), pk_(1) {
        for (int i = 0; i < k; ++i) pk_ *= p;
    }

    long long modulus() const { return pk_; }

    // Reduce a row against current pivots and insert what is left.
    void insert(SparseRow row) {
        normalize(row);
        while (!row.empty()) {
            int lead = row.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                int v = p_valuation(row.front().second, p_);
                // scale so leading entry is exactly p^v
                long long u = row.front().second;
                long long pv = 1;
                for (int i = 0; i < v; ++i) pv *= p_;
                long long inv = unit_inv(u / pv % pk_, p_, pk_);
                for (auto& e : row) e.second = e.second * inv % pk_;
                pivots_.emplace(lead, std::move(row));
                return;
            }
            const SparseRow& piv = it->second;
            long long pl = piv.front().second;  // p^v
            long long rl = row.front().second;
            if (rl % pl == 0) {
                long long f = (rl / pl) % pk_;
                row = axpy(row, piv, pk_ - f);
            } else {
                // pivot has higher valuation: swap roles
                long long f = (pl / keep_pow(rl)) % pk_;
                SparseRow old = it->second;
                int v = p_valuation(row.front().second, p_);
                long long pv = 1;
                for (int i = 0; i < v; ++i) pv *= p_;
                long long inv = unit_inv(row.front().second / pv % pk_, p_, pk_);
                for (auto& e : row) e.second = e.second * inv % pk_;
                it->second = row;
                row = axpy(old, row, pk_ - f);
            }
            normalize(row);
        }
    }

    std::vector<SparseRow> rows() const {
        std::vector<SparseRow> out;
        out.reserve(pivots_.size());
        for (auto& kv : pivots_) out.push_back(kv.second);
        return out;
    }

  private:
    long long p_;
    long long pk_;
    std::map<int, SparseRow> pivots_;

    long long keep_pow(long long a) const {
        long long pv = 1;
        while (a % p_ == 0) { a /= p_; pv *= p_; }
        return pv;
    }

    void normalize(SparseRow& r) const {
        SparseRow out;
        std::sort(r.begin(), r.end());
        for (auto& e : r) {
            long long v = ((e.second % pk_) + pk_) % pk_;
            if (v == 0) continue;
            if (!out.empty() && out.back().first == e.first) {
                out.back().second = (out.back().second + v) % pk_;
                if (out.back().second == 0) out.pop_back();
            } else {
                out.push_back({e.first, v});
            }
        }
        r = std::move(out);
    }

    SparseRow axpy(const SparseRow& a, const SparseRow& b, long long f) const {
        // a + f*b
        SparseRow out;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                long long v = b[j].second * (f % pk_) % pk_;
                if (v) out.push_back({b[j].first, v});
                ++j;
            } else {
                long long v = (a[i].second + b[j].second * (f % pk_)) % pk_;
                if (v) out.push_back({a[i].first, v});
                ++i;
                ++j;
            }
        }
        return out;
    }
};

// Dense Smith normal form over Z_{p^k}: U*A*V = D.  Row/column dimensions are
// expected to be modest (the sparse echelon has already run).  U and V are
// tracked so kernels and solves are available.
struct SnfPk {
    long long p, pk;
    int m, n;
    std::vector<long long> D;        // m x n, diagonal after reduction
    std::vector<long long> U, Uinv;  // m x m
    std::vector<long long> V;        // n x n
    int rank = 0;                    // number of nonzero diagonal entries

    long long& d(int i, int j) { return D[(size_t)i * n + j]; }
    long long dval(int i, int j) const { return D[(size_t)i * n + j]; }
};

inline SnfPk snf_mod_pk(std::vector<long long> A, int m, int n, long long p, int k) {
    SnfPk s;
    s.p = p;
    s.pk = 1;
    for (int i = 0; i < k; ++i) s.pk *= p;
    s.m = m;
    s.n = n;
    s.D = std::move(A);
    for (auto& v : s.D) v = ((v % s.pk) + s.pk) % s.pk;
    s.U.assign((size_t)m * m, 0);
    s.Uinv.assign((size_t)m * m, 0);
    s.V.assign((size_t)n * n, 0);
    for (int i = 0; i < m; ++i) s.U[(size_t)i * m + i] = s.Uinv[(size_t)i * m + i] = 1;
    for (int i = 0; i < n; ++i) s.V[(size_t)i * n + i] = 1;

    auto row_op = [&](int r1, int r2, long long f) {  // row r1 += f*row r2 (in D and U); Uinv col r2 -= f*col r1
        for (int j = 0; j < n; ++j) s.D[(size_t)r1 * n + j] = (s.D[(size_t)r1 * n + j] + f * s.D[(size_t)r2 * n + j]) % s.pk;
        for (int j = 0; j < m; ++j) s.U[(size_t)r1 * m + j] = (s.U[(size_t)r1 * m + j] + f * s.U[(size_t)r2 * m + j]) % s.pk;
        long long nf = (s.pk - f % s.pk) % s.pk;
        for (int i = 0; i < m; ++i) s.Uinv[(size_t)i * m + r2] = (s.Uinv[(size_t)i * m + r2] + nf * s.Uinv[(size_t)i * m + r1]) % s.pk;
    };
    auto col_op = [&](int c1, int c2, long long f) {  // col c1 += f*col c2 (in D and V)
        for (int i = 0; i < m; ++i) s.D[(size_t)i * n + c1] = (s.D[(size_t)i * n + c1] + f * s.D[(size_t)i * n + c2]) % s.pk;
        for (int i = 0; i < n; ++i) s.V[(size_t)i * n + c1] = (s.V[(size_t)i * n + c1] + f * s.V[(size_t)i * n + c2]) % s.pk;
    };
    auto row_swap = [&](int r1, int r2) {
        for (int j = 0; j < n; ++j) std::swap(s.D[(size_t)r1 * n + j], s.D[(size_t)r2 * n + j]);
        for (int j = 0; j < m; ++j) std::swap(s.U[(size_t)r1 * m + j], s.U[(size_t)r2 * m + j]);
        for (int i = 0; i < m; ++i) std::swap(s.Uinv[(size_t)i * m + r1], s.Uinv[(size_t)i * m + r2]);
    };
    auto col_swap = [&](int c1, int c2) {
        for (int i = 0; i < m; ++i) std::swap(s.D[(size_t)i * n + c1], s.D[(size_t)i * n + c2]);
        for (int i = 0; i < n; ++i) std::swap(s.V[(size_t)i * n + c1], s.V[(size_t)i * n + c2]);
    };
    auto row_scale = [&](int r, long long u) {
        for (int j = 0; j < n; ++j) s.D[(size_t)r * n + j] = s.D[(size_t)r * n + j] * u % s.pk;
        for (int j = 0; j < m; ++j) s.U[(size_t)r * m + j] = s.U[(size_t)r * m + j] * u % s.pk;
        long long ui = unit_inv(u, p, s.pk);
        for (int i = 0; i < m; ++i) s.Uinv[(size_t)i * m + r] = s.Uinv[(size_t)i * m + r] * ui % s.pk;
    };

    int t = 0;
    while (true) {
        int bi = -1, bj = -1, bv = INT32_MAX;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (s.dval(i, j) == 0) continue;
                int v = p_valuation(s.dval(i, j), p);
                if (v < bv) { bv = v; bi = i; bj = j; }
            }
        if (bi < 0) break;
        row_swap(t, bi);
        col_swap(t, bj);
        // normalize pivot to p^bv
        long long pv = 1;
        for (int i = 0; i < bv; ++i) pv *= p;
        row_scale(t, unit_inv(s.dval(t, t) / pv % s.pk, p, s.pk));
        // clear column and row (pivot p^bv has minimal valuation, so divides)
        for (int i = t + 1; i < m; ++i)
            if (s.dval(i, t)) row_op(i, t, (s.pk - s.dval(i, t) / pv % s.pk) % s.pk);
        for (int j = t + 1; j < n; ++j)
            if (s.dval(t, j)) col_op(j, t, (s.pk - s.dval(t, j) / pv % s.pk) % s.pk);
        ++t;
    }
    s.rank = t;
    return s;
}

// Kernel generators of A (m x n) over Z_{p^k}: columns x with A x = 0.
// ann = order of the generator (p-power); p^k/ann * gen recovers the syzygy.
struct KernelGen {
    std::vector<long long> vec;
    long long ann;  // smallest p-power with ann * vec in <other gens> (diagonal presentation)
};

inline std::vector<KernelGen> kernel_mod_pk(const SnfPk& s) {
    std::vector<KernelGen> gens;
    for (int j = 0; j < s.n; ++j) {
        long long dj = j < s.m && j < s.rank ? s.dval(j, j) : 0;
        if (dj == 1) continue;  // unit pivot: no kernel from this column
        long long scale = dj == 0 ? 1 : s.pk / dj;
        KernelGen g;
        g.vec.assign(s.n, 0);
        for (int i = 0; i < s.n; ++i) g.vec[i] = s.V[(size_t)i * s.n + j] * scale % s.pk;
        g.ann = dj == 0 ? s.pk : dj;  // order of the generator
        gens.push_back(std::move(g));
    }
    return gens;
}

// Solve A x = b over Z_{p^k} given the SNF; returns false if unsolvable.
inline bool solve_mod_pk(const SnfPk& s, const std::vector<long long>& b, std::vector<long long>& x) {
    std::vector<long long> c((size_t)s.m, 0);
    for (int i = 0; i < s.m; ++i) {
        long long acc = 0;
        for (int j = 0; j < s.m; ++j) acc = (acc + s.U[(size_t)i * s.m + j] * (b[j] % s.pk)) % s.pk;
        c[i] = ((acc % s.pk) + s.pk) % s.pk;
    }
    std::vector<long long> y((size_t)s.n, 0);
    for (int i = 0; i < s.m; ++i) {
        long long di = (i < s.n && i < s.rank) ? s.dval(i, i) : 0;
        if (di == 0) {
            if (c[i] != 0) return false;
        } else {
            if (c[i] % di != 0) return false;
            y[i] = c[i] / di % s.pk;
        }
    }
    x.assign((size_t)s.n, 0);
    for (int i = 0; i < s.n; ++i) {
        long long acc = 0;
        for (int j = 0; j < s.n; ++j) acc = (acc + s.V[(size_t)i * s.n + j] * y[j]) % s.pk;
        x[i] = acc;
    }
    return true;
}

// Invariant factors of the finite module Z_{p^k}^t / <columns of rel>,
// where coordinate i additionally satisfies ord_i * e_i = 0 (the generator
// orders coming from a kernel presentation).
inline std::vector<long long> module_invariants_pk(const std::vector<std::vector<long long>>& rel,
                                                   const std::vector<long long>& ord,
                                                   long long p, int k) {
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    int t = (int)ord.size();
    int nr = (int)rel.size() + t;
    std::vector<long long> A((size_t)t * nr, 0);
    for (int c = 0; c < (int)rel.size(); ++c)
        for (int r = 0; r < t; ++r) A[(size_t)r * nr + c] = ((rel[c][r] % pk) + pk) % pk;
    for (int r = 0; r < t; ++r) A[(size_t)r * nr + (rel.size() + r)] = ord[r] % pk;
    SnfPk s = snf_mod_pk(A, t, nr, p, k);
    std::vector<long long> inv;
    for (int i = 0; i < t; ++i) {
        long long d = i < s.rank ? s.dval(i, i) : 0;
        long long q = d == 0 ? pk : d;
        if (q > 1) inv.push_back(q);
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

// Combine per-prime invariant lists into global invariant factors
// (largest-with-largest convention).
inline std::vector<long long> crt_invariants(std::vector<std::vector<long long>> parts) {
    size_t mx = 0;
    for (auto& v : parts) {
        std::sort(v.rbegin(), v.rend());
        mx = std::max(mx, v.size());
    }
    std::vector<long long> out(mx, 1);
    for (auto& v : parts)
        for (size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
    std::sort(out.begin(), out.end());
    out.erase(std::remove(out.begin(), out.end(), 1LL), out.end());
    return out;
}

}  // namespace sew
