#include "sew/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sew {

void Group::validate() const {
    if (n <= 0 || (int)mul_table.size() != n * n) throw std::logic_error("group: bad table");
    if (n > 40) return;
    for (int a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) throw std::logic_error("group: identity fails");
        if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0) throw std::logic_error("group: inverse fails");
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("group: associativity fails");
    }
}

std::vector<std::vector<int>> Group::conjugacy_classes() const {
    std::vector<int> seen(n, 0);
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < n; ++g) {
        if (seen[g]) continue;
        std::vector<int> cls;
        for (int h = 0; h < n; ++h) {
            int x = conj(g, h);
            if (!seen[x]) { seen[x] = 1; cls.push_back(x); }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(cls);
    }
    return classes;
}

std::vector<int> Group::centralizer(int g) const {
    std::vector<int> z;
    for (int h = 0; h < n; ++h)
        if (mul(h, g) == mul(g, h)) z.push_back(h);
    return z;
}

static GroupPtr finish(std::shared_ptr<Group> g) {
    g->inv_table.assign(g->n, -1);
    for (int a = 0; a < g->n; ++a)
        for (int b = 0; b < g->n; ++b)
            if (g->mul(a, b) == 0) g->inv_table[a] = b;
    g->validate();
    return g;
}

GroupPtr make_cyclic_product(const std::vector<int>& moduli) {
    for (int m : moduli)
        if (m < 2) throw std::invalid_argument("cyclic factor modulus must be >= 2");
    auto g = std::make_shared<Group>();
    g->kind = GroupKind::CyclicProduct;
    g->moduli = moduli;
    int n = 1;
    for (int m : moduli) n *= m;
    g->n = n;
    g->exps.resize(n);
    for (int i = 0; i < n; ++i) {
        int x = i;
        for (int m : moduli) {
            g->exps[i].push_back(x % m);
            x /= m;
        }
        std::string nm;
        for (size_t k = 0; k < moduli.size(); ++k)
            nm += (k ? "," : "") + std::to_string(g->exps[i][k]);
        g->elem_names.push_back("(" + nm + ")");
    }
    g->mul_table.assign((size_t)n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int idx = 0, sc = 1;
            for (size_t k = 0; k < moduli.size(); ++k) {
                idx += ((g->exps[a][k] + g->exps[b][k]) % moduli[k]) * sc;
                sc *= moduli[k];
            }
            g->mul_table[(size_t)a * n + b] = idx;
        }
    std::string nm;
    for (size_t k = 0; k < moduli.size(); ++k) nm += (k ? "x" : "") + ("Z" + std::to_string(moduli[k]));
    g->name = nm;
    return finish(g);
}

GroupPtr make_s3() {
    auto g = std::make_shared<Group>();
    g->kind = GroupKind::S3;
    g->name = "S3";
    g->n = 6;
    static const char* names[6] = {"e", "c", "c2", "t", "ct", "c2t"};
    g->elem_names.assign(names, names + 6);
    g->mul_table.assign(36, 0);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            auto [n1, q1] = Group::s3_nq(a);
            auto [n2, q2] = Group::s3_nq(b);
            // (c^n1 t^q1)(c^n2 t^q2) = c^{n1 + (-1)^q1 n2} t^{q1+q2}
            int nn = n1 + (q1 ? -n2 : n2);
            g->mul_table[(size_t)a * 6 + b] = Group::s3_index(nn, q1 + q2);
        }
    return finish(g);
}

GroupPtr make_z3z3_z2() {
    auto g = std::make_shared<Group>();
    g->kind = GroupKind::Z3Z3Z2;
    g->name = "Z3Z3:Z2";
    g->n = 18;
    g->mul_table.assign(18 * 18, 0);
    for (int a = 0; a < 18; ++a) {
        auto [i, j, k] = Group::zzz_ijk(a);
        std::ostringstream nm;
        nm << "c1^" << i << " c2^" << j << " t^" << k;
        g->elem_names.push_back(nm.str());
        for (int b = 0; b < 18; ++b) {
            auto [i2, j2, k2] = Group::zzz_ijk(b);
            int ii = i + (k ? -i2 : i2);
            int jj = j + (k ? -j2 : j2);
            g->mul_table[(size_t)a * 18 + b] = Group::zzz_index(ii, jj, k + k2);
        }
    }
    return finish(g);
}

GroupPtr make_product(const GroupPtr& a, const GroupPtr& b) {
    // direct product of two cyclic products stays a cyclic product
    if (a->kind == GroupKind::CyclicProduct && b->kind == GroupKind::CyclicProduct) {
        std::vector<int> mod = a->moduli;
        mod.insert(mod.end(), b->moduli.begin(), b->moduli.end());
        return make_cyclic_product(mod);
    }
    auto g = std::make_shared<Group>();
    g->kind = GroupKind::Product;
    g->name = a->name + "x" + b->name;
    g->n = a->n * b->n;
    g->mul_table.assign((size_t)g->n * g->n, 0);
    for (int x = 0; x < g->n; ++x) {
        int xa = x % a->n, xb = x / a->n;
        g->elem_names.push_back("(" + a->elem_names[xa] + "," + b->elem_names[xb] + ")");
        for (int y = 0; y < g->n; ++y) {
            int ya = y % a->n, yb = y / a->n;
            g->mul_table[(size_t)x * g->n + y] = a->mul(xa, ya) + a->n * b->mul(xb, yb);
        }
    }
    return finish(g);
}

GroupPtr make_group(const std::string& descriptor) {
    std::string d = descriptor;
    d.erase(std::remove_if(d.begin(), d.end(), [](char c) { return c == ' ' || c == '"'; }), d.end());
    if (d == "S3") return make_s3();
    if (d == "S3xS3") return make_product(make_s3(), make_s3());
    if (d == "Z3Z3:Z2" || d == "(Z3xZ3):Z2") return make_z3z3_z2();
    // ZnxZm... cyclic products
    std::vector<int> moduli;
    size_t pos = 0;
    while (pos < d.size()) {
        if (d[pos] == 'x') { ++pos; continue; }
        if (d[pos] != 'Z') throw std::invalid_argument("unsupported group descriptor: " + descriptor);
        size_t q = pos + 1, v = 0;
        while (q < d.size() && isdigit((unsigned char)d[q])) { v = v * 10 + (d[q] - '0'); ++q; }
        if (v < 2) throw std::invalid_argument("modulus < 2 in group descriptor: " + descriptor);
        moduli.push_back((int)v);
        pos = q;
    }
    if (moduli.empty()) throw std::invalid_argument("unsupported group descriptor: " + descriptor);
    return make_cyclic_product(moduli);
}

static std::vector<Irrep> abelian_irreps(const Group& g) {
    // characters: chi_k(x) = exp(2 pi i sum_j k_j x_j / m_j)
    std::vector<Irrep> out;
    for (int k = 0; k < g.n; ++k) {
        Irrep r;
        r.dim = 1;
        r.label = "chi" + g.elem_names[k];
        r.mats.resize(g.n);
        for (int x = 0; x < g.n; ++x) {
            Rat t(0);
            for (size_t j = 0; j < g.moduli.size(); ++j)
                t = t + Rat((long long)g.exps[k][j] * g.exps[x][j], g.moduli[j]);
            r.mats[x] = {Cyc::phase(t)};
        }
        out.push_back(std::move(r));
    }
    return out;
}

static std::vector<Irrep> s3_irreps(const Group& g) {
    std::vector<Irrep> out(3);
    out[0].label = "1";
    out[1].label = "s";
    out[2].label = "pi";
    out[0].dim = out[1].dim = 1;
    out[2].dim = 2;
    Cyc w = Cyc::root(8);   // e^{2 pi i/3}
    Cyc wb = Cyc::root(16);
    for (int x = 0; x < 6; ++x) {
        auto [nn, q] = Group::s3_nq(x);
        out[0].mats.push_back({Cyc(1)});
        out[1].mats.push_back({q ? Cyc(-1) : Cyc(1)});
        // rho(c)^n rho(t)^q with rho(c)=diag(w,wb), rho(t)=[[0,1],[1,0]]
        Cyc wn = nn == 0 ? Cyc(1) : (nn == 1 ? w : w * w);
        Cyc wbn = nn == 0 ? Cyc(1) : (nn == 1 ? wb : wb * wb);
        std::vector<Cyc> m(4);
        if (!q) { m[0] = wn; m[3] = wbn; }
        else    { m[1] = wn; m[2] = wbn; }
        out[2].mats.push_back(std::move(m));
    }
    return out;
}

std::vector<Irrep> Group::irreps() const {
    if (kind == GroupKind::CyclicProduct) return abelian_irreps(*this);
    if (kind == GroupKind::S3) return s3_irreps(*this);
    throw std::logic_error("irreps: unsupported group " + name);
}

}  // namespace sew
