#include "sew/opalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace sew {

namespace {

size_t space_size(const Sites& st, const std::vector<int>& sites) {
    size_t n = 1;
    for (int s : sites) n *= st.dim(s);
    return n;
}

std::vector<int> merge_sites(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

std::vector<int> positions(const std::vector<int>& sub, const std::vector<int>& sup) {
    std::vector<int> pos(sub.size());
    size_t j = 0;
    for (size_t i = 0; i < sub.size(); ++i) {
        while (j < sup.size() && sup[j] != sub[i]) ++j;
        if (j == sup.size()) throw std::logic_error("positions: not a subset");
        pos[i] = (int)j;
    }
    return pos;
}

}  // namespace

uint32_t OpSum::intern(const Cyc& c) {
    for (size_t i = 0; i < pool.size(); ++i)
        if (pool[i] == c) return (uint32_t)i;
    pool.push_back(c);
    return (uint32_t)(pool.size() - 1);
}

// -------------------------------------------------------------- flat helpers

namespace {

void materialize_flat(const Sites& st, OpSum& o, Monomial& m, size_t max_configs = (1u << 24)) {
    if (m.has_flat) return;
    if (!m.has_cell) throw std::logic_error("monomial without any form");
    size_t n = space_size(st, m.sites);
    if (n > max_configs) throw std::runtime_error("materialize_flat: support too large");
    m.perm.assign(n, 0);
    m.amp.assign(n, 0);
    std::vector<int> dims(m.sites.size());
    for (size_t i = 0; i < m.sites.size(); ++i) dims[i] = st.dim(m.sites[i]);
    std::vector<int> dg(m.sites.size(), 0);
    std::vector<std::vector<int>> cellpos;
    for (auto& c : m.cells) cellpos.push_back(positions(c.sites, m.sites));
    uint32_t zero = o.intern(Cyc(0));
    for (size_t cfg = 0; cfg < n; ++cfg) {
        bool dead = false;
        size_t out = 0;
        for (int i = (int)m.sites.size() - 1; i >= 0; --i) {
            int t = m.shifts[i][dg[i]];
            if (t < 0) { dead = true; break; }
            out = out * dims[i] + t;
        }
        if (dead) {
            m.perm[cfg] = Monomial::kDead;
            m.amp[cfg] = zero;
        } else {
            Rat ph(0);
            for (size_t ci = 0; ci < m.cells.size(); ++ci) {
                size_t ix = 0;
                auto& cs = m.cells[ci];
                auto& cp = cellpos[ci];
                for (int i = (int)cs.sites.size() - 1; i >= 0; --i)
                    ix = ix * st.dim(cs.sites[i]) + dg[cp[i]];
                ph = ph + cs.table[ix];
            }
            m.perm[cfg] = (uint32_t)out;
            m.amp[cfg] = o.intern(m.coeff * Cyc::phase(ph.mod1()));
        }
        int i = 0;
        while (i < (int)dg.size() && ++dg[i] == dims[i]) dg[i++] = 0;
    }
    m.has_flat = true;
}

Monomial extend_flat(const Sites& st, const OpSum& src, OpSum& dst, const Monomial& m,
                     const std::vector<int>& sup) {
    Monomial r;
    r.sites = sup;
    size_t n = space_size(st, sup);
    r.perm.assign(n, 0);
    r.amp.assign(n, 0);
    r.has_flat = true;
    std::vector<int> dims(sup.size());
    for (size_t i = 0; i < sup.size(); ++i) dims[i] = st.dim(sup[i]);
    auto pos = positions(m.sites, sup);
    std::vector<int> subdims(m.sites.size());
    for (size_t i = 0; i < m.sites.size(); ++i) subdims[i] = st.dim(m.sites[i]);
    std::vector<int> dg(sup.size(), 0);
    std::vector<int> sdg(m.sites.size());
    uint32_t zero = dst.intern(Cyc(0));
    // amplitude translation table from src pool to dst pool
    std::vector<uint32_t> amap(src.pool.size());
    for (size_t i = 0; i < src.pool.size(); ++i) amap[i] = dst.intern(src.pool[i]);
    for (size_t cfg = 0; cfg < n; ++cfg) {
        for (size_t i = 0; i < pos.size(); ++i) sdg[i] = dg[pos[i]];
        size_t sidx = 0;
        for (int i = (int)sdg.size() - 1; i >= 0; --i) sidx = sidx * subdims[i] + sdg[i];
        uint32_t p = m.perm[sidx];
        if (p == Monomial::kDead) {
            r.perm[cfg] = Monomial::kDead;
            r.amp[cfg] = zero;
        } else {
            std::vector<int> odg = dg;
            size_t pp = p;
            for (size_t i = 0; i < pos.size(); ++i) {
                odg[pos[i]] = (int)(pp % subdims[i]);
                pp /= subdims[i];
            }
            size_t out = 0;
            for (int i = (int)sup.size() - 1; i >= 0; --i) out = out * dims[i] + odg[i];
            r.perm[cfg] = (uint32_t)out;
            r.amp[cfg] = amap[m.amp[sidx]];
        }
        int i = 0;
        while (i < (int)dg.size() && ++dg[i] == dims[i]) dg[i++] = 0;
    }
    return r;
}

}  // namespace

// ------------------------------------------------------------- construction

OpSum op_identity() {
    OpSum o;
    Monomial m;
    m.has_cell = true;
    o.terms.push_back(std::move(m));
    return o;
}

static OpSum single_site(const Sites& st, int site, const std::vector<int16_t>& tgt,
                         const std::vector<Rat>& phase) {
    (void)st;
    OpSum o;
    Monomial m;
    m.sites = {site};
    m.has_cell = true;
    m.shifts = {tgt};
    if (!phase.empty()) {
        bool nz = false;
        for (auto& p : phase)
            if (!p.mod1().is_zero()) nz = true;
        if (nz) {
            PhaseCell c;
            c.sites = {site};
            c.table = phase;
            m.cells.push_back(std::move(c));
        }
    }
    o.terms.push_back(std::move(m));
    return o;
}

OpSum op_lplus(const Sites& st, int site, int g) {
    const auto& G = *st.groups[site];
    std::vector<int16_t> t(G.n);
    for (int h = 0; h < G.n; ++h) t[h] = (int16_t)G.mul(g, h);
    return single_site(st, site, t, {});
}
OpSum op_lminus(const Sites& st, int site, int g) {
    const auto& G = *st.groups[site];
    std::vector<int16_t> t(G.n);
    for (int h = 0; h < G.n; ++h) t[h] = (int16_t)G.mul(h, G.inv(g));
    return single_site(st, site, t, {});
}
OpSum op_tplus(const Sites& st, int site, int g) {
    const auto& G = *st.groups[site];
    std::vector<int16_t> t(G.n, -1);
    t[g] = (int16_t)g;
    return single_site(st, site, t, {});
}
OpSum op_tminus(const Sites& st, int site, int g) {
    const auto& G = *st.groups[site];
    std::vector<int16_t> t(G.n, -1);
    t[G.inv(g)] = (int16_t)G.inv(g);
    return single_site(st, site, t, {});
}
OpSum op_sigma(const Sites& st, int site, int g) {
    const auto& G = *st.groups[site];
    std::vector<int16_t> t(G.n);
    for (int h = 0; h < G.n; ++h) t[h] = (int16_t)G.conj(h, g);
    return single_site(st, site, t, {});
}
OpSum op_diag(const Sites& st, int site, const std::function<Rat(int)>& f) {
    const auto& G = *st.groups[site];
    std::vector<int16_t> t(G.n);
    std::vector<Rat> ph(G.n);
    for (int h = 0; h < G.n; ++h) {
        t[h] = (int16_t)h;
        ph[h] = f(h).mod1();
    }
    return single_site(st, site, t, ph);
}
OpSum op_xshift(const Sites& st, int site, int k) {
    const auto& G = *st.groups[site];
    if (G.kind != GroupKind::CyclicProduct || G.moduli.size() != 1)
        throw std::invalid_argument("op_xshift: site is not a single cyclic qudit");
    return op_lplus(st, site, ((k % G.n) + G.n) % G.n);
}
OpSum op_zphase(const Sites& st, int site, int k) {
    const auto& G = *st.groups[site];
    if (G.kind != GroupKind::CyclicProduct || G.moduli.size() != 1)
        throw std::invalid_argument("op_zphase: site is not a single cyclic qudit");
    int n = G.n;
    return op_diag(st, site, [n, k](int h) { return Rat((long long)k * h, n); });
}
OpSum op_s3_zl(const Sites& st, int site, int power) {
    return op_diag(st, site, [power](int h) {
        auto [n, q] = Group::s3_nq(h);
        (void)q;
        return Rat((long long)power * n, 3);
    });
}
OpSum op_s3_zr(const Sites& st, int site, int power) {
    // g = c^n t^q = t^q c^{(-1)^q n}: the t^k c^j exponent is j = (-1)^q n
    return op_diag(st, site, [power](int h) {
        auto [n, q] = Group::s3_nq(h);
        int j = q ? (3 - n) % 3 : n;
        return Rat((long long)power * j, 3);
    });
}
OpSum op_s3_z(const Sites& st, int site) {
    return op_diag(st, site, [](int h) {
        auto [n, q] = Group::s3_nq(h);
        (void)n;
        return Rat(q, 2);
    });
}
OpSum op_cell(const Sites& st, const std::vector<int>& sites,
              const std::function<Rat(const std::vector<int>&)>& f) {
    OpSum o;
    Monomial m;
    m.sites = sites;
    std::sort(m.sites.begin(), m.sites.end());
    m.has_cell = true;
    for (int s : m.sites) {
        std::vector<int16_t> id(st.dim(s));
        for (int h = 0; h < st.dim(s); ++h) id[h] = (int16_t)h;
        m.shifts.push_back(std::move(id));
    }
    PhaseCell c;
    c.sites = m.sites;
    c.table.resize(space_size(st, m.sites));
    std::vector<int> dg(m.sites.size(), 0);
    for (size_t cfg = 0; cfg < c.table.size(); ++cfg) {
        c.table[cfg] = f(dg).mod1();
        int i = 0;
        while (i < (int)dg.size() && ++dg[i] == st.dim(m.sites[i])) dg[i++] = 0;
    }
    m.cells.push_back(std::move(c));
    o.terms.push_back(std::move(m));
    return o;
}

// ------------------------------------------------------------------ algebra

OpSum op_scale(const OpSum& a, const Cyc& c) {
    OpSum r = a;
    for (auto& m : r.terms) {
        if (m.has_cell) m.coeff = m.coeff * c;
        if (m.has_flat) {
            for (auto& ix : m.amp) {
                Cyc v = r.pool[ix] * c;
                ix = r.intern(v);
            }
        }
    }
    return r;
}

OpSum op_add(const Sites& st, const OpSum& a, const OpSum& b) {
    (void)st;
    OpSum r;
    r.pool = a.pool;
    r.terms = a.terms;
    for (auto m : b.terms) {
        if (m.has_flat)
            for (auto& ix : m.amp) ix = r.intern(b.pool[ix]);
        r.terms.push_back(std::move(m));
    }
    return r;
}

// out = second o first (apply `first`, then `second`); cellular if both are
static bool cellular_mul(const Sites& st, const Monomial& first, const Monomial& second,
                         Monomial& out) {
    if (!first.has_cell || !second.has_cell) return false;
    out = Monomial{};
    out.sites = merge_sites(first.sites, second.sites);
    out.has_cell = true;
    out.coeff = first.coeff * second.coeff;
    auto p0 = positions(first.sites, out.sites);
    auto p1 = positions(second.sites, out.sites);
    for (size_t i = 0; i < out.sites.size(); ++i) {
        int d = st.dim(out.sites[i]);
        std::vector<int16_t> id(d);
        for (int h = 0; h < d; ++h) id[h] = (int16_t)h;
        out.shifts.push_back(std::move(id));
    }
    for (size_t i = 0; i < first.sites.size(); ++i) out.shifts[p0[i]] = first.shifts[i];
    for (size_t i = 0; i < second.sites.size(); ++i) {
        auto& tgt = out.shifts[p1[i]];
        std::vector<int16_t> comp(tgt.size());
        for (size_t h = 0; h < tgt.size(); ++h)
            comp[h] = tgt[h] < 0 ? (int16_t)-1 : second.shifts[i][tgt[h]];
        tgt = std::move(comp);
    }
    // first's cells read the input directly; second's cells read the state
    // after `first` acted, so re-index them through first's shifts
    out.cells = first.cells;
    for (auto& c : second.cells) {
        PhaseCell nc;
        nc.sites = c.sites;
        nc.table.resize(c.table.size());
        std::vector<const std::vector<int16_t>*> via(c.sites.size(), nullptr);
        for (size_t i = 0; i < c.sites.size(); ++i) {
            auto it = std::lower_bound(first.sites.begin(), first.sites.end(), c.sites[i]);
            if (it != first.sites.end() && *it == c.sites[i])
                via[i] = &first.shifts[it - first.sites.begin()];
        }
        std::vector<int> dg(c.sites.size(), 0);
        for (size_t cfg = 0; cfg < c.table.size(); ++cfg) {
            size_t ix = 0;
            bool dead = false;
            for (int i = (int)c.sites.size() - 1; i >= 0; --i) {
                int v = dg[i];
                if (via[i]) {
                    int t = (*via[i])[v];
                    if (t < 0) { dead = true; break; }
                    v = t;
                }
                ix = ix * st.dim(c.sites[i]) + v;
            }
            nc.table[cfg] = dead ? Rat(0) : c.table[ix];  // dead configs are annihilated anyway
            int i = 0;
            while (i < (int)dg.size() && ++dg[i] == st.dim(c.sites[i])) dg[i++] = 0;
        }
        out.cells.push_back(std::move(nc));
    }
    return true;
}

OpSum op_mul(const Sites& st, const OpSum& a, const OpSum& b, size_t max_configs) {
    // (a*b)|x> = a(b|x>)
    OpSum r;
    for (auto& ta : a.terms)
        for (auto& tb : b.terms) {
            Monomial m;
            if (ta.has_cell && tb.has_cell && cellular_mul(st, tb, ta, m)) {
                r.terms.push_back(std::move(m));
                continue;
            }
            std::vector<int> u = merge_sites(ta.sites, tb.sites);
            size_t n = space_size(st, u);
            if (n > max_configs) throw std::runtime_error("op_mul: joint support too large");
            OpSum tmpa, tmpb;
            tmpa.pool = a.pool;
            tmpb.pool = b.pool;
            Monomial fa = ta, fb = tb;
            materialize_flat(st, tmpa, fa, max_configs);
            materialize_flat(st, tmpb, fb, max_configs);
            Monomial ea = extend_flat(st, tmpa, r, fa, u);
            Monomial eb = extend_flat(st, tmpb, r, fb, u);
            Monomial out;
            out.sites = u;
            out.has_flat = true;
            out.perm.assign(n, 0);
            out.amp.assign(n, 0);
            uint32_t zero = r.intern(Cyc(0));
            for (size_t cfg = 0; cfg < n; ++cfg) {
                uint32_t mid = eb.perm[cfg];
                if (mid == Monomial::kDead) {
                    out.perm[cfg] = Monomial::kDead;
                    out.amp[cfg] = zero;
                    continue;
                }
                uint32_t fin = ea.perm[mid];
                if (fin == Monomial::kDead) {
                    out.perm[cfg] = Monomial::kDead;
                    out.amp[cfg] = zero;
                    continue;
                }
                out.perm[cfg] = fin;
                Cyc v = r.pool[eb.amp[cfg]] * r.pool[ea.amp[mid]];
                out.amp[cfg] = r.intern(v);
            }
            r.terms.push_back(std::move(out));
        }
    op_canonicalize(st, r);
    return r;
}

OpSum op_dagger(const Sites& st, const OpSum& a) {
    OpSum r;
    for (auto& t : a.terms) {
        if (t.has_cell) {
            bool total = true;
            for (auto& s : t.shifts)
                for (auto v : s)
                    if (v < 0) total = false;
            if (total) {
                Monomial m;
                m.sites = t.sites;
                m.has_cell = true;
                m.coeff = t.coeff.conj();
                for (auto& s : t.shifts) {
                    std::vector<int16_t> inv(s.size(), -1);
                    for (size_t h = 0; h < s.size(); ++h) inv[s[h]] = (int16_t)h;
                    m.shifts.push_back(std::move(inv));
                }
                for (auto& c : t.cells) {
                    PhaseCell nc;
                    nc.sites = c.sites;
                    nc.table.resize(c.table.size());
                    std::vector<const std::vector<int16_t>*> via(c.sites.size(), nullptr);
                    for (size_t i = 0; i < c.sites.size(); ++i) {
                        auto it = std::lower_bound(m.sites.begin(), m.sites.end(), c.sites[i]);
                        via[i] = &m.shifts[it - m.sites.begin()];
                    }
                    std::vector<int> dg(c.sites.size(), 0);
                    for (size_t cfg = 0; cfg < c.table.size(); ++cfg) {
                        size_t ix = 0;
                        for (int i = (int)c.sites.size() - 1; i >= 0; --i)
                            ix = ix * st.dim(c.sites[i]) + (*via[i])[dg[i]];
                        nc.table[cfg] = (-c.table[ix]).mod1();
                        int i = 0;
                        while (i < (int)dg.size() && ++dg[i] == st.dim(c.sites[i])) dg[i++] = 0;
                    }
                    m.cells.push_back(std::move(nc));
                }
                r.terms.push_back(std::move(m));
                continue;
            }
        }
        OpSum tmp;
        tmp.pool = a.pool;
        Monomial f = t;
        materialize_flat(st, tmp, f);
        Monomial m;
        m.sites = f.sites;
        m.has_flat = true;
        size_t n = f.perm.size();
        m.perm.assign(n, Monomial::kDead);
        uint32_t zero = r.intern(Cyc(0));
        m.amp.assign(n, zero);
        for (size_t cfg = 0; cfg < n; ++cfg) {
            uint32_t p = f.perm[cfg];
            if (p == Monomial::kDead) continue;
            m.perm[p] = (uint32_t)cfg;
            m.amp[p] = r.intern(tmp.pool[f.amp[cfg]].conj());
        }
        r.terms.push_back(std::move(m));
    }
    return r;
}

// evaluate a monomial on digits over its own support; false if annihilated
static bool eval_monomial(const Sites& st, const OpSum& o, const Monomial& m,
                          const std::vector<int>& dg, std::vector<int>& out, Cyc& amp) {
    if (m.has_flat) {
        size_t cfg = 0;
        for (int i = (int)m.sites.size() - 1; i >= 0; --i) cfg = cfg * st.dim(m.sites[i]) + dg[i];
        uint32_t p = m.perm[cfg];
        if (p == Monomial::kDead) return false;
        amp = o.pool[m.amp[cfg]];
        if (amp.is_zero()) return false;
        out.resize(m.sites.size());
        size_t pp = p;
        for (size_t i = 0; i < m.sites.size(); ++i) {
            out[i] = (int)(pp % st.dim(m.sites[i]));
            pp /= st.dim(m.sites[i]);
        }
        return true;
    }
    out.resize(m.sites.size());
    for (size_t i = 0; i < m.sites.size(); ++i) {
        int t = m.shifts[i][dg[i]];
        if (t < 0) return false;
        out[i] = t;
    }
    Rat ph(0);
    for (auto& c : m.cells) {
        size_t ix = 0;
        for (int i = (int)c.sites.size() - 1; i >= 0; --i) {
            auto it = std::lower_bound(m.sites.begin(), m.sites.end(), c.sites[i]);
            ix = ix * st.dim(c.sites[i]) + dg[it - m.sites.begin()];
        }
        ph = ph + c.table[ix];
    }
    amp = m.coeff * Cyc::phase(ph.mod1());
    return !amp.is_zero();
}

void op_canonicalize(const Sites& st, OpSum& a) {
    if (a.terms.empty()) return;
    std::vector<int> u;
    for (auto& t : a.terms) u = merge_sites(u, t.sites);
    size_t n = space_size(st, u);
    if (n > (1u << 24)) return;  // large operators stay term-separated
    // accumulate amplitudes per (input, target) matrix entry
    std::vector<std::pair<std::pair<size_t, size_t>, Cyc>> entries;
    OpSum out;
    for (auto& t : a.terms) {
        OpSum tmp;
        tmp.pool = a.pool;
        Monomial f = t;
        materialize_flat(st, tmp, f);
        Monomial e = extend_flat(st, tmp, out, f, u);
        for (size_t i = 0; i < n; ++i) {
            if (e.perm[i] == Monomial::kDead) continue;
            const Cyc& c = out.pool[e.amp[i]];
            if (c.is_zero()) continue;
            entries.push_back({{i, (size_t)e.perm[i]}, c});
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](auto& x, auto& y) { return x.first < y.first; });
    // fold duplicates, drop zeros, then decompose branches into monomials
    std::vector<std::vector<std::pair<size_t, Cyc>>> rows(n);
    size_t maxbranch = 0;
    for (size_t i = 0; i < entries.size();) {
        auto key = entries[i].first;
        Cyc acc = entries[i].second;
        ++i;
        while (i < entries.size() && entries[i].first == key) acc = acc + entries[i++].second;
        if (!acc.is_zero()) {
            rows[key.first].push_back({key.second, acc});
            maxbranch = std::max(maxbranch, rows[key.first].size());
        }
    }
    OpSum res;
    for (size_t k = 0; k < maxbranch; ++k) {
        Monomial m;
        m.sites = u;
        m.has_flat = true;
        m.perm.assign(n, Monomial::kDead);
        uint32_t zero = res.intern(Cyc(0));
        m.amp.assign(n, zero);
        for (size_t i = 0; i < n; ++i) {
            if (k >= rows[i].size()) continue;
            m.perm[i] = (uint32_t)rows[i][k].first;
            m.amp[i] = res.intern(rows[i][k].second);
        }
        // shrink support: drop sites whose digit is fixed by the action and
        // irrelevant to the amplitude
        std::vector<int> dims(u.size());
        for (size_t i = 0; i < u.size(); ++i) dims[i] = st.dim(u[i]);
        std::vector<bool> keep(u.size(), false);
        for (size_t i = 0; i < u.size(); ++i) {
            size_t stride = 1;
            for (size_t j = 0; j < i; ++j) stride *= dims[j];
            for (size_t cfg = 0; cfg < n && !keep[i]; ++cfg) {
                uint32_t p = m.perm[cfg];
                int di = (int)((cfg / stride) % dims[i]);
                if (p != Monomial::kDead) {
                    int po = (int)((p / stride) % dims[i]);
                    if (po != di) { keep[i] = true; break; }
                }
                if (di != 0) {
                    size_t base = cfg - (size_t)di * stride;
                    uint32_t p0 = m.perm[base];
                    bool d1 = p == Monomial::kDead, d0 = p0 == Monomial::kDead;
                    if (d1 != d0) { keep[i] = true; break; }
                    if (!d1 && !(res.pool[m.amp[cfg]] == res.pool[m.amp[base]])) { keep[i] = true; break; }
                    if (!d1 && p - (size_t)di * stride != p0) { keep[i] = true; break; }
                }
            }
        }
        std::vector<int> newsites;
        for (size_t i = 0; i < u.size(); ++i)
            if (keep[i]) newsites.push_back(u[i]);
        if (newsites.size() == u.size()) {
            res.terms.push_back(std::move(m));
            continue;
        }
        Monomial sm;
        sm.sites = newsites;
        sm.has_flat = true;
        size_t sn = space_size(st, newsites);
        sm.perm.assign(sn, 0);
        sm.amp.assign(sn, 0);
        auto pos = positions(newsites, u);
        std::vector<int> dg(u.size(), 0), sdg(newsites.size());
        for (size_t scfg = 0; scfg < sn; ++scfg) {
            size_t t = scfg;
            std::fill(dg.begin(), dg.end(), 0);
            for (size_t i = 0; i < newsites.size(); ++i) {
                sdg[i] = (int)(t % st.dim(newsites[i]));
                t /= st.dim(newsites[i]);
                dg[pos[i]] = sdg[i];
            }
            size_t cfg = 0;
            for (int i = (int)u.size() - 1; i >= 0; --i) cfg = cfg * dims[i] + dg[i];
            uint32_t p = m.perm[cfg];
            if (p == Monomial::kDead) {
                sm.perm[scfg] = Monomial::kDead;
                sm.amp[scfg] = res.intern(Cyc(0));
            } else {
                size_t sp = 0;
                for (int i = (int)newsites.size() - 1; i >= 0; --i) {
                    size_t stride = 1;
                    for (int j = 0; j < pos[i]; ++j) stride *= dims[j];
                    sp = sp * st.dim(newsites[i]) + (int)((p / stride) % dims[pos[i]]);
                }
                sm.perm[scfg] = (uint32_t)sp;
                sm.amp[scfg] = m.amp[cfg];
            }
        }
        res.terms.push_back(std::move(sm));
    }
    a = std::move(res);
}

bool op_is_zero(const Sites& st, const OpSum& a) {
    OpSum c = a;
    op_canonicalize(st, c);
    return c.terms.empty();
}

bool op_equal(const Sites& st, const OpSum& a, const OpSum& b) {
    return op_is_zero(st, op_add(st, a, op_scale(b, Cyc(-1))));
}

// --------------------------------------------------------------- commutators

namespace {

// zero test for a sum of rational phase tables, by variable elimination
bool phase_sum_is_zero(const Sites& st, std::vector<PhaseCell> cells) {
    for (;;) {
        std::map<std::vector<int>, PhaseCell> merged;
        for (auto& c : cells) {
            auto it = merged.find(c.sites);
            if (it == merged.end()) {
                merged.emplace(c.sites, c);
            } else {
                for (size_t i = 0; i < c.table.size(); ++i)
                    it->second.table[i] = (it->second.table[i] + c.table[i]).mod1();
            }
        }
        cells.clear();
        std::vector<int> allsites;
        for (auto& kv : merged) {
            bool nz = false;
            for (auto& v : kv.second.table)
                if (!v.mod1().is_zero()) nz = true;
            if (nz) {
                cells.push_back(kv.second);
                allsites = merge_sites(allsites, kv.first);
            }
        }
        if (cells.empty()) return true;
        int s = allsites.back();
        int d = st.dim(s);
        std::vector<PhaseCell> with, without;
        for (auto& c : cells) {
            if (std::binary_search(c.sites.begin(), c.sites.end(), s)) with.push_back(c);
            else without.push_back(c);
        }
        auto restrict_cell = [&](const PhaseCell& c, int val) {
            PhaseCell r;
            auto it = std::lower_bound(c.sites.begin(), c.sites.end(), s);
            size_t pos = it - c.sites.begin();
            r.sites = c.sites;
            r.sites.erase(r.sites.begin() + pos);
            size_t lo = 1;
            for (size_t i = 0; i < pos; ++i) lo *= st.dim(c.sites[i]);
            size_t nsub = c.table.size() / d;
            r.table.resize(nsub);
            for (size_t q = 0; q < nsub; ++q) {
                size_t low = q % lo, high = q / lo;
                r.table[q] = c.table[low + lo * ((size_t)val + (size_t)d * high)];
            }
            return r;
        };
        // the sum must be independent of x_s: difference tables must vanish
        for (int v = 1; v < d; ++v) {
            std::vector<PhaseCell> diff;
            Rat cst(0);
            for (auto& c : with) {
                PhaseCell r = restrict_cell(c, v);
                PhaseCell r0 = restrict_cell(c, 0);
                for (size_t i = 0; i < r.table.size(); ++i)
                    r.table[i] = (r.table[i] - r0.table[i]).mod1();
                if (r.sites.empty()) cst = (cst + r.table[0]).mod1();
                else diff.push_back(std::move(r));
            }
            if (diff.empty()) {
                if (!cst.is_zero()) return false;
            } else {
                if (!cst.is_zero()) {
                    PhaseCell k;
                    k.sites = diff[0].sites;
                    k.table.assign(diff[0].table.size(), Rat(0));
                    k.table[0] = cst;  // constant folded into a table? must spread
                    for (auto& t : k.table) t = cst;
                    diff.push_back(std::move(k));
                }
                if (!phase_sum_is_zero(st, diff)) return false;
            }
        }
        // fix s = 0 and continue
        std::vector<PhaseCell> next = without;
        Rat cst(0);
        for (auto& c : with) {
            PhaseCell r = restrict_cell(c, 0);
            if (r.sites.empty()) cst = (cst + r.table[0]).mod1();
            else next.push_back(std::move(r));
        }
        if (next.empty()) return cst.is_zero();
        if (!cst.is_zero()) {
            PhaseCell k;
            k.sites = next[0].sites;
            k.table.assign(next[0].table.size(), cst);
            next.push_back(std::move(k));
        }
        cells = std::move(next);
    }
}

enum class FastResult { Commute, Fail, Unknown };

FastResult cellular_commute(const Sites& st, const Monomial& a, const Monomial& b) {
    if (!a.has_cell || !b.has_cell) return FastResult::Unknown;
    for (auto& s : a.shifts)
        for (auto v : s)
            if (v < 0) return FastResult::Unknown;
    for (auto& s : b.shifts)
        for (auto v : s)
            if (v < 0) return FastResult::Unknown;
    for (size_t i = 0; i < a.sites.size(); ++i) {
        auto it = std::lower_bound(b.sites.begin(), b.sites.end(), a.sites[i]);
        if (it == b.sites.end() || *it != a.sites[i]) continue;
        size_t j = it - b.sites.begin();
        const auto& sa = a.shifts[i];
        const auto& sb = b.shifts[j];
        for (size_t h = 0; h < sa.size(); ++h)
            if (sa[sb[h]] != sb[sa[h]]) return FastResult::Unknown;
    }
    auto reindex = [&](const PhaseCell& c, const Monomial& m) {
        PhaseCell r;
        r.sites = c.sites;
        r.table.resize(c.table.size());
        std::vector<const std::vector<int16_t>*> via(c.sites.size(), nullptr);
        for (size_t i = 0; i < c.sites.size(); ++i) {
            auto it = std::lower_bound(m.sites.begin(), m.sites.end(), c.sites[i]);
            if (it != m.sites.end() && *it == c.sites[i]) via[i] = &m.shifts[it - m.sites.begin()];
        }
        std::vector<int> dg(c.sites.size(), 0);
        for (size_t cfg = 0; cfg < c.table.size(); ++cfg) {
            size_t ix = 0;
            for (int i = (int)c.sites.size() - 1; i >= 0; --i) {
                int v = dg[i];
                if (via[i]) v = (*via[i])[v];
                ix = ix * st.dim(c.sites[i]) + v;
            }
            r.table[cfg] = c.table[ix];
            int i = 0;
            while (i < (int)dg.size() && ++dg[i] == st.dim(c.sites[i])) dg[i++] = 0;
        }
        return r;
    };
    std::vector<PhaseCell> sum;
    for (auto& c : b.cells) {
        sum.push_back(c);
        PhaseCell n = reindex(c, a);
        for (auto& v : n.table) v = (-v).mod1();
        sum.push_back(std::move(n));
    }
    for (auto& c : a.cells) {
        PhaseCell pb = reindex(c, b);
        sum.push_back(std::move(pb));
        PhaseCell n = c;
        for (auto& v : n.table) v = (-v).mod1();
        sum.push_back(std::move(n));
    }
    return phase_sum_is_zero(st, sum) ? FastResult::Commute : FastResult::Fail;
}

bool stream_commutator(const Sites& st, const OpSum& a, const std::vector<const Monomial*>& ta,
                       const OpSum& b, const std::vector<const Monomial*>& tb,
                       size_t max_configs) {
    std::vector<int> u;
    for (auto* t : ta) u = merge_sites(u, t->sites);
    for (auto* t : tb) u = merge_sites(u, t->sites);
    size_t n = space_size(st, u);
    if (n > max_configs) throw std::runtime_error("commutator: joint support too large");
    std::vector<int> dims(u.size());
    for (size_t i = 0; i < u.size(); ++i) dims[i] = st.dim(u[i]);
    auto prep = [&](const std::vector<const Monomial*>& ts) {
        std::vector<std::vector<int>> pos;
        for (auto* t : ts) pos.push_back(positions(t->sites, u));
        return pos;
    };
    auto pa = prep(ta), pb = prep(tb);
    std::vector<int> dg(u.size(), 0), sub, out;
    Cyc amp1, amp2;
    using Target = std::pair<size_t, Cyc>;
    std::vector<Target> lhs, rhs;
    auto apply_all = [&](const OpSum& o1, const std::vector<const Monomial*>& t1,
                         const std::vector<std::vector<int>>& p1, const OpSum& o2,
                         const std::vector<const Monomial*>& t2,
                         const std::vector<std::vector<int>>& p2, std::vector<Target>& res) {
        res.clear();
        std::vector<int> mid(u.size()), fin(u.size());
        for (size_t i1 = 0; i1 < t1.size(); ++i1) {
            sub.resize(t1[i1]->sites.size());
            for (size_t k = 0; k < sub.size(); ++k) sub[k] = dg[p1[i1][k]];
            if (!eval_monomial(st, o1, *t1[i1], sub, out, amp1)) continue;
            mid = dg;
            for (size_t k = 0; k < out.size(); ++k) mid[p1[i1][k]] = out[k];
            for (size_t i2 = 0; i2 < t2.size(); ++i2) {
                sub.resize(t2[i2]->sites.size());
                for (size_t k = 0; k < sub.size(); ++k) sub[k] = mid[p2[i2][k]];
                if (!eval_monomial(st, o2, *t2[i2], sub, out, amp2)) continue;
                fin = mid;
                for (size_t k = 0; k < out.size(); ++k) fin[p2[i2][k]] = out[k];
                size_t fcfg = 0;
                for (int i = (int)u.size() - 1; i >= 0; --i) fcfg = fcfg * dims[i] + fin[i];
                res.push_back({fcfg, amp1 * amp2});
            }
        }
        std::sort(res.begin(), res.end(),
                  [](const Target& x, const Target& y) { return x.first < y.first; });
    };
    for (size_t cfg = 0; cfg < n; ++cfg) {
        apply_all(b, tb, pb, a, ta, pa, lhs);  // a(b|x>)
        apply_all(a, ta, pa, b, tb, pb, rhs);  // b(a|x>)
        size_t i = 0, j = 0;
        bool ok = true;
        auto fold = [](std::vector<Target>& v, size_t& k) {
            size_t c = v[k].first;
            Cyc acc = v[k].second;
            while (k + 1 < v.size() && v[k + 1].first == c) acc = acc + v[++k].second;
            ++k;
            return std::make_pair(c, acc);
        };
        while (ok && (i < lhs.size() || j < rhs.size())) {
            size_t ci = i < lhs.size() ? lhs[i].first : SIZE_MAX;
            size_t cj = j < rhs.size() ? rhs[j].first : SIZE_MAX;
            if (ci < cj) {
                auto [c, acc] = fold(lhs, i);
                (void)c;
                if (!acc.is_zero()) ok = false;
            } else if (cj < ci) {
                auto [c, acc] = fold(rhs, j);
                (void)c;
                if (!acc.is_zero()) ok = false;
            } else {
                auto [c1, acc1] = fold(lhs, i);
                auto [c2, acc2] = fold(rhs, j);
                (void)c1;
                (void)c2;
                if (!(acc1 == acc2)) ok = false;
            }
        }
        if (!ok) return false;
        int i2 = 0;
        while (i2 < (int)dg.size() && ++dg[i2] == dims[i2]) dg[i2++] = 0;
    }
    return true;
}

}  // namespace

bool commutator_is_zero(const Sites& st, const OpSum& a, const OpSum& b, size_t max_configs) {
    bool all_fast = true;
    for (auto& ta : a.terms) {
        for (auto& tb : b.terms) {
            if (cellular_commute(st, ta, tb) != FastResult::Commute) { all_fast = false; break; }
        }
        if (!all_fast) break;
    }
    if (all_fast) return true;
    auto ptrs = [](const OpSum& o) {
        std::vector<const Monomial*> v;
        for (auto& t : o.terms) v.push_back(&t);
        return v;
    };
    auto all_b = ptrs(b);
    bool per_a = true;
    for (auto& ta : a.terms) {
        std::vector<const Monomial*> one = {&ta};
        bool ok;
        try {
            ok = stream_commutator(st, a, one, b, all_b, max_configs);
        } catch (const std::runtime_error&) {
            per_a = false;
            break;
        }
        if (!ok) { per_a = false; break; }
    }
    if (per_a) return true;
    auto all_a = ptrs(a);
    bool per_b = true;
    for (auto& tb : b.terms) {
        std::vector<const Monomial*> one = {&tb};
        bool ok;
        try {
            ok = stream_commutator(st, b, one, a, all_a, max_configs);
        } catch (const std::runtime_error&) {
            per_b = false;
            break;
        }
        if (!ok) { per_b = false; break; }
    }
    if (per_b) return true;
    return stream_commutator(st, a, all_a, b, all_b, max_configs);
}

OpSum op_conjugate(const Sites& st, const OpSum& a, const OpSum& u) {
    return op_mul(st, op_mul(st, u, a), op_dagger(st, u));
}

OpSum mpo_symmetry(const Sites& st, const Irrep& rho, const std::vector<int>& chain) {
    if (chain.empty()) throw std::invalid_argument("mpo_symmetry: empty chain");
    OpSum o;
    Monomial m;
    m.sites = chain;
    std::sort(m.sites.begin(), m.sites.end());
    size_t n = space_size(st, m.sites);
    m.perm.resize(n);
    m.amp.resize(n);
    m.has_flat = true;
    std::vector<int> dims(m.sites.size());
    for (size_t i = 0; i < m.sites.size(); ++i) dims[i] = st.dim(m.sites[i]);
    std::vector<int> cpos(chain.size());
    for (size_t k = 0; k < chain.size(); ++k)
        cpos[k] = (int)(std::lower_bound(m.sites.begin(), m.sites.end(), chain[k]) - m.sites.begin());
    std::vector<int> dg(m.sites.size(), 0);
    int d = rho.dim;
    for (size_t cfg = 0; cfg < n; ++cfg) {
        // prod_i Z_rho = ... Z_2 Z_1 acting with increasing chain index from the right
        std::vector<Cyc> mat((size_t)d * d);
        for (int i = 0; i < d; ++i) mat[(size_t)i * d + i] = Cyc(1);
        for (size_t k = 0; k < chain.size(); ++k) {
            int g = dg[cpos[k]];
            std::vector<Cyc> nm((size_t)d * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Cyc acc;
                    for (int l = 0; l < d; ++l) acc = acc + rho.at(g, i, l) * mat[(size_t)l * d + j];
                    nm[(size_t)i * d + j] = acc;
                }
            mat = std::move(nm);
        }
        Cyc tr;
        for (int i = 0; i < d; ++i) tr = tr + mat[(size_t)i * d + i];
        m.perm[cfg] = (uint32_t)cfg;
        m.amp[cfg] = o.intern(tr);
        int i = 0;
        while (i < (int)dg.size() && ++dg[i] == dims[i]) dg[i++] = 0;
    }
    o.terms.push_back(std::move(m));
    return o;
}

// ---------------------------------------------------------------- entanglers

Entangler entangler_from_cocycle(const Sites& st, const Cochain& w,
                                 const std::vector<std::vector<int>>& simplices,
                                 const std::vector<int>& orientation) {
    if (!is_cocycle(w)) throw std::invalid_argument("entangler_from_cocycle: not a cocycle");
    Entangler e;
    const auto& G = *w.group;
    for (size_t f = 0; f < simplices.size(); ++f) {
        const auto& sx = simplices[f];
        int orient = orientation.empty() ? 1 : orientation[f];
        if ((int)sx.size() != w.degree) throw std::invalid_argument("simplex size != cocycle degree");
        PhaseCell c;
        c.sites = sx;
        std::sort(c.sites.begin(), c.sites.end());
        std::vector<int> cpos(sx.size());
        for (size_t k = 0; k < sx.size(); ++k)
            cpos[k] = (int)(std::lower_bound(c.sites.begin(), c.sites.end(), sx[k]) - c.sites.begin());
        size_t n = 1;
        for (int s : c.sites) n *= st.dim(s);
        c.table.resize(n);
        std::vector<int> dg(c.sites.size(), 0);
        for (size_t cfg = 0; cfg < n; ++cfg) {
            std::vector<int> arg(w.degree);
            int prev = dg[cpos[0]];
            arg[0] = prev;
            for (int i = 1; i < w.degree; ++i) {
                int cur = dg[cpos[i]];
                arg[i] = G.mul(G.inv(prev), cur);
                prev = cur;
            }
            Rat v = w.at(arg);
            c.table[cfg] = (orient > 0 ? v : -v).mod1();
            int i = 0;
            while (i < (int)dg.size() && ++dg[i] == st.dim(c.sites[i])) dg[i++] = 0;
        }
        e.cells.push_back(std::move(c));
    }
    return e;
}

OpSum conjugate_by_entangler(const Sites& st, const OpSum& op, const Entangler& u) {
    OpSum r;
    r.pool = op.pool;
    for (auto& t : op.terms) {
        std::vector<int> moved;
        if (t.has_cell) {
            for (size_t i = 0; i < t.sites.size(); ++i) {
                bool id = true;
                for (size_t h = 0; h < t.shifts[i].size(); ++h)
                    if (t.shifts[i][h] != (int16_t)h) id = false;
                if (!id) moved.push_back(t.sites[i]);
            }
        } else {
            moved = t.sites;  // conservative
        }
        auto touching = [&](const PhaseCell& c) {
            for (int s : c.sites)
                if (std::binary_search(moved.begin(), moved.end(), s)) return true;
            return false;
        };
        if (!t.has_cell) {
            std::vector<int> extra;
            for (auto& c : u.cells)
                if (touching(c)) extra = merge_sites(extra, c.sites);
            std::vector<int> sup = merge_sites(t.sites, extra);
            OpSum tmp;
            tmp.pool = op.pool;
            Monomial f = t;
            materialize_flat(st, tmp, f);
            Monomial e = extend_flat(st, tmp, r, f, sup);
            std::vector<int> dims(sup.size());
            for (size_t i = 0; i < sup.size(); ++i) dims[i] = st.dim(sup[i]);
            std::vector<int> dg(sup.size(), 0), odg(sup.size());
            for (size_t cfg = 0; cfg < e.perm.size(); ++cfg) {
                if (e.perm[cfg] != Monomial::kDead) {
                    size_t p = e.perm[cfg];
                    for (size_t i = 0; i < sup.size(); ++i) {
                        odg[i] = (int)(p % dims[i]);
                        p /= dims[i];
                    }
                    Rat dphi(0);
                    for (auto& c : u.cells) {
                        if (!touching(c)) continue;
                        size_t ia = 0, ib = 0;
                        for (int i = (int)c.sites.size() - 1; i >= 0; --i) {
                            int sp = (int)(std::lower_bound(sup.begin(), sup.end(), c.sites[i]) -
                                           sup.begin());
                            ia = ia * st.dim(c.sites[i]) + odg[sp];
                            ib = ib * st.dim(c.sites[i]) + dg[sp];
                        }
                        dphi = dphi + c.table[ia] - c.table[ib];
                    }
                    Cyc v = r.pool[e.amp[cfg]] * Cyc::phase(dphi.mod1());
                    e.amp[cfg] = r.intern(v);
                }
                int i = 0;
                while (i < (int)dg.size() && ++dg[i] == dims[i]) dg[i++] = 0;
            }
            r.terms.push_back(std::move(e));
            continue;
        }
        Monomial m = t;
        m.has_flat = false;
        m.perm.clear();
        m.amp.clear();
        std::vector<int> extra;
        for (auto& c : u.cells)
            if (touching(c)) extra = merge_sites(extra, c.sites);
        std::vector<int> sup = merge_sites(m.sites, extra);
        std::vector<std::vector<int16_t>> shifts;
        auto mp = positions(m.sites, sup);
        for (size_t i = 0; i < sup.size(); ++i) {
            std::vector<int16_t> id(st.dim(sup[i]));
            for (int h = 0; h < st.dim(sup[i]); ++h) id[h] = (int16_t)h;
            shifts.push_back(std::move(id));
        }
        for (size_t i = 0; i < m.sites.size(); ++i) shifts[mp[i]] = m.shifts[i];
        m.sites = sup;
        m.shifts = std::move(shifts);
        for (auto& c : u.cells) {
            if (!touching(c)) continue;
            PhaseCell after;
            after.sites = c.sites;
            after.table.resize(c.table.size());
            std::vector<const std::vector<int16_t>*> via(c.sites.size(), nullptr);
            for (size_t i = 0; i < c.sites.size(); ++i) {
                auto it = std::lower_bound(m.sites.begin(), m.sites.end(), c.sites[i]);
                via[i] = &m.shifts[it - m.sites.begin()];
            }
            std::vector<int> dg(c.sites.size(), 0);
            for (size_t cfg = 0; cfg < c.table.size(); ++cfg) {
                size_t ix = 0;
                bool dead = false;
                for (int i = (int)c.sites.size() - 1; i >= 0; --i) {
                    int v = (*via[i])[dg[i]];
                    if (v < 0) { dead = true; break; }
                    ix = ix * st.dim(c.sites[i]) + v;
                }
                after.table[cfg] = dead ? Rat(0) : c.table[ix];
                int i = 0;
                while (i < (int)dg.size() && ++dg[i] == st.dim(c.sites[i])) dg[i++] = 0;
            }
            m.cells.push_back(std::move(after));
            PhaseCell before = c;
            for (auto& v : before.table) v = (-v).mod1();
            m.cells.push_back(std::move(before));
        }
        r.terms.push_back(std::move(m));
    }
    return r;
}

OpSum entangler_opsum(const Sites& st, const Entangler& u, const std::vector<int>& sites) {
    OpSum o;
    Monomial m;
    m.sites = sites;
    std::sort(m.sites.begin(), m.sites.end());
    m.has_cell = true;
    for (int s : m.sites) {
        std::vector<int16_t> id(st.dim(s));
        for (int h = 0; h < st.dim(s); ++h) id[h] = (int16_t)h;
        m.shifts.push_back(std::move(id));
    }
    for (auto& c : u.cells) {
        for (int s : c.sites)
            if (!std::binary_search(m.sites.begin(), m.sites.end(), s))
                throw std::invalid_argument("entangler_opsum: cell outside site set");
        m.cells.push_back(c);
    }
    o.terms.push_back(std::move(m));
    return o;
}

// ------------------------------------------------------------------- models

Rat ground_space_dim(const Sites& st, const std::vector<int>& patch_sites,
                     const std::vector<OpSum>& projectors, size_t max_dim) {
    std::vector<int> sorted = patch_sites;
    std::sort(sorted.begin(), sorted.end());
    size_t n = space_size(st, sorted);
    if (n > max_dim) throw std::invalid_argument("ground_space_dim: patch too large");
    std::vector<int> dims(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i) dims[i] = st.dim(sorted[i]);
    // per-projector term positions
    std::vector<std::vector<std::vector<int>>> ppos(projectors.size());
    for (size_t pi = 0; pi < projectors.size(); ++pi)
        for (auto& term : projectors[pi].terms) ppos[pi].push_back(positions(term.sites, sorted));
    Cyc trace;
    std::vector<int> sub, out;
    Cyc amp;
    for (size_t cfg = 0; cfg < n; ++cfg) {
        std::vector<std::pair<size_t, Cyc>> state = {{cfg, Cyc(1)}}, next;
        for (size_t pi = 0; pi < projectors.size(); ++pi) {
            auto& P = projectors[pi];
            next.clear();
            for (auto& [c, a0] : state) {
                std::vector<int> full(sorted.size());
                size_t t = c;
                for (size_t i = 0; i < sorted.size(); ++i) {
                    full[i] = (int)(t % dims[i]);
                    t /= dims[i];
                }
                for (size_t ti = 0; ti < P.terms.size(); ++ti) {
                    auto& term = P.terms[ti];
                    auto& pos = ppos[pi][ti];
                    sub.resize(term.sites.size());
                    for (size_t k = 0; k < sub.size(); ++k) sub[k] = full[pos[k]];
                    if (!eval_monomial(st, P, term, sub, out, amp)) continue;
                    std::vector<int> nf = full;
                    for (size_t k = 0; k < out.size(); ++k) nf[pos[k]] = out[k];
                    size_t nc = 0;
                    for (int i = (int)sorted.size() - 1; i >= 0; --i) nc = nc * dims[i] + nf[i];
                    next.push_back({nc, a0 * amp});
                }
            }
            std::sort(next.begin(), next.end(), [](auto& x, auto& y) { return x.first < y.first; });
            state.clear();
            for (size_t i = 0; i < next.size();) {
                size_t c = next[i].first;
                Cyc acc = next[i].second;
                ++i;
                while (i < next.size() && next[i].first == c) acc = acc + next[i++].second;
                if (!acc.is_zero()) state.push_back({c, acc});
            }
        }
        for (auto& [c, a0] : state)
            if (c == cfg) trace = trace + a0;
    }
    if (!trace.is_rational()) throw std::logic_error("ground_space_dim: non-rational trace");
    return trace.rational_part();
}

VerificationReport check_model(const StabilizerModel& m) {
    VerificationReport rep;
    auto overlap = [](const std::vector<int>& a, const std::vector<int>& b) {
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j]) ++i;
            else ++j;
        }
        return false;
    };
    auto support_of = [](const OpSum& o) {
        std::vector<int> u;
        for (auto& t : o.terms) u = merge_sites(u, t.sites);
        return u;
    };
    std::vector<std::vector<int>> sups;
    for (auto& t : m.terms) sups.push_back(support_of(t.op));
    std::vector<std::vector<bool>> declared(m.terms.size(), std::vector<bool>(m.terms.size(), false));
    for (auto& cr : m.conj_relations) {
        declared[cr.a][cr.b] = declared[cr.b][cr.a] = true;
        OpSum conj = op_conjugate(m.sites, m.terms[cr.a].op, m.terms[cr.b].op);
        bool ok = op_equal(m.sites, conj, op_dagger(m.sites, m.terms[cr.a].op));
        rep.entries.push_back({m.terms[cr.a].name, m.terms[cr.b].name, "conjugation-inverse", ok});
    }
    for (size_t i = 0; i < m.terms.size(); ++i)
        for (size_t j = i + 1; j < m.terms.size(); ++j) {
            if (declared[i][j]) continue;
            if (!overlap(sups[i], sups[j])) continue;
            bool ok = commutator_is_zero(m.sites, m.terms[i].op, m.terms[j].op);
            rep.entries.push_back({m.terms[i].name, m.terms[j].name, "commute", ok});
        }
    if (!m.patch_projectors.empty()) {
        rep.ground_dim = ground_space_dim(m.sites, m.patch_sites, m.patch_projectors);
        rep.frustration_free = rep.ground_dim.num > 0;
    }
    return rep;
}

}  // namespace sew
