#include "sew/gauging.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sew {

std::vector<int> gauge_state(const GaugingContext& ctx, const std::vector<int>& vertex_cfg,
                             const std::vector<int>& spectator_cfg) {
    const auto& G = *ctx.group;
    std::map<int, int> vpos;
    for (size_t i = 0; i < ctx.vertices.size(); ++i) vpos[ctx.vertices[i]] = (int)i;
    std::vector<int> out;
    out.reserve(ctx.edges.size() + ctx.spectators.size());
    for (auto& e : ctx.edges) {
        int gs = vertex_cfg[vpos.at(e.src)], gt = vertex_cfg[vpos.at(e.tgt)];
        out.push_back(G.mul(G.inv(gs), gt));
    }
    for (size_t i = 0; i < ctx.spectators.size(); ++i) {
        const auto& sp = ctx.spectators[i];
        int gf = vertex_cfg[vpos.at(sp.frame_vertex)];
        // gauged coordinate: sigma(g_frame)^{-1} s
        const auto& act = sp.action[G.inv(gf)];
        out.push_back(act[spectator_cfg[i]]);
    }
    return out;
}

OpSum gauge_operator(const Sites& st, const GaugingContext& ctx, const OpSum& op, bool verify) {
    const auto& G = *ctx.group;
    // operator support split
    std::vector<int> sup;
    for (auto& t : op.terms) {
        std::vector<int> u;
        std::set_union(sup.begin(), sup.end(), t.sites.begin(), t.sites.end(),
                       std::back_inserter(u));
        sup = std::move(u);
    }
    std::vector<int> S;  // touched context vertices
    for (int v : ctx.vertices)
        if (std::binary_search(sup.begin(), sup.end(), v)) S.push_back(v);
    if (S.empty()) return op;

    // local edge set: edges incident to S; local vertices: S + endpoints
    std::vector<GaugingContext::GEdge> eloc;
    std::vector<int> vloc = S;
    for (auto& e : ctx.edges) {
        bool touch = std::binary_search(S.begin(), S.end(), e.src) ||
                     std::binary_search(S.begin(), S.end(), e.tgt);
        if (!touch) continue;
        eloc.push_back(e);
        vloc.push_back(e.src);
        vloc.push_back(e.tgt);
    }
    std::sort(vloc.begin(), vloc.end());
    vloc.erase(std::unique(vloc.begin(), vloc.end()), vloc.end());

    // affected covariant spectators: in the support, or framed at a vertex
    // that the operator may move
    std::vector<const GaugingContext::Spectator*> sploc;
    for (auto& sp : ctx.spectators) {
        bool in_sup = std::binary_search(sup.begin(), sup.end(), sp.site);
        bool framed = std::binary_search(S.begin(), S.end(), sp.frame_vertex);
        if (in_sup || framed) {
            sploc.push_back(&sp);
            if (!std::binary_search(vloc.begin(), vloc.end(), sp.frame_vertex)) {
                vloc.insert(std::lower_bound(vloc.begin(), vloc.end(), sp.frame_vertex),
                            sp.frame_vertex);
            }
        }
    }

    // passthrough sites: support minus context vertices minus local spectators
    std::vector<int> pass;
    for (int s : sup) {
        if (std::binary_search(ctx.vertices.begin(), ctx.vertices.end(), s)) continue;
        bool is_sp = false;
        for (auto* sp : sploc)
            if (sp->site == s) is_sp = true;
        if (!is_sp) pass.push_back(s);
    }

    // spanning forest over (vloc, eloc)
    std::map<int, int> vix;
    for (size_t i = 0; i < vloc.size(); ++i) vix[vloc[i]] = (int)i;
    std::vector<std::vector<std::pair<int, int>>> adj(vloc.size());  // (edge index, nbr vix)
    for (size_t k = 0; k < eloc.size(); ++k) {
        adj[vix[eloc[k].src]].push_back({(int)k, vix[eloc[k].tgt]});
        adj[vix[eloc[k].tgt]].push_back({(int)k, vix[eloc[k].src]});
    }
    std::vector<int> comp(vloc.size(), -1), order;
    std::vector<std::pair<int, int>> parent(vloc.size(), {-1, -1});  // (parent vix, edge idx)
    int ncomp = 0;
    for (size_t r = 0; r < vloc.size(); ++r) {
        if (comp[r] >= 0) continue;
        comp[r] = ncomp;
        std::vector<int> stack = {(int)r};
        order.push_back((int)r);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [ek, w] : adj[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    parent[w] = {v, ek};
                    order.push_back(w);
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    // BFS order grouped by discovery: re-derive a proper traversal order
    // (order[] above is DFS discovery, parents set before children visited)

    // output sites: local edges + gauged spectators + passthrough
    std::vector<int> out_sites;
    for (auto& e : eloc) out_sites.push_back(e.site);
    for (auto* sp : sploc) out_sites.push_back(sp->site);
    for (int s : pass) out_sites.push_back(s);
    std::sort(out_sites.begin(), out_sites.end());
    out_sites.erase(std::unique(out_sites.begin(), out_sites.end()), out_sites.end());
    size_t nout = 1;
    for (int s : out_sites) nout *= st.dim(s);
    if (nout > (1u << 24)) throw std::runtime_error("gauge_operator: output support too large");

    auto opos = [&](int site) {
        return (int)(std::lower_bound(out_sites.begin(), out_sites.end(), site) -
                     out_sites.begin());
    };
    std::vector<int> epos(eloc.size()), sppos(sploc.size()), ppos(pass.size());
    for (size_t k = 0; k < eloc.size(); ++k) epos[k] = opos(eloc[k].site);
    for (size_t k = 0; k < sploc.size(); ++k) sppos[k] = opos(sploc[k]->site);
    for (size_t k = 0; k < pass.size(); ++k) ppos[k] = opos(pass[k]);

    // input (vertex-level) site list for applying op: vloc vertices +
    // spectator sites + passthrough
    std::vector<int> in_sites;
    for (int v : vloc) in_sites.push_back(v);
    for (auto* sp : sploc) in_sites.push_back(sp->site);
    for (int s : pass) in_sites.push_back(s);
    std::sort(in_sites.begin(), in_sites.end());
    std::map<int, int> in_pos;
    for (size_t i = 0; i < in_sites.size(); ++i) in_pos[in_sites[i]] = (int)i;
    // term positions within in_sites
    std::vector<std::vector<int>> tpos;
    for (auto& t : op.terms) {
        std::vector<int> p;
        for (int s : t.sites) p.push_back(in_pos.at(s));
        tpos.push_back(std::move(p));
    }

    int nlift = 1;
    if (verify)
        for (int c = 0; c < ncomp; ++c) nlift *= G.n;

    // result accumulation: per input config, list of (target cfg, amp)
    std::vector<std::vector<std::pair<size_t, Cyc>>> table(nout);
    std::vector<int> odg(out_sites.size());
    std::vector<int> vval(vloc.size());
    std::vector<int> ival(in_sites.size());
    std::vector<int> sub, outv;
    Cyc amp;

    for (size_t cfg = 0; cfg < nout; ++cfg) {
        size_t t = cfg;
        for (size_t i = 0; i < out_sites.size(); ++i) {
            odg[i] = (int)(t % st.dim(out_sites[i]));
            t /= st.dim(out_sites[i]);
        }
        std::vector<std::pair<size_t, Cyc>> result;
        bool first_lift = true;
        for (int lift = 0; lift < nlift; ++lift) {
            // component base values
            std::vector<int> base(ncomp, 0);
            if (verify) {
                int l = lift;
                for (int c = 0; c < ncomp; ++c) {
                    base[c] = l % G.n;
                    l /= G.n;
                }
            }
            // assign vertex values along the forest: x_e = g_src^-1 g_tgt
            for (int v : order) {
                if (parent[v].first < 0) {
                    vval[v] = base[comp[v]];
                } else {
                    int pv = parent[v].first, ek = parent[v].second;
                    int x = odg[epos[ek]];
                    if (vix[eloc[ek].src] == pv) {
                        vval[v] = G.mul(vval[pv], x);  // g_tgt = g_src x
                    } else {
                        vval[v] = G.mul(vval[pv], G.inv(x));  // g_src = g_tgt x^-1
                    }
                }
            }
            // canonical extension off the gauge image: each edge keeps its
            // flux defect D_e = (g_src^-1 g_tgt)^-1 * digit through the push
            std::vector<int> defect(eloc.size());
            for (size_t k = 0; k < eloc.size(); ++k) {
                int tree_val = G.mul(G.inv(vval[vix.at(eloc[k].src)]), vval[vix.at(eloc[k].tgt)]);
                defect[k] = G.mul(G.inv(tree_val), odg[epos[k]]);
            }
            // assemble input values
            for (size_t i = 0; i < vloc.size(); ++i) ival[in_pos.at(vloc[i])] = vval[i];
            for (size_t k = 0; k < sploc.size(); ++k) {
                // ungauged spectator: s = sigma(g_frame) s_gauged
                int gf = vval[vix.at(sploc[k]->frame_vertex)];
                ival[in_pos.at(sploc[k]->site)] = sploc[k]->action[gf][odg[sppos[k]]];
            }
            for (size_t k = 0; k < pass.size(); ++k) ival[in_pos.at(pass[k])] = odg[ppos[k]];
            // apply all terms
            std::vector<std::pair<size_t, Cyc>> res;
            for (size_t ti = 0; ti < op.terms.size(); ++ti) {
                auto& tm = op.terms[ti];
                sub.resize(tm.sites.size());
                for (size_t k = 0; k < sub.size(); ++k) sub[k] = ival[tpos[ti][k]];
                // evaluate
                {
                    // reuse flat/cellular evaluation via a local copy of logic
                }
                // inline evaluation
                bool alive = true;
                Cyc a0;
                std::vector<int> tout;
                if (tm.has_flat) {
                    size_t c2 = 0;
                    for (int i = (int)tm.sites.size() - 1; i >= 0; --i)
                        c2 = c2 * st.dim(tm.sites[i]) + sub[i];
                    uint32_t p = tm.perm[c2];
                    if (p == Monomial::kDead) alive = false;
                    else {
                        a0 = op.pool[tm.amp[c2]];
                        if (a0.is_zero()) alive = false;
                        tout.resize(tm.sites.size());
                        size_t pp = p;
                        for (size_t i = 0; i < tm.sites.size(); ++i) {
                            tout[i] = (int)(pp % st.dim(tm.sites[i]));
                            pp /= st.dim(tm.sites[i]);
                        }
                    }
                } else {
                    tout.resize(tm.sites.size());
                    for (size_t i = 0; i < tm.sites.size() && alive; ++i) {
                        int v = tm.shifts[i][sub[i]];
                        if (v < 0) alive = false;
                        else tout[i] = v;
                    }
                    if (alive) {
                        Rat ph(0);
                        for (auto& c : tm.cells) {
                            size_t ix = 0;
                            for (int i = (int)c.sites.size() - 1; i >= 0; --i) {
                                auto it = std::lower_bound(tm.sites.begin(), tm.sites.end(),
                                                           c.sites[i]);
                                ix = ix * st.dim(c.sites[i]) + sub[it - tm.sites.begin()];
                            }
                            ph = ph + c.table[ix];
                        }
                        a0 = tm.coeff * Cyc::phase(ph.mod1());
                        if (a0.is_zero()) alive = false;
                    }
                }
                if (!alive) continue;
                // write new input values
                std::vector<int> nival = ival;
                for (size_t k = 0; k < tm.sites.size(); ++k) nival[tpos[ti][k]] = tout[k];
                // re-gauge: new vertex values -> new edge digits (defects kept)
                std::vector<int> nodg = odg;
                for (size_t k = 0; k < eloc.size(); ++k) {
                    int gs = nival[in_pos.at(eloc[k].src)];
                    int gt = nival[in_pos.at(eloc[k].tgt)];
                    nodg[epos[k]] = G.mul(G.mul(G.inv(gs), gt), defect[k]);
                }
                for (size_t k = 0; k < sploc.size(); ++k) {
                    int gf = nival[in_pos.at(sploc[k]->frame_vertex)];
                    int sval = nival[in_pos.at(sploc[k]->site)];
                    nodg[sppos[k]] = sploc[k]->action[G.inv(gf)][sval];
                }
                for (size_t k = 0; k < pass.size(); ++k) nodg[ppos[k]] = nival[in_pos.at(pass[k])];
                size_t ncfg = 0;
                for (int i = (int)out_sites.size() - 1; i >= 0; --i)
                    ncfg = ncfg * st.dim(out_sites[i]) + nodg[i];
                res.push_back({ncfg, a0});
            }
            std::sort(res.begin(), res.end(), [](auto& x, auto& y) { return x.first < y.first; });
            // fold duplicates
            std::vector<std::pair<size_t, Cyc>> folded;
            for (size_t i = 0; i < res.size();) {
                size_t c2 = res[i].first;
                Cyc acc = res[i].second;
                ++i;
                while (i < res.size() && res[i].first == c2) acc = acc + res[i++].second;
                if (!acc.is_zero()) folded.push_back({c2, acc});
            }
            if (first_lift) {
                result = std::move(folded);
                first_lift = false;
            } else if (verify) {
                bool same = folded.size() == result.size();
                for (size_t i = 0; same && i < folded.size(); ++i)
                    same = folded[i].first == result[i].first && folded[i].second == result[i].second;
                if (!same)
                    throw std::invalid_argument(
                        "gauge_operator: operator is not symmetric under the gauged group");
            }
        }
        table[cfg] = std::move(result);
    }

    // decompose the table into monomials: k-th monomial takes the k-th branch
    size_t maxbranch = 0;
    for (auto& r : table) maxbranch = std::max(maxbranch, r.size());
    OpSum out;
    for (size_t k = 0; k < maxbranch; ++k) {
        Monomial m;
        m.sites = out_sites;
        m.has_flat = true;
        m.perm.assign(nout, Monomial::kDead);
        uint32_t zero = out.intern(Cyc(0));
        m.amp.assign(nout, zero);
        bool any = false;
        for (size_t cfg = 0; cfg < nout; ++cfg) {
            if (k >= table[cfg].size()) continue;
            m.perm[cfg] = (uint32_t)table[cfg][k].first;
            m.amp[cfg] = out.intern(table[cfg][k].second);
            any = true;
        }
        if (any) out.terms.push_back(std::move(m));
    }
    op_canonicalize(st, out);
    return out;
}

// ----------------------------------------------------------------- sewing

SeamGeometry make_seam(const GroupPtr& g, int L, bool middle_layer) {
    if (L < 3) throw std::invalid_argument("make_seam: L >= 3");
    SeamGeometry s;
    s.L = L;
    s.group = g;
    s.middle_layer = middle_layer;
    for (int i = 0; i < L; ++i) s.row_up.push_back(s.vertex_sites.add(g, "up" + std::to_string(i)));
    for (int i = 0; i < L; ++i) s.a.push_back(s.vertex_sites.add(g, "a" + std::to_string(i)));
    if (middle_layer)
        for (int i = 0; i < L; ++i) s.b.push_back(s.vertex_sites.add(g, "b" + std::to_string(i)));
    for (int i = 0; i < L; ++i) s.c.push_back(s.vertex_sites.add(g, "c" + std::to_string(i)));
    for (int i = 0; i < L; ++i) s.row_dn.push_back(s.vertex_sites.add(g, "dn" + std::to_string(i)));
    return s;
}

StabilizerModel sew_two_bulks(const SeamGeometry& geom, const Entangler& seam_spt) {
    const int L = geom.L;
    const auto& G = geom.group;
    // sites after gauging: vertex sites re-used as scratch; build a fresh
    // Sites table containing both vertex (input) and edge (output) ids so a
    // single Sites object serves the whole derivation.
    SeamGeometry g2 = geom;  // copy to fill edge ids
    Sites st = geom.vertex_sites;
    auto addE = [&](const char* tag, int i) { return st.add(G, std::string(tag) + std::to_string(i)); };
    for (int i = 0; i < L; ++i) g2.ax.push_back(addE("ax", i));
    for (int i = 0; i < L; ++i) g2.av.push_back(addE("av", i));
    for (int i = 0; i < L; ++i) g2.ux.push_back(addE("ux", i));
    for (int i = 0; i < L; ++i) g2.cx.push_back(addE("cx", i));
    for (int i = 0; i < L; ++i) g2.cv.push_back(addE("cv", i));
    for (int i = 0; i < L; ++i) g2.dx.push_back(addE("dx", i));
    if (geom.middle_layer)
        for (int i = 0; i < L; ++i) g2.bx.push_back(addE("bx", i));

    GaugingContext up;
    up.group = G;
    up.vertices = g2.a;
    up.vertices.insert(up.vertices.end(), g2.row_up.begin(), g2.row_up.end());
    std::sort(up.vertices.begin(), up.vertices.end());
    for (int i = 0; i < L; ++i) {
        up.edges.push_back({g2.ax[i], g2.a[i], g2.a[(i + 1) % L]});
        up.edges.push_back({g2.av[i], g2.a[i], g2.row_up[i]});
        up.edges.push_back({g2.ux[i], g2.row_up[i], g2.row_up[(i + 1) % L]});
    }
    GaugingContext dn;
    dn.group = G;
    dn.vertices = g2.c;
    dn.vertices.insert(dn.vertices.end(), g2.row_dn.begin(), g2.row_dn.end());
    std::sort(dn.vertices.begin(), dn.vertices.end());
    for (int i = 0; i < L; ++i) {
        dn.edges.push_back({g2.cx[i], g2.c[i], g2.c[(i + 1) % L]});
        dn.edges.push_back({g2.cv[i], g2.c[i], g2.row_dn[i]});
        dn.edges.push_back({g2.dx[i], g2.row_dn[i], g2.row_dn[(i + 1) % L]});
    }
    GaugingContext mid;
    if (geom.middle_layer) {
        mid.group = G;
        mid.vertices = g2.b;
        std::sort(mid.vertices.begin(), mid.vertices.end());
        for (int i = 0; i < L; ++i) mid.edges.push_back({g2.bx[i], g2.b[i], g2.b[(i + 1) % L]});
    }

    StabilizerModel model;
    model.sites = st;
    auto push_gauged = [&](const std::string& name, const OpSum& pre) {
        OpSum o = gauge_operator(st, up, pre);
        o = gauge_operator(st, dn, o);
        if (geom.middle_layer) o = gauge_operator(st, mid, o);
        model.terms.push_back({name, o});
    };

    // seam stabilizers: conjugated L_-^g at every seam vertex, averaged over g
    auto site_stab = [&](int site) {
        OpSum acc;
        bool first = true;
        for (int g = 0; g < G->n; ++g) {
            OpSum term = conjugate_by_entangler(st, op_lminus(st, site, g), seam_spt);
            term = op_scale(term, Cyc(Rat(1, G->n)));
            acc = first ? term : op_add(st, acc, term);
            first = false;
        }
        return acc;
    };
    for (int i = 0; i < L; ++i) push_gauged("wall_a" + std::to_string(i), site_stab(g2.a[i]));
    if (geom.middle_layer)
        for (int i = 0; i < L; ++i) push_gauged("wall_b" + std::to_string(i), site_stab(g2.b[i]));
    for (int i = 0; i < L; ++i) push_gauged("wall_c" + std::to_string(i), site_stab(g2.c[i]));
    // bulk rows: plain stars
    auto row_stab = [&](int site) {
        OpSum acc;
        bool first = true;
        for (int g = 0; g < G->n; ++g) {
            OpSum term = op_scale(op_lminus(st, site, g), Cyc(Rat(1, G->n)));
            acc = first ? term : op_add(st, acc, term);
            first = false;
        }
        return acc;
    };
    for (int i = 0; i < L; ++i) push_gauged("bulk_up" + std::to_string(i), row_stab(g2.row_up[i]));
    for (int i = 0; i < L; ++i) push_gauged("bulk_dn" + std::to_string(i), row_stab(g2.row_dn[i]));

    // plaquette terms: zero-flux projector on the two bulk face rows
    auto plaquette = [&](int e1, int e2, int e3, int e4) {
        // boundary a(i) -> a(i+1) -> up(i+1) -> up(i) -> a(i): x1 * x2 * x3^-1 * x4^-1 = e
        std::vector<int> sites = {e1, e2, e3, e4};
        return op_cell(st, sites, [&](const std::vector<int>&) { return Rat(0); });
    };
    (void)plaquette;
    for (int i = 0; i < L; ++i) {
        // flux projector as an explicit diagonal: sum over configs with
        // trivial oriented product
        std::vector<int> es = {g2.ax[i], g2.av[(i + 1) % L], g2.ux[i], g2.av[i]};
        OpSum proj;
        Monomial m;
        std::vector<int> sorted = es;
        std::sort(sorted.begin(), sorted.end());
        m.sites = sorted;
        size_t n = 1;
        for (int s : sorted) n *= st.dim(s);
        m.perm.resize(n);
        m.amp.resize(n);
        m.has_flat = true;
        std::vector<int> pos;
        for (int e : es)
            pos.push_back((int)(std::lower_bound(sorted.begin(), sorted.end(), e) - sorted.begin()));
        std::vector<int> dg(sorted.size(), 0);
        uint32_t one = proj.intern(Cyc(1)), zero = proj.intern(Cyc(0));
        for (size_t cfg = 0; cfg < n; ++cfg) {
            // product x1 x2 x3^-1 x4^-1
            int p = G->mul(dg[pos[0]], dg[pos[1]]);
            p = G->mul(p, G->inv(dg[pos[2]]));
            p = G->mul(p, G->inv(dg[pos[3]]));
            m.perm[cfg] = p == 0 ? (uint32_t)cfg : Monomial::kDead;
            m.amp[cfg] = p == 0 ? one : zero;
            int k = 0;
            while (k < (int)dg.size() && ++dg[k] == st.dim(sorted[k])) dg[k++] = 0;
        }
        proj.terms.push_back(std::move(m));
        model.terms.push_back({"Bp_up" + std::to_string(i), proj});
    }
    for (int i = 0; i < L; ++i) {
        std::vector<int> es = {g2.cx[i], g2.cv[(i + 1) % L], g2.dx[i], g2.cv[i]};
        OpSum proj;
        Monomial m;
        std::vector<int> sorted = es;
        std::sort(sorted.begin(), sorted.end());
        m.sites = sorted;
        size_t n = 1;
        for (int s : sorted) n *= st.dim(s);
        m.perm.resize(n);
        m.amp.resize(n);
        m.has_flat = true;
        std::vector<int> pos;
        for (int e : es)
            pos.push_back((int)(std::lower_bound(sorted.begin(), sorted.end(), e) - sorted.begin()));
        std::vector<int> dg(sorted.size(), 0);
        uint32_t one = proj.intern(Cyc(1)), zero = proj.intern(Cyc(0));
        for (size_t cfg = 0; cfg < n; ++cfg) {
            int p = G->mul(dg[pos[0]], dg[pos[1]]);
            p = G->mul(p, G->inv(dg[pos[2]]));
            p = G->mul(p, G->inv(dg[pos[3]]));
            m.perm[cfg] = p == 0 ? (uint32_t)cfg : Monomial::kDead;
            m.amp[cfg] = p == 0 ? one : zero;
            int k = 0;
            while (k < (int)dg.size() && ++dg[k] == st.dim(sorted[k])) dg[k++] = 0;
        }
        proj.terms.push_back(std::move(m));
        model.terms.push_back({"Bp_dn" + std::to_string(i), proj});
    }
    return model;
}

Entangler seam_entangler_two_copy(const SeamGeometry& geom, const Cochain& nu) {
    // nu lives on G x G with the first copy on layer a and the second on
    // layer c; the 1d reduction attaches exp(2 pi i [nu(a_i, c_i) - nu(a_i,
    // c_{i-1})]) per column
    const auto& H = *nu.group;
    const auto& G = *geom.group;
    if (H.n != G.n * G.n) throw std::invalid_argument("seam_entangler_two_copy: group mismatch");
    Entangler e;
    auto embed = [&](int a, int c) { return a + G.n * c; };
    for (int i = 0; i < geom.L; ++i) {
        for (int sgn = 0; sgn < 2; ++sgn) {
            PhaseCell cell;
            int asite = geom.a[i];
            int csite = sgn == 0 ? geom.c[i] : geom.c[(i - 1 + geom.L) % geom.L];
            cell.sites = {std::min(asite, csite), std::max(asite, csite)};
            cell.table.resize((size_t)G.n * G.n);
            for (int x = 0; x < G.n; ++x)      // digit of the lower site id
                for (int y = 0; y < G.n; ++y)  // digit of the higher site id
                {
                    int aval = cell.sites[0] == asite ? x : y;
                    int cval = cell.sites[0] == asite ? y : x;
                    Rat v = nu.at({embed(aval, 0), embed(0, cval)});
                    cell.table[(size_t)y * G.n + x] = (sgn == 0 ? v : -v).mod1();
                }
            e.cells.push_back(std::move(cell));
        }
    }
    return e;
}

}  // namespace sew
