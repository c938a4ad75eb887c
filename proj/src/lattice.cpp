#include "sew/lattice.hpp"

#include <stdexcept>

namespace sew {

void CellComplex::validate() const {
    for (auto& f : faces) {
        if (f.edges.size() != f.signs.size()) throw std::logic_error("face: signs mismatch");
        // walk the cycle: with sign +1 an edge is traversed src->tgt
        int cur = f.signs[0] > 0 ? edges[f.edges[0]].src : edges[f.edges[0]].tgt;
        int start = cur;
        for (size_t i = 0; i < f.edges.size(); ++i) {
            const Edge& e = edges[f.edges[i]];
            int from = f.signs[i] > 0 ? e.src : e.tgt;
            int to = f.signs[i] > 0 ? e.tgt : e.src;
            if (from != cur) throw std::logic_error("face: boundary not a path");
            cur = to;
        }
        if (cur != start) throw std::logic_error("face: boundary not closed");
    }
    for (auto& e : edges) {
        int ca = vertices[e.src].color, cb = vertices[e.tgt].color;
        if (ca >= 0 && cb >= 0 && vertices[e.src].xyz[2] == vertices[e.tgt].xyz[2] && ca == cb)
            throw std::logic_error("triangular layer: adjacent same-color vertices");
    }
}

CellComplex square2d(int Lx, int Ly) {
    if (Lx < 2 || Ly < 2) throw std::invalid_argument("square2d: sizes >= 2");
    CellComplex c;
    c.boundary = "periodic";
    auto vid = [&](int x, int y) { return ((x % Lx + Lx) % Lx) + Lx * ((y % Ly + Ly) % Ly); };
    for (int y = 0; y < Ly; ++y)
        for (int x = 0; x < Lx; ++x) c.add_vertex({x, y, 0});
    for (int y = 0; y < Ly; ++y)
        for (int x = 0; x < Lx; ++x) {
            c.add_edge(vid(x, y), vid(x + 1, y), "x");
            c.add_edge(vid(x, y), vid(x, y + 1), "y");
        }
    auto ex = [&](int x, int y) { return 2 * (((x % Lx + Lx) % Lx) + Lx * ((y % Ly + Ly) % Ly)); };
    auto ey = [&](int x, int y) { return ex(x, y) + 1; };
    for (int y = 0; y < Ly; ++y)
        for (int x = 0; x < Lx; ++x)
            c.add_face({ex(x, y), ey(x + 1, y), ex(x, y + 1), ey(x, y)}, {+1, +1, -1, -1});
    c.validate();
    return c;
}

Folded folded_square2d(int Lx, int Ly) {
    Folded f;
    f.base = square2d(Lx, Ly);
    f.edge_pairs.reserve(f.base.edges.size());
    for (int e = 0; e < (int)f.base.edges.size(); ++e) f.edge_pairs.push_back({2 * e, 2 * e + 1});
    return f;
}

CellComplex triangular_stack(int L, int layers) {
    if (L < 3 || L % 3 != 0) throw std::invalid_argument("triangular_stack: L must be a multiple of 3");
    CellComplex c;
    c.boundary = "periodic";
    // triangular lattice as a sheared grid: neighbors +x, +y, and (+x,-y);
    // the coloring (x + 2y) mod 3 is proper for these adjacencies
    auto vid = [&](int x, int y, int z) {
        return (((x % L) + L) % L) + L * ((((y % L) + L) % L) + L * z);
    };
    for (int z = 0; z < layers; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                int color = ((x + 2 * y) % 3 + 3) % 3;
                c.add_vertex({x, y, z}, "", color, z);
            }
    std::map<std::array<int, 2>, int> eid;
    for (int z = 0; z < layers; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                int a = vid(x, y, z);
                for (auto [dx, dy] : {std::array<int, 2>{1, 0}, {0, 1}, {1, -1}}) {
                    int b = vid(x + dx, y + dy, z);
                    int ca = c.vertices[a].color, cb = c.vertices[b].color;
                    int src = a, tgt = b;
                    // branching: edges point from color k to color k+1 mod 3
                    if ((ca + 1) % 3 != cb) std::swap(src, tgt);
                    int e = c.add_edge(src, tgt, "t");
                    eid[{std::min(a, b), std::max(a, b)}] = e;
                }
            }
    for (int z = 1; z < layers; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) c.add_edge(vid(x, y, z), vid(x, y, z - 1), "v");
    auto find_edge = [&](int a, int b) {
        auto it = eid.find({std::min(a, b), std::max(a, b)});
        return it == eid.end() ? -1 : it->second;
    };
    auto sgn = [&](int e, int from) { return c.edges[e].src == from ? +1 : -1; };
    for (int z = 0; z < layers; ++z)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                int v0 = vid(x, y, z);
                int a1 = vid(x + 1, y, z), a2 = vid(x + 1, y - 1, z);
                int e01 = find_edge(v0, a1), e12 = find_edge(a1, a2), e20 = find_edge(a2, v0);
                if (e01 >= 0 && e12 >= 0 && e20 >= 0)
                    c.add_face({e01, e12, e20}, {sgn(e01, v0), sgn(e12, a1), sgn(e20, a2)}, "up");
                int b1 = vid(x, y + 1, z), b2 = vid(x + 1, y, z);
                int f01 = find_edge(v0, b1), f12 = find_edge(b1, b2), f20 = find_edge(b2, v0);
                if (f01 >= 0 && f12 >= 0 && f20 >= 0)
                    c.add_face({f01, f12, f20}, {sgn(f01, v0), sgn(f12, b1), sgn(f20, b2)}, "down");
            }
    c.validate();
    return c;
}

CellComplex cubic3d(int Lx, int Ly, int zminus, int zplus) {
    if (Lx < 2 || Ly < 2 || zminus < 1 || zplus < 1)
        throw std::invalid_argument("cubic3d: degenerate sizes");
    CellComplex c;
    c.boundary = "periodic-xy";
    c.wall_plane = 0;
    std::map<std::array<int, 3>, int> vid;
    for (int z = -zminus; z <= zplus; ++z)
        for (int y = 0; y < Ly; ++y)
            for (int x = 0; x < Lx; ++x) vid[{x, y, z}] = c.add_vertex({x, y, z});
    auto v = [&](int x, int y, int z) { return vid.at({(x % Lx + Lx) % Lx, (y % Ly + Ly) % Ly, z}); };
    std::map<std::array<int, 4>, int> eid;
    for (int z = -zminus; z <= zplus; ++z)
        for (int y = 0; y < Ly; ++y)
            for (int x = 0; x < Lx; ++x) {
                eid[{x, y, z, 0}] = c.add_edge(v(x, y, z), v(x + 1, y, z), "x");
                eid[{x, y, z, 1}] = c.add_edge(v(x, y, z), v(x, y + 1, z), "y");
                if (z < zplus) eid[{x, y, z, 2}] = c.add_edge(v(x, y, z), v(x, y, z + 1), "z");
            }
    auto e = [&](int x, int y, int z, int d) {
        return eid.at({(x % Lx + Lx) % Lx, (y % Ly + Ly) % Ly, z, d});
    };
    for (int z = -zminus; z <= zplus; ++z)
        for (int y = 0; y < Ly; ++y)
            for (int x = 0; x < Lx; ++x) {
                c.add_face({e(x, y, z, 0), e(x + 1, y, z, 1), e(x, y + 1, z, 0), e(x, y, z, 1)},
                           {+1, +1, -1, -1}, "xy");
                if (z < zplus) {
                    c.add_face({e(x, y, z, 0), e(x + 1, y, z, 2), e(x, y, z + 1, 0), e(x, y, z, 2)},
                               {+1, +1, -1, -1}, "xz");
                    c.add_face({e(x, y, z, 1), e(x, y + 1, z, 2), e(x, y, z + 1, 1), e(x, y, z, 2)},
                               {+1, +1, -1, -1}, "yz");
                }
            }
    c.validate();
    return c;
}

Ribbon compose_ribbons(const Ribbon& a, const Ribbon& b) {
    if (a.steps.empty()) return b;
    if (b.steps.empty()) return a;
    if (!(a.end == b.start)) throw std::invalid_argument("compose_ribbons: endpoint mismatch");
    Ribbon r;
    r.start = a.start;
    r.end = b.end;
    r.steps = a.steps;
    r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
    return r;
}

}  // namespace sew
