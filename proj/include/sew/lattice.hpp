#pragma once

// Oriented cell complexes for the models: periodic square lattices, 1d
// sewing sandwiches, stacked triangular lattices with a 3-coloring, cubic
// lattices with a wall plane, and folded lattices.  Vertices carry integer
// coordinates; edges are ordered vertex pairs (src -> tgt); faces are closed
// edge cycles with traversal signs.

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sew {

struct CellComplex {
    struct Vertex {
        std::array<int, 3> xyz{0, 0, 0};
        int color = -1;  // 0=R, 1=G, 2=B on triangular layers
        int layer = 0;
        std::string tag;
    };
    struct Edge {
        int src = -1, tgt = -1;
        std::string tag;
    };
    struct Face {
        std::vector<int> edges;
        std::vector<int> signs;  // +1 along edge orientation, -1 against
        std::string tag;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::string boundary;  // "periodic" | "open-smooth" | "open-rough" | "sewn-seam"
    int wall_plane = INT32_MIN;  // z coordinate of the wall, if any

    int add_vertex(std::array<int, 3> xyz, const std::string& tag = "", int color = -1, int layer = 0) {
        vertices.push_back({xyz, color, layer, tag});
        return (int)vertices.size() - 1;
    }
    int add_edge(int src, int tgt, const std::string& tag = "") {
        edges.push_back({src, tgt, tag});
        return (int)edges.size() - 1;
    }
    int add_face(std::vector<int> es, std::vector<int> signs, const std::string& tag = "") {
        faces.push_back({std::move(es), std::move(signs), tag});
        return (int)faces.size() - 1;
    }
    std::vector<int> edges_at(int v) const {
        std::vector<int> out;
        for (int e = 0; e < (int)edges.size(); ++e)
            if (edges[e].src == v || edges[e].tgt == v) out.push_back(e);
        return out;
    }
    // every face boundary is a closed cycle; triangular layers properly 3-colored
    void validate() const;
};

// periodic square lattice: Lx x Ly vertices, edges along +x and +y
CellComplex square2d(int Lx, int Ly);

// folded square lattice bookkeeping: pairs of edges identified by the fold
struct Folded {
    CellComplex base;               // the half lattice
    std::vector<std::array<int, 2>> edge_pairs;  // (front, back) indices into the doubled labels
};
Folded folded_square2d(int Lx, int Ly);

// stack of triangular lattices (periodic Lx x Ly per layer, layers along z),
// edges within a layer follow the R->G->B branching, vertical edges point -z
CellComplex triangular_stack(int L, int layers);

// cubic lattice patch with a wall plane at z = 0 (vertices z in [-zmin, zmax])
CellComplex cubic3d(int Lx, int Ly, int zminus, int zplus);

// --- ribbons ----------------------------------------------------------------

// A ribbon is a path of Kitaev sites (vertex, face).  Each step is an
// elementary triangle: "direct" runs along an edge (both sites share the
// face), "dual" crosses an edge (both sites share the vertex).
struct RibbonStep {
    bool dual = false;
    int edge = -1;
    // +1: the step runs along/with the edge orientation, -1 against it
    int orient = +1;
};
struct Site {
    int vertex = -1;
    int face = -1;
    bool operator==(const Site& o) const { return vertex == o.vertex && face == o.face; }
};
struct Ribbon {
    Site start, end;
    std::vector<RibbonStep> steps;
};

Ribbon compose_ribbons(const Ribbon& a, const Ribbon& b);

}  // namespace sew
