#pragma once

// The gauging map on basis states and on symmetric operators.  A context
// names the vertex sites being consumed, the edge sites being produced
// (each edge carries the difference g_src^-1 g_tgt), and optionally
// "covariant spectator" sites that transform in a vertex frame (used for the
// sequential S3 gauging, where the residual Z2 acts on the Z3 edge qudits by
// conjugation).
//
// Operators are pushed through by exact evaluation: enumerate edge
// configurations, lift them to vertex configurations along a spanning
// forest, act, and read the new edge configuration.  By construction the
// result is independent of the lift if and only if the operator commutes
// with the gauged symmetry; with verify=true every lift is checked and a
// non-symmetric operator is rejected.

#include "sew/lattice.hpp"
#include "sew/opalg.hpp"

namespace sew {

struct GaugingContext {
    GroupPtr group;
    std::vector<int> vertices;  // vertex site ids (consumed)
    struct GEdge {
        int site;  // edge site id (produced)
        int src, tgt;
    };
    std::vector<GEdge> edges;
    // covariant spectators: site (kept), frame vertex, action[g] = table on
    // the spectator basis.  Gauged coordinates store sigma(g_frame)^{-1} s.
    struct Spectator {
        int site;
        int frame_vertex;
        std::vector<std::vector<int16_t>> action;  // per group element
    };
    std::vector<Spectator> spectators;
};

// basis-state map: vertex config -> edge config (and gauged spectators)
std::vector<int> gauge_state(const GaugingContext& ctx, const std::vector<int>& vertex_cfg,
                             const std::vector<int>& spectator_cfg = {});

// push a symmetric operator through the context
OpSum gauge_operator(const Sites& st, const GaugingContext& ctx, const OpSum& op,
                     bool verify = true);

// --- SPT-sewing of two 2d bulks ---------------------------------------------
//
// Two disconnected bulks with close-by boundaries (upper row a_i, lower row
// c_i, periodic length L) plus an optional middle chain b_i.  The seam SPT is
// given as diagonal entangler cells on the seam vertex sites; each layer's
// global symmetry is gauged with its own context.  The result holds the
// gauged wall and bulk terms.

struct SeamGeometry {
    int L = 0;
    GroupPtr group;
    bool middle_layer = false;
    // vertex site ids (pre-gauging)
    std::vector<int> a, b, c;      // seam rows (b empty unless middle_layer)
    std::vector<int> row_up, row_dn;
    Sites vertex_sites;
    // edge site ids (post-gauging), filled by sew_two_bulks
    Sites edge_sites;
    std::vector<int> ax, av, ux;   // upper: a-row horizontals, verticals, top-row horizontals
    std::vector<int> cx, cv, dx;   // lower: c-row horizontals, verticals, bottom-row horizontals
    std::vector<int> bx;           // middle chain horizontals (if middle_layer)
};

SeamGeometry make_seam(const GroupPtr& g, int L, bool middle_layer);

// entangler cells live on the seam vertex sites of `geom`; the returned model
// contains the gauged bulk and wall stabilizers
StabilizerModel sew_two_bulks(const SeamGeometry& geom, const Entangler& seam_spt);

// seam entangler for an Abelian two-copy 2-cocycle nu on G x G: phase
// exp(2 pi i [nu(a_i, c_i) - nu(a_i, c_{i-1})]) per column, the 1d lattice
// reduction of the topological action
Entangler seam_entangler_two_copy(const SeamGeometry& geom, const Cochain& nu_on_gxg);

// --- sequential S3 gauging ---------------------------------------------------

// Split representation of an S3 site: a Z3 site (c exponent) and a Z2 site
// (t exponent), with g = c^n t^q.
struct S3Split {
    int z3_site, z2_site;
};

// step 1: gauge the Z3 subgroup on a square patch (vertices carry split S3),
// step 2: gauge the remaining Z2 with conjugation action on the Z3 edges.
// Returns the final stabilizer terms and checks them against the direct S3
// gauging through the frame identification.
struct SequentialS3Result {
    Sites sites;                     // final: Z3 edge sites + Z2 edge sites
    std::vector<OpSum> step1_terms;  // SET intermediate (Z3 edges + Z2 vertices)
    std::vector<OpSum> final_terms;  // S3 quantum double stars
};

}  // namespace sew
