#pragma once

// Exact operator algebra on group-valued qudits.  Operators are sums of
// monomials: a permutation of the support configurations times a
// configuration-dependent cyclotomic amplitude.  Everything is evaluated
// support-locally and exactly; there is no matrix representation and no
// floating point.
//
// Monomials carry one or both of two forms:
//   flat     -- dense perm/amp arrays over the support configuration space;
//               used for small supports (the default);
//   cellular -- per-site shift tables plus small diagonal "phase cells";
//               products of single-site gates and cocycle dressings keep
//               this form, which lets commutators of large-support terms be
//               decided without enumerating the joint configuration space.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sew/cohomology.hpp"
#include "sew/group.hpp"

namespace sew {

struct Sites {
    std::vector<GroupPtr> groups;
    std::vector<std::string> names;

    int add(const GroupPtr& g, const std::string& name = "") {
        groups.push_back(g);
        names.push_back(name.empty() ? "site" + std::to_string(groups.size() - 1) : name);
        return (int)groups.size() - 1;
    }
    int dim(int s) const { return groups[s]->n; }
    size_t count() const { return groups.size(); }
};

// diagonal phase factor exp(2 pi i table[cfg]) on a few sites
struct PhaseCell {
    std::vector<int> sites;  // sorted
    std::vector<Rat> table;  // indexed little-endian by the sites' digits
};

struct Monomial {
    std::vector<int> sites;  // sorted support

    // flat form
    std::vector<uint32_t> perm;  // cfg -> cfg, UINT32_MAX = annihilated
    std::vector<uint32_t> amp;   // cfg -> pool index (owned by OpSum)
    bool has_flat = false;

    // cellular form: per-site shift tables (tgt[d] = image digit, -1 dead),
    // overall coefficient, and diagonal phase cells evaluated on the input
    std::vector<std::vector<int16_t>> shifts;
    std::vector<PhaseCell> cells;
    Cyc coeff = Cyc(1);
    bool has_cell = false;

    static constexpr uint32_t kDead = UINT32_MAX;
};

class OpSum {
  public:
    std::vector<Monomial> terms;
    std::vector<Cyc> pool;

    uint32_t intern(const Cyc& c);
    const Cyc& amp_of(const Monomial& m, size_t cfg) const { return pool[m.amp[cfg]]; }
    bool empty() const { return terms.empty(); }
};

// --- construction -----------------------------------------------------------

OpSum op_identity();

// Single-site primitives; g is an element index of the site's group.
OpSum op_lplus(const Sites& st, int site, int g);    // |h> -> |gh>
OpSum op_lminus(const Sites& st, int site, int g);   // |h> -> |h g^-1>
OpSum op_tplus(const Sites& st, int site, int g);    // projector onto |g>
OpSum op_tminus(const Sites& st, int site, int g);   // projector onto |g^-1>
OpSum op_sigma(const Sites& st, int site, int g);    // |h> -> |g h g^-1>
OpSum op_diag(const Sites& st, int site, const std::function<Rat(int)>& f);
OpSum op_xshift(const Sites& st, int site, int k = 1);   // cyclic |h> -> |h+k>
OpSum op_zphase(const Sites& st, int site, int k = 1);   // diag e^{2 pi i k h/n}
OpSum op_s3_zl(const Sites& st, int site, int power = 1);
OpSum op_s3_zr(const Sites& st, int site, int power = 1);
OpSum op_s3_z(const Sites& st, int site);
// diagonal phase cell on several sites
OpSum op_cell(const Sites& st, const std::vector<int>& sites,
              const std::function<Rat(const std::vector<int>&)>& f);

// --- algebra ----------------------------------------------------------------

OpSum op_add(const Sites& st, const OpSum& a, const OpSum& b);
OpSum op_scale(const OpSum& a, const Cyc& c);
OpSum op_mul(const Sites& st, const OpSum& a, const OpSum& b, size_t max_configs = (1u << 24));
OpSum op_dagger(const Sites& st, const OpSum& a);
void op_canonicalize(const Sites& st, OpSum& a);
bool op_is_zero(const Sites& st, const OpSum& a);
bool op_equal(const Sites& st, const OpSum& a, const OpSum& b);
bool commutator_is_zero(const Sites& st, const OpSum& a, const OpSum& b,
                        size_t max_configs = (1u << 24));
OpSum op_conjugate(const Sites& st, const OpSum& a, const OpSum& u);  // u a u^dagger

// Tr prod_i Z_rho over an ordered chain of same-group sites
OpSum mpo_symmetry(const Sites& st, const Irrep& rho, const std::vector<int>& chain);

// --- diagonal entanglers ----------------------------------------------------

struct Entangler {
    std::vector<PhaseCell> cells;
};

// cells from a cocycle on oriented simplices of vertex sites:
//   degree 2: cell sites (g2, g1), phase w(g2, g2^-1 g1)^orient
//   degree 3: cell sites (g3, g2, g1), phase w(g3, g3^-1 g2, g2^-1 g1)^orient
Entangler entangler_from_cocycle(const Sites& st, const Cochain& w,
                                 const std::vector<std::vector<int>>& simplices,
                                 const std::vector<int>& orientation);
OpSum conjugate_by_entangler(const Sites& st, const OpSum& op, const Entangler& u);
OpSum entangler_opsum(const Sites& st, const Entangler& u, const std::vector<int>& sites);

// --- stabilizer models ------------------------------------------------------

struct StabilizerModel {
    Sites sites;
    struct Term {
        std::string name;
        OpSum op;
    };
    std::vector<Term> terms;
    struct ConjRelation {
        int a, b;  // conjugating terms[a] by terms[b] yields terms[a]^dagger
    };
    std::vector<ConjRelation> conj_relations;
    std::vector<int> patch_sites;       // frustration-freeness witness patch
    std::vector<OpSum> patch_projectors;
};

struct VerificationReport {
    struct Entry {
        std::string left, right;
        std::string relation;
        bool ok;
    };
    std::vector<Entry> entries;
    bool frustration_free = true;
    Rat ground_dim = Rat(-1);
    bool passed() const {
        for (auto& e : entries)
            if (!e.ok) return false;
        return frustration_free;
    }
};

VerificationReport check_model(const StabilizerModel& m);

Rat ground_space_dim(const Sites& st, const std::vector<int>& patch_sites,
                     const std::vector<OpSum>& projectors, size_t max_dim = (1u << 21));

}  // namespace sew
