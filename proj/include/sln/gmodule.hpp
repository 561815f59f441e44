#pragma once

// F_p-linear modules for a closed matrix group over a field k, acting by
// conjugation on n x n matrices:
//
//   Full          M   = all matrices over k            (k-dim n^2)
//   TraceZero     M0  = trace-zero matrices            (k-dim n^2 - 1)
//   Scalar        S   = k * I                          (k-dim 1, needs p | n
//                       to sit inside M0)
//   TraceZeroModScalar  V = M0 / S                     (k-dim n^2 - 2, p | n)
//   TrivialLine   k with trivial action                (k-dim 1)
//   FullTensorMaxIdeal  M tensor m_B for a square-zero ring B with residue
//                       field k (F_p-dim n^2 * dim m_B); coordinates are the
//                       max-ideal digits of the entries of X - I
//
// Coordinates are F_p vectors; per-element action matrices are materialized
// once along the group's spanning tree.

#include <vector>

#include "sln/fplinalg.hpp"
#include "sln/group_table.hpp"

namespace sln {

enum class ModuleKind { Full, TraceZero, Scalar, TraceZeroModScalar, TrivialLine, FullTensorMaxIdeal };

class GModule {
  public:
    const GroupTable& group() const { return *G_; }
    const Ring& field() const { return *k_; }
    ModuleKind kind() const { return kind_; }
    int dim() const { return dim_; }        // over F_p
    int p() const { return p_; }
    int k_degree() const { return kdeg_; }
    bool has_k_structure() const { return !k_act_.empty(); }
    const Ring* tensor_ring() const { return tensor_ring_; }

    const fp::Mat& gen_action(size_t g) const { return gen_act_[g]; }
    const fp::Mat& k_action(size_t l) const { return k_act_[l]; }
    const fp::Mat& act(uint32_t elem) const { return act_[elem]; }

    // Kind-dependent coordinate maps.  For matrix kinds the input is a
    // matrix over k (trace zero where required); for FullTensorMaxIdeal it
    // is the displacement X - I over the tensor ring, entries inside m_B.
    fp::Vec to_coords(const Mat& m) const;
    Mat from_coords(const fp::Vec& v) const; // section (V: last diagonal slot zero)

    int invariants_dim() const; // dim of the fixed subspace M^G over F_p

    friend GModule module_make(ModuleKind, const GroupTable&, const Ring*);

  private:
    GModule() = default;
    void build_actions();

    const GroupTable* G_ = nullptr;
    const Ring* k_ = nullptr;
    int n_ = 0;
    ModuleKind kind_ = ModuleKind::Full;
    int p_ = 2, kdeg_ = 1, dim_ = 0;
    const Ring* tensor_ring_ = nullptr;
    std::vector<fp::Mat> gen_act_;
    std::vector<fp::Mat> k_act_;
    std::vector<fp::Mat> act_;
};

// Builds the module over the (closed) group G.  G's ring must be the residue
// field k; `tensor_ring` is required exactly for FullTensorMaxIdeal.
GModule module_make(ModuleKind kind, const GroupTable& G, const Ring* tensor_ring = nullptr);

// All proper nonzero G-submodules, found from spans of single-vector orbits
// followed by pairwise sums to saturation.  When `k_closed` (default: the
// module's own k-structure), spans are also closed under the k-scalar
// action.  Each subspace is returned as reduced echelon basis rows.
std::vector<std::vector<fp::Vec>> submodule_lattice(const GModule& mod, bool k_closed = true);

struct HomDim {
    int fp_dim = 0;
    int k_dim = 0; // fp_dim / [k:F_p] when k-linearity was imposed
};
// Dimension of G-equivariant linear maps src -> dst (k-linear when both
// modules carry the k-structure).
HomDim equivariant_hom_dim(const GModule& src, const GModule& dst);

struct H1Result {
    int k_dim = 0;
    int fp_dim = 0;
    int z1_dim = 0;        // crossed homomorphisms, over F_p
    int b1_dim = 0;        // principal ones
    int refine_passes = 0; // verification rounds over the full edge set
    uint64_t constraint_rows = 0;
};

// dim H^1(G, mod) by crossed-homomorphism propagation: unknowns are the
// values on generators, the spanning tree determines every other value, and
// non-tree Cayley edges impose the linear constraints.  Constraints are
// accumulated into echelon form from a seed batch of edges; the resulting
// kernel is then certified by propagating each basis vector over the entire
// Cayley graph, feeding any violated edge back as a new constraint until the
// kernel is exactly Z^1.  H^1 = Z^1 - (dim M - dim M^G).
H1Result h1_dim(const GModule& mod, uint64_t max_unknowns = 100'000);

} // namespace sln
