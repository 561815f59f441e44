#pragma once

// Square-zero lift counting for the identity representation of SL_n(k), the
// matching count of local W-algebra homomorphisms, reconstruction of the ring
// section from a split subgroup of SL_n(k[t]/t^2), kernel-conjugators that
// normalize twisted copies of SL_n(k), and the kernel-defect trichotomy for
// subgroups with full residual image.

#include "sln/cohomology.hpp"
#include "sln/steinberg.hpp"

namespace sln {

struct LiftSetting {
    const GroupTable* gamma = nullptr; // SL_n(k); the residual rep is the identity embedding
    const GroupTable* sylow = nullptr; // Sylow-p subgroup of gamma
};

struct LiftCount {
    uint64_t classes = 0; // strict-equivalence classes of lifts, 0 when obstructed
    bool obstructed = false;
    int h1_fp = 0;        // dim_Fp H^1(Gamma, M)
};

// Lifts of the identity embedding to GL_n(target) modulo conjugation by
// matrices reducing to I.  The obstruction is decided by splitting_decide on
// the pullback extension (over the Sylow subgroup, transferred by the
// abelian-kernel splitting criterion); when unobstructed the classes form a
// torsor under H^1(Gamma, M (x) m_B).
LiftCount lift_classes(const LiftSetting& s, const Ring& target);

struct AuditRow {
    std::string target;
    uint64_t lift_count = 0;
    uint64_t hom_count = 0;
    bool match = false;
};

// For each target B: lift-class count (cohomology route) against the number
// of local W-algebra homomorphisms k -> B (ring-enumeration route).
std::vector<AuditRow> universal_property_audit(const LiftSetting& s,
                                               const std::vector<const Ring*>& targets);

struct SectionMap {
    const Ring* R = nullptr;
    const Ring* A = nullptr;
    std::vector<RElem> s_table;      // indexed by elements of A
    std::vector<RElem> lambda_table; // the unit from the fibre shape, always 1 after certification
    bool additive = false;
    bool multiplicative = false;
    bool section_of_pi = false;
};

// G is a closed subgroup of SL_n(R) mapping isomorphically onto SL_n(A)
// under entrywise reduction (A = residue field of R).  Finds, for each x in
// A, the unique preimage of E_1n(x) in G, certifies it has the shape
// u*E_1n(s) with u = 1 via the commutator identity
// E_1n(x) = E_12(x) E_2n(1) E_12(x)^-1 E_2n(1)^-1, and checks the resulting
// s: A -> R is a local ring homomorphism splitting the reduction.
SectionMap section_reconstruct(const Ring& R, const Ring& A, const GroupTable& G);

// G_gens over R = k[t]/t^2 reduce (in order) to slk's generators, and the
// group they generate meets the kernel trivially.  Writes each generator as
// (I + t c(g)) emb(g), certifies c extends to a 1-cocycle over slk's Cayley
// graph, solves c(g) = g Y g^-1 - Y in M, and returns X = I + tY with
// X G X^-1 the constant copy (verified on generators).
Mat find_conjugator(const std::vector<Mat>& G_gens, const GroupTable& slk, const GModule& M_full);

enum class Trichotomy { Full, Iso, ScalarExtension };

struct TrichotomyResult {
    Trichotomy verdict = Trichotomy::Iso;
    int defect_dim = 0; // F_p-dim of the kernel-defect span inside M0
};

// Kernel-defect classification of the subgroup generated by G_gens over
// k[t]/t^2 (k prime, deduplicated non-identity reductions must equal slk's
// generator set): the span of the closure defects at non-tree Cayley edges
// is 0 (isomorphic projection), the scalar line, or all of M0.
TrichotomyResult trichotomy_classify(const std::vector<Mat>& G_gens, const GroupTable& slk,
                                     const GModule& M0);

// I + t * (random matrix over k): a random kernel twist of the identity.
Mat random_kernel_twist(const Ring& R, int n, Rng& rng);

} // namespace sln
