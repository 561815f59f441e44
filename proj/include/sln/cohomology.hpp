#pragma once

// Group extensions of SL_n(k) realized arithmetically (the big group is never
// closed, only its matrices are multiplied) and the cocycle-level splitting
// decision:
//
//   SlFull          0 -> M0 -> SL_n(W/p^2)      -> SL_n(k) -> 1
//   ScalarQuotient  0 -> V  -> SL_n(W/p^2)/Z    -> SL_n(k) -> 1   (p | n)
//   GlSquareZero    0 -> M (x) m_B -> pre(SL_n(k)) in GL_n(B) -> SL_n(k) -> 1
//                   for a square-zero ring B with residue field k
//
// The set-theoretic lift sigma0 raises entries by Teichmuller (or plain
// digit) lift and, for the SL variants, repairs the determinant by scaling
// the first row.  splitting_decide solves the coboundary system
// c(g,h) = g phi(h) - phi(gh) + phi(g) over a subgroup of the quotient on
// the pairs (g, generator); a solution is turned into a section and checked
// homomorphic on every pair, an inconsistency is a non-splitting witness.
// For a Sylow-p subgroup the verdict transfers to the full group (abelian
// p-kernel: split over Sylow-p iff split overall).

#include <optional>

#include "sln/gmodule.hpp"

namespace sln {

enum class LiftMode { Teichmuller, Digit };
enum class ExtVariant { SlFull, ScalarQuotient, GlSquareZero };

struct ExtensionDesc {
    ExtVariant variant = ExtVariant::SlFull;
    const Ring* big = nullptr;      // W/p^2 ring, or the square-zero target B
    const Ring* k = nullptr;
    int n = 0;
    const GroupTable* quotient = nullptr;
    LiftMode lift_mode = LiftMode::Teichmuller;

    ModuleKind kernel_kind() const;
    // Entrywise lift of a matrix over k (det-repaired for SL variants).
    Mat sigma0(const Mat& gbar) const;
    // Scalar-coset representative: among (1 + p b) X the one whose first
    // unit entry (row-major scan) has the smallest canonical index.
    Mat canonicalize(const Mat& X) const;
};

// W/p^2 extension over the given quotient table of SL_n(k).
ExtensionDesc extension_make(const Ring& k, int n, ExtVariant variant, const GroupTable& quotient,
                             LiftMode mode = LiftMode::Teichmuller);
// Pullback of GL_n(B) -> GL_n(k) over the quotient, B square-zero.
ExtensionDesc extension_make_gl(const Ring& target, const GroupTable& quotient);

struct SplitDecision {
    bool split = false;
    std::vector<Mat> section;            // per subgroup element, when split
    uint64_t pairs_verified = 0;         // exhaustive homomorphy check count
    int rank = 0;                        // echelon rank of the coboundary system
    bool inconsistent = false;           // rhs escaped the row space
    bool subgroup_is_full = false;
    bool gaschutz_applicable = false;    // subgroup is a full Sylow-p subgroup
    std::optional<bool> full_group_split;
};

// Decides splitting of the extension restricted to `subgroup` (a subgroup of
// the quotient, given as its own closed table).
SplitDecision splitting_decide(const ExtensionDesc& ext, const GroupTable& subgroup);

// 2-cocycle of the extension over the subgroup, tabulated for tests:
// c(g,h) = kernel coords of sigma0(g) sigma0(h) sigma0(gh)^-1.
fp::Vec cocycle_value(const ExtensionDesc& ext, const GModule& kernel_mod, const Mat& g, const Mat& h);

// Kernel module of the extension, built over the given subgroup table.
GModule kernel_module(const ExtensionDesc& ext, const GroupTable& subgroup);

} // namespace sln
