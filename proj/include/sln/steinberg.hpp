#pragma once

// Executable form of the elementary-matrix structure of SL_n over a local
// ring: the three Steinberg relation families, unit-pivot factorization into
// elementary moves, the T_ij conjugation law, the centralizer description of
// the upper elementary matrices, and commutator witnesses.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sln/matrix.hpp"

namespace sln {

enum class SweepMode { Exhaustive, Sampled };

struct CheckReport {
    bool passed = true;
    uint64_t cases = 0;
    uint64_t products = 0;
    std::optional<std::string> counterexample;

    void fail(std::string why) {
        if (!counterexample) counterexample = std::move(why);
        passed = false;
    }
};

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        // xorshift*; fixed across platforms so seeded runs are reproducible
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    }
    uint64_t below(uint64_t bound) { return next() % bound; }
};

// Relations (a) E_ij(x)E_ij(y) = E_ij(x+y), (b) [E_ij(x),E_jk(y)] = E_ik(xy)
// for i != k, (c) [E_ij(x),E_kl(y)] = I for j != k, i != l.
// Exhaustive mode runs every index tuple and every (x, y); sampled mode draws
// `samples` random instances per family.
CheckReport steinberg_check(const Ring& r, int n, SweepMode mode, uint64_t budget = 500'000'000,
                            uint64_t samples = 100'000, uint64_t seed = 1);

// T_ij E_1n(x) T_ij^{-1} = E_ij(x) for all i != j and all x (exhaustive).
CheckReport conjugation_check(const Ring& r, int n);

// All X in GL_n(r) commuting with every E_ij(1), i < j, by brute force over
// the full matrix space; checks the result equals { u * E_1n(x) } both ways.
struct CommutantResult {
    std::vector<Mat> commutant;
    bool equals_expected = false;
    uint64_t gl_order = 0;
};
CommutantResult commutant_classify(const Ring& r, int n, uint64_t cap = 10'000'000);

// Factorizes M (det 1, local ring) into elementary moves whose left-to-right
// product is M; word length is at most n^2 + 7n.  Unit pivots are chosen
// first-down-the-column, a missing pivot is repaired by adding the first
// unit-bearing row, and residual diagonal units are cleared by the six-move
// pattern E_ij(u) E_ji(-u^-1) E_ij(u) E_ij(-1) E_ji(1) E_ij(-1).
std::vector<ElemMove> elem_decompose(const Mat& m);

// (E_ik(x), E_kj(1)) with k the least index distinct from i and j; their
// commutator equals E_ij(x).
std::pair<Mat, Mat> commutator_witness(const Ring& r, int n, int i, int j, RElem x);

// Random element of SL_n(r) via a random elementary word.
Mat random_sl(const Ring& r, int n, Rng& rng, int word_len = 24);

} // namespace sln
