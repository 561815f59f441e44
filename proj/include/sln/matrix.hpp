#pragma once

// Dense n x n matrices over a Ring, plus the distinguished matrices used by
// the SL_n machinery: elementary matrices E_ij(x), transpositions (rs), sign
// matrices D_r and the T_ij conjugators.  Row/column arguments of the
// distinguished constructors are 1-based (matching the usual notation);
// raw entry access is 0-based.

#include <string>
#include <vector>

#include "sln/ring.hpp"

namespace sln {

struct Mat {
    const Ring* ring = nullptr;
    int n = 0;
    std::vector<RElem> e; // row-major

    Mat() = default;
    Mat(const Ring& r, int n_) : ring(&r), n(n_), e(size_t(n_) * n_, r.zero()) {}

    RElem& at(int r, int c) { return e[size_t(r) * n + c]; }
    RElem at(int r, int c) const { return e[size_t(r) * n + c]; }

    static Mat identity(const Ring& r, int n);
    bool is_identity() const;
    bool operator==(const Mat&) const = default;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(RElem c, const Mat& a);
RElem mat_trace(const Mat& a);

// Determinant by elimination on unit pivots; when a column offers no unit
// pivot the remaining minor is expanded by cofactors (always possible over
// the small rings used here).
RElem mat_det(const Mat& a);
// Independent route: full cofactor expansion.
RElem mat_det_cofactor(const Mat& a);
// Inverse via augmented elimination; throws non_unit_error when det is not
// a unit.
Mat mat_inv(const Mat& a);

// Entrywise reduction to the residue field.
Mat mat_residue(const Mat& a);
// Entrywise digit lift from a matrix over the residue field.
Mat mat_lift_digits(const Ring& target, const Mat& a);
// Entrywise image under a ring homomorphism.
Mat mat_map(const RingHom& h, const Mat& a);

// (i,j) entry move record for elementary-word factorizations; 1-based.
struct ElemMove {
    int i = 1, j = 2;
    RElem x = 0;
};

Mat elementary(const Ring& r, int n, int i, int j, RElem x); // E_ij(x), 1-based
Mat apply_moves(const Ring& r, int n, const std::vector<ElemMove>& moves); // left-to-right product

struct SignedPerm {
    enum class Kind { Transposition, Sign, Tij };
    Kind kind = Kind::Transposition;
    int a = 1, b = 2; // (a b) for Transposition/Tij; index a for Sign
    Mat realize(const Ring& r, int n) const;
};

Mat transposition(const Ring& r, int n, int a, int b); // (ab), det -1
Mat sign_flip(const Ring& r, int n, int a);            // D_a, det -1
// The case-table conjugator with T_ij E_1n(x) T_ij^{-1} = E_ij(x).
Mat build_tij(const Ring& r, int n, int i, int j);

std::string mat_to_string(const Mat& a);
Mat mat_parse(const Ring& r, int n, std::string_view s);

} // namespace sln
