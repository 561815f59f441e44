#pragma once

// Dense linear algebra over the prime field F_p for small p (2 or 3 in
// practice).  Vectors and matrices store one entry per byte; the row-echelon
// solver switches to a bit-packed representation when p == 2, which is what
// keeps the larger coboundary systems (a few thousand unknowns) cheap.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sln::fp {

using Vec = std::vector<uint8_t>; // entries reduced mod p

struct Mat {
    int p = 0;
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a; // row-major

    Mat() = default;
    Mat(int p_, int rows_, int cols_) : p(p_), rows(rows_), cols(cols_), a(size_t(rows_) * cols_, 0) {}

    uint8_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static Mat identity(int p, int n);
    bool operator==(const Mat&) const = default;
};

Mat mul(const Mat& x, const Mat& y);
Vec mul_vec(const Mat& x, std::span<const uint8_t> v);
Mat add(const Mat& x, const Mat& y);
Mat sub(const Mat& x, const Mat& y);

void vec_add_into(int p, Vec& dst, std::span<const uint8_t> src);
void vec_sub_into(int p, Vec& dst, std::span<const uint8_t> src);
bool vec_is_zero(std::span<const uint8_t> v);

uint8_t scalar_inv(int p, uint8_t a);

// Incremental Gaussian elimination.  Rows are inserted one at a time and kept
// in reduced echelon form; the last column may be flagged as an augmented
// right-hand side, in which case consistency of the system is tracked.
class RowEchelon {
  public:
    RowEchelon(int p, int cols, bool augmented = false);

    // Inserts lhs (size cols without the augmented slot) with optional rhs
    // entry.  Returns true when the row increased the rank.
    bool add_row(std::span<const uint8_t> lhs, uint8_t rhs = 0);

    int rank() const { return int(pivot_col_.size()); }
    bool consistent() const { return consistent_; }
    int cols() const { return cols_; }

    // Reduces v against the current rows (homogeneous part only).
    Vec reduce(std::span<const uint8_t> v) const;
    bool in_row_space(std::span<const uint8_t> v) const;

    // Particular solution with free variables set to zero.  Requires an
    // augmented, consistent system.
    Vec particular_solution() const;
    // Basis of the kernel of the homogeneous part.
    std::vector<Vec> kernel_basis() const;
    // Current reduced rows (homogeneous part), pivot order.
    std::vector<Vec> basis_rows() const;

  private:
    int p_;
    int cols_;       // unknown count
    bool augmented_;
    bool consistent_ = true;
    std::vector<int> pivot_col_;          // sorted ascending
    std::vector<Vec> rows_;               // byte rows, width cols_+aug
    std::vector<std::vector<uint64_t>> rows2_; // packed rows when p == 2
    size_t words_ = 0;

    int width() const { return cols_ + (augmented_ ? 1 : 0); }
    uint8_t entry(size_t row, int col) const;
};

// Rank of a stack of matrices (rows concatenated).
int rank_of(const Mat& m);

// Kernel basis of m (viewing m as a map by left multiplication on column
// vectors): all v with m·v = 0.
std::vector<Vec> kernel_of(const Mat& m);

} // namespace sln::fp
