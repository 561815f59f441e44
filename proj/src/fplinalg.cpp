#include "sln/fplinalg.hpp"

#include <algorithm>
#include <cstring>

namespace sln::fp {

Mat Mat::identity(int p, int n) {
    Mat m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows || x.p != y.p) throw std::invalid_argument("fp::mul: shape/p mismatch");
    Mat r(x.p, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            int c = x.at(i, k);
            if (!c) continue;
            const uint8_t* yr = &y.a[size_t(k) * y.cols];
            uint8_t* rr = &r.a[size_t(i) * r.cols];
            for (int j = 0; j < y.cols; ++j) rr[j] = uint8_t((rr[j] + c * yr[j]) % x.p);
        }
    }
    return r;
}

Vec mul_vec(const Mat& x, std::span<const uint8_t> v) {
    if (int(v.size()) != x.cols) throw std::invalid_argument("fp::mul_vec: size mismatch");
    Vec r(x.rows, 0);
    for (int i = 0; i < x.rows; ++i) {
        int acc = 0;
        const uint8_t* row = &x.a[size_t(i) * x.cols];
        for (int j = 0; j < x.cols; ++j) acc += row[j] * v[j];
        r[i] = uint8_t(acc % x.p);
    }
    return r;
}

Mat add(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols || x.p != y.p) throw std::invalid_argument("fp::add: shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = uint8_t((r.a[i] + y.a[i]) % x.p);
    return r;
}

Mat sub(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols || x.p != y.p) throw std::invalid_argument("fp::sub: shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = uint8_t((r.a[i] + x.p - y.a[i]) % x.p);
    return r;
}

void vec_add_into(int p, Vec& dst, std::span<const uint8_t> src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] = uint8_t((dst[i] + src[i]) % p);
}

void vec_sub_into(int p, Vec& dst, std::span<const uint8_t> src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] = uint8_t((dst[i] + p - src[i]) % p);
}

bool vec_is_zero(std::span<const uint8_t> v) {
    return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

uint8_t scalar_inv(int p, uint8_t a) {
    a = uint8_t(a % p);
    if (a == 0) throw std::domain_error("fp::scalar_inv: zero");
    for (int b = 1; b < p; ++b)
        if ((a * b) % p == 1) return uint8_t(b);
    throw std::domain_error("fp::scalar_inv: p not prime?");
}

RowEchelon::RowEchelon(int p, int cols, bool augmented) : p_(p), cols_(cols), augmented_(augmented) {
    if (p < 2) throw std::invalid_argument("RowEchelon: bad p");
    words_ = size_t(width() + 63) / 64;
}

uint8_t RowEchelon::entry(size_t row, int col) const {
    if (p_ == 2) return uint8_t((rows2_[row][size_t(col) / 64] >> (col % 64)) & 1u);
    return rows_[row][col];
}

bool RowEchelon::add_row(std::span<const uint8_t> lhs, uint8_t rhs) {
    if (int(lhs.size()) != cols_) throw std::invalid_argument("RowEchelon::add_row: width mismatch");
    if (p_ == 2) {
        std::vector<uint64_t> w(words_, 0);
        for (int j = 0; j < cols_; ++j)
            if (lhs[j] & 1) w[size_t(j) / 64] |= uint64_t(1) << (j % 64);
        if (augmented_ && (rhs & 1)) w[size_t(cols_) / 64] |= uint64_t(1) << (cols_ % 64);
        // reduce against existing pivots
        for (size_t r = 0; r < pivot_col_.size(); ++r) {
            int pc = pivot_col_[r];
            if ((w[size_t(pc) / 64] >> (pc % 64)) & 1u)
                for (size_t k = 0; k < words_; ++k) w[k] ^= rows2_[r][k];
        }
        int lead = -1;
        for (int j = 0; j < width(); ++j)
            if ((w[size_t(j) / 64] >> (j % 64)) & 1u) { lead = j; break; }
        if (lead < 0) return false;
        if (augmented_ && lead == cols_) { consistent_ = false; return false; }
        // back-substitute into earlier rows, keep reduced form
        size_t pos = std::lower_bound(pivot_col_.begin(), pivot_col_.end(), lead) - pivot_col_.begin();
        for (size_t r = 0; r < pivot_col_.size(); ++r)
            if ((rows2_[r][size_t(lead) / 64] >> (lead % 64)) & 1u)
                for (size_t k = 0; k < words_; ++k) rows2_[r][k] ^= w[k];
        pivot_col_.insert(pivot_col_.begin() + pos, lead);
        rows2_.insert(rows2_.begin() + pos, std::move(w));
        return true;
    }

    Vec w(width(), 0);
    for (int j = 0; j < cols_; ++j) w[j] = uint8_t(lhs[j] % p_);
    if (augmented_) w[cols_] = uint8_t(rhs % p_);
    for (size_t r = 0; r < pivot_col_.size(); ++r) {
        int pc = pivot_col_[r];
        int c = w[pc];
        if (!c) continue;
        const Vec& pr = rows_[r];
        for (int j = pc; j < width(); ++j) w[j] = uint8_t((w[j] + (p_ - c) * pr[j]) % p_);
    }
    int lead = -1;
    for (int j = 0; j < width(); ++j)
        if (w[j]) { lead = j; break; }
    if (lead < 0) return false;
    if (augmented_ && lead == cols_) { consistent_ = false; return false; }
    uint8_t inv = scalar_inv(p_, w[lead]);
    for (int j = lead; j < width(); ++j) w[j] = uint8_t(w[j] * inv % p_);
    size_t pos = std::lower_bound(pivot_col_.begin(), pivot_col_.end(), lead) - pivot_col_.begin();
    for (size_t r = 0; r < pivot_col_.size(); ++r) {
        int c = rows_[r][lead];
        if (!c) continue;
        for (int j = lead; j < width(); ++j) rows_[r][j] = uint8_t((rows_[r][j] + (p_ - c) * w[j]) % p_);
    }
    pivot_col_.insert(pivot_col_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

Vec RowEchelon::reduce(std::span<const uint8_t> v) const {
    Vec w(v.begin(), v.end());
    for (size_t r = 0; r < pivot_col_.size(); ++r) {
        int pc = pivot_col_[r];
        if (pc >= cols_) continue;
        int c = w[pc];
        if (!c) continue;
        for (int j = 0; j < cols_; ++j) w[j] = uint8_t((w[j] + (p_ - c) * entry(r, j)) % p_);
    }
    return w;
}

bool RowEchelon::in_row_space(std::span<const uint8_t> v) const { return vec_is_zero(reduce(v)); }

Vec RowEchelon::particular_solution() const {
    if (!augmented_) throw std::logic_error("particular_solution: not augmented");
    if (!consistent_) throw std::logic_error("particular_solution: inconsistent system");
    Vec x(cols_, 0);
    // rows are fully reduced, so each pivot variable reads off the rhs
    for (size_t r = 0; r < pivot_col_.size(); ++r) x[pivot_col_[r]] = entry(r, cols_);
    return x;
}

std::vector<Vec> RowEchelon::basis_rows() const {
    std::vector<Vec> out;
    for (size_t r = 0; r < pivot_col_.size(); ++r) {
        Vec v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = entry(r, j);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> RowEchelon::kernel_basis() const {
    std::vector<bool> is_pivot(cols_, false);
    for (int pc : pivot_col_)
        if (pc < cols_) is_pivot[pc] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_, 0);
        v[f] = 1;
        for (size_t r = 0; r < pivot_col_.size(); ++r) {
            int pc = pivot_col_[r];
            if (pc >= cols_) continue;
            uint8_t c = entry(r, f);
            if (c) v[pc] = uint8_t((p_ - c) % p_);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_of(const Mat& m) {
    RowEchelon re(m.p, m.cols);
    for (int i = 0; i < m.rows; ++i) re.add_row(std::span(&m.a[size_t(i) * m.cols], size_t(m.cols)));
    return re.rank();
}

std::vector<Vec> kernel_of(const Mat& m) {
    RowEchelon re(m.p, m.cols);
    for (int i = 0; i < m.rows; ++i) re.add_row(std::span(&m.a[size_t(i) * m.cols], size_t(m.cols)));
    return re.kernel_basis();
}

} // namespace sln::fp
