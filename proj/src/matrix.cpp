#include "sln/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sln {

Mat Mat::identity(const Ring& r, int n) {
    Mat m(r, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = r.one();
    return m;
}

bool Mat::is_identity() const {
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (at(r, c) != (r == c ? ring->one() : ring->zero())) return false;
    return true;
}

static void check_compat(const Mat& a, const Mat& b, const char* what) {
    if (a.ring != b.ring || a.n != b.n) throw std::invalid_argument(std::string(what) + ": ring/dimension mismatch");
}

Mat mat_mul(const Mat& a, const Mat& b) {
    check_compat(a, b, "mat_mul");
    const Ring& R = *a.ring;
    int n = a.n;
    Mat r(R, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            RElem aik = a.at(i, k);
            if (aik == R.zero()) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) = R.add(r.at(i, j), R.mul(aik, b.at(k, j)));
        }
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    check_compat(a, b, "mat_add");
    Mat r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.ring->add(a.e[i], b.e[i]);
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    check_compat(a, b, "mat_sub");
    Mat r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.ring->sub(a.e[i], b.e[i]);
    return r;
}

Mat mat_scale(RElem c, const Mat& a) {
    Mat r = a;
    for (auto& x : r.e) x = a.ring->mul(c, x);
    return r;
}

RElem mat_trace(const Mat& a) {
    RElem t = a.ring->zero();
    for (int i = 0; i < a.n; ++i) t = a.ring->add(t, a.at(i, i));
    return t;
}

RElem mat_det_cofactor(const Mat& a) {
    const Ring& R = *a.ring;
    int n = a.n;
    if (n == 1) return a.at(0, 0);
    RElem det = R.zero();
    for (int c = 0; c < n; ++c) {
        if (a.at(0, c) == R.zero()) continue;
        Mat minor(R, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = a.at(i, j);
            }
        }
        RElem term = R.mul(a.at(0, c), mat_det_cofactor(minor));
        det = (c % 2 == 0) ? R.add(det, term) : R.sub(det, term);
    }
    return det;
}

RElem mat_det(const Mat& a) {
    const Ring& R = *a.ring;
    int n = a.n;
    Mat w = a;
    RElem det = R.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (R.is_unit(w.at(r, col))) { piv = r; break; }
        if (piv < 0) {
            // no unit pivot: finish the remaining minor by cofactors
            Mat rest(R, n - col);
            for (int i = col; i < n; ++i)
                for (int j = col; j < n; ++j) rest.at(i - col, j - col) = w.at(i, j);
            return R.mul(det, mat_det_cofactor(rest));
        }
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
            det = R.neg(det);
        }
        RElem pv = w.at(col, col);
        det = R.mul(det, pv);
        RElem pvinv = R.inv(pv);
        for (int r = col + 1; r < n; ++r) {
            RElem factor = R.mul(w.at(r, col), pvinv);
            if (factor == R.zero()) continue;
            for (int j = col; j < n; ++j) w.at(r, j) = R.sub(w.at(r, j), R.mul(factor, w.at(col, j)));
        }
    }
    return det;
}

Mat mat_inv(const Mat& a) {
    const Ring& R = *a.ring;
    int n = a.n;
    Mat w = a;
    Mat inv = Mat::identity(R, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (R.is_unit(w.at(r, col))) { piv = r; break; }
        if (piv < 0) throw non_unit_error("mat_inv: matrix is not invertible");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        RElem pvinv = R.inv(w.at(col, col));
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = R.mul(pvinv, w.at(col, j));
            inv.at(col, j) = R.mul(pvinv, inv.at(col, j));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            RElem f = w.at(r, col);
            if (f == R.zero()) continue;
            for (int j = 0; j < n; ++j) {
                w.at(r, j) = R.sub(w.at(r, j), R.mul(f, w.at(col, j)));
                inv.at(r, j) = R.sub(inv.at(r, j), R.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

Mat mat_residue(const Mat& a) {
    const Ring& k = a.ring->residue_field();
    Mat r(k, a.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.ring->residue(a.e[i]);
    return r;
}

Mat mat_lift_digits(const Ring& target, const Mat& a) {
    if (a.ring != &target.residue_field())
        throw std::invalid_argument("mat_lift_digits: matrix is not over the residue field of the target");
    Mat r(target, a.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = target.lift_digits(a.e[i]);
    return r;
}

Mat mat_map(const RingHom& h, const Mat& a) {
    if (a.ring != h.src) throw std::invalid_argument("mat_map: wrong source ring");
    Mat r(*h.dst, a.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = h.apply(a.e[i]);
    return r;
}

Mat elementary(const Ring& r, int n, int i, int j, RElem x) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("elementary: bad indices");
    Mat m = Mat::identity(r, n);
    m.at(i - 1, j - 1) = x;
    return m;
}

Mat apply_moves(const Ring& r, int n, const std::vector<ElemMove>& moves) {
    Mat acc = Mat::identity(r, n);
    for (const auto& mv : moves) acc = mat_mul(acc, elementary(r, n, mv.i, mv.j, mv.x));
    return acc;
}

Mat transposition(const Ring& r, int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw std::invalid_argument("transposition: bad indices");
    Mat m = Mat::identity(r, n);
    std::swap(m.e[size_t(a - 1) * n + (a - 1)], m.e[size_t(a - 1) * n + (b - 1)]);
    std::swap(m.e[size_t(b - 1) * n + (b - 1)], m.e[size_t(b - 1) * n + (a - 1)]);
    return m;
}

Mat sign_flip(const Ring& r, int n, int a) {
    if (a < 1 || a > n) throw std::invalid_argument("sign_flip: bad index");
    Mat m = Mat::identity(r, n);
    m.at(a - 1, a - 1) = r.neg(r.one());
    return m;
}

Mat build_tij(const Ring& r, int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("build_tij: bad indices");
    if (i == 1 && j == n) return Mat::identity(r, n);
    if (i == n && j == 1) return mat_mul(sign_flip(r, n, 2), transposition(r, n, 1, n));
    if (i == 1) return mat_mul(sign_flip(r, n, n), transposition(r, n, j, n));
    if (j == n) return mat_mul(sign_flip(r, n, 1), transposition(r, n, 1, i));
    // Remaining case: the even permutation sending e_1 -> e_i and e_n -> e_j,
    // i.e. the product of the transpositions (1 i) and (n j) composed so that
    // the conjugation identity holds (a 3-cycle when the supports overlap).
    std::vector<int> img(n + 1);
    for (int c = 1; c <= n; ++c) img[c] = c;
    img[1] = i;
    img[n] = j;
    if (i == n)
        img[j] = 1;            // (1 n j)
    else if (j == 1)
        img[i] = n;            // (1 i n)
    else {
        img[i] = 1;            // disjoint (1i)(nj)
        img[j] = n;
    }
    Mat m(r, n);
    for (int c = 1; c <= n; ++c) m.at(img[c] - 1, c - 1) = r.one();
    return m;
}

Mat SignedPerm::realize(const Ring& r, int n) const {
    switch (kind) {
        case Kind::Transposition: return transposition(r, n, a, b);
        case Kind::Sign: return sign_flip(r, n, a);
        case Kind::Tij: return build_tij(r, n, a, b);
    }
    throw std::logic_error("unreachable");
}

std::string mat_to_string(const Mat& a) {
    std::string s = "[";
    for (int i = 0; i < a.n; ++i) {
        s += (i ? ",[" : "[");
        for (int j = 0; j < a.n; ++j) s += (j ? "," : "") + a.ring->to_string(a.at(i, j));
        s += "]";
    }
    return s + "]";
}

Mat mat_parse(const Ring& r, int n, std::string_view s) {
    // row-major bracketed lists; entries are digit literals for r
    Mat m(r, n);
    size_t pos = 0;
    auto skip = [&](char c) {
        if (pos >= s.size() || s[pos] != c) throw std::invalid_argument("mat_parse: malformed literal");
        ++pos;
    };
    skip('[');
    for (int i = 0; i < n; ++i) {
        if (i) skip(',');
        skip('[');
        for (int j = 0; j < n; ++j) {
            if (j) skip(',');
            size_t start = pos;
            int depth = 0;
            while (pos < s.size()) {
                char c = s[pos];
                if (c == '[') ++depth;
                else if (c == ']' && depth > 0) --depth;
                else if ((c == ',' || c == ']') && depth == 0) break;
                ++pos;
            }
            m.at(i, j) = r.parse(s.substr(start, pos - start));
        }
        skip(']');
    }
    skip(']');
    if (pos != s.size()) throw std::invalid_argument("mat_parse: trailing characters");
    return m;
}

} // namespace sln
