#include "sln/steinberg.hpp"

#include <sstream>

namespace sln {

namespace {

std::string describe_case(const char* family, const Ring& R, int i, int j, int k, int l, RElem x, RElem y) {
    std::ostringstream os;
    os << family << " i=" << i << " j=" << j;
    if (k) os << " k=" << k;
    if (l) os << " l=" << l;
    os << " x=" << R.to_string(x) << " y=" << R.to_string(y);
    return os.str();
}

} // namespace

CheckReport steinberg_check(const Ring& R, int n, SweepMode mode, uint64_t budget, uint64_t samples,
                            uint64_t seed) {
    if (n < 3) throw std::invalid_argument("steinberg_check: n must be >= 3");
    CheckReport rep;
    uint64_t q = R.size();

    auto check_a = [&](int i, int j, RElem x, RElem y) {
        Mat lhs = mat_mul(elementary(R, n, i, j, x), elementary(R, n, i, j, y));
        Mat rhs = elementary(R, n, i, j, R.add(x, y));
        rep.products += 1;
        rep.cases += 1;
        if (!(lhs == rhs)) rep.fail(describe_case("(a)", R, i, j, 0, 0, x, y));
    };
    auto check_b = [&](int i, int j, int k, RElem x, RElem y) {
        Mat a = elementary(R, n, i, j, x), b = elementary(R, n, j, k, y);
        Mat comm = mat_mul(mat_mul(a, b), mat_mul(elementary(R, n, i, j, R.neg(x)), elementary(R, n, j, k, R.neg(y))));
        rep.products += 3;
        rep.cases += 1;
        if (!(comm == elementary(R, n, i, k, R.mul(x, y)))) rep.fail(describe_case("(b)", R, i, j, k, 0, x, y));
    };
    auto check_c = [&](int i, int j, int k, int l, RElem x, RElem y) {
        Mat a = elementary(R, n, i, j, x), b = elementary(R, n, k, l, y);
        Mat comm = mat_mul(mat_mul(a, b), mat_mul(elementary(R, n, i, j, R.neg(x)), elementary(R, n, k, l, R.neg(y))));
        rep.products += 3;
        rep.cases += 1;
        if (!comm.is_identity()) rep.fail(describe_case("(c)", R, i, j, k, l, x, y));
    };

    if (mode == SweepMode::Exhaustive) {
        // projected work: q^2 pairs across ~n^4 index tuples, ~3 products each
        uint64_t tuples = uint64_t(n) * n * n * n;
        if (q * q * tuples * 3 > budget)
            throw budget_exceeded("steinberg_check: exhaustive sweep over " + R.name() + " n=" +
                                  std::to_string(n) + " exceeds budget");
        for (uint64_t xu = 0; xu < q; ++xu)
            for (uint64_t yu = 0; yu < q; ++yu) {
                RElem x = RElem(xu), y = RElem(yu);
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        if (i == j) continue;
                        check_a(i, j, x, y);
                        for (int k = 1; k <= n; ++k) {
                            if (k == j || k == i) continue;
                            check_b(i, j, k, x, y);
                        }
                        for (int k = 1; k <= n; ++k)
                            for (int l = 1; l <= n; ++l) {
                                if (k == l) continue;
                                if (j == k || i == l) continue;
                                check_c(i, j, k, l, x, y);
                            }
                    }
            }
    } else {
        Rng rng(seed);
        auto rand_pair = [&](int& i, int& j) {
            i = 1 + int(rng.below(n));
            do { j = 1 + int(rng.below(n)); } while (j == i);
        };
        for (uint64_t s = 0; s < samples; ++s) {
            int i, j;
            rand_pair(i, j);
            RElem x = RElem(rng.below(q)), y = RElem(rng.below(q));
            switch (s % 3) {
                case 0: check_a(i, j, x, y); break;
                case 1: {
                    int k;
                    do { k = 1 + int(rng.below(n)); } while (k == i || k == j);
                    check_b(i, j, k, x, y);
                    break;
                }
                default: {
                    int k, l;
                    do { rand_pair(k, l); } while (j == k || i == l);
                    check_c(i, j, k, l, x, y);
                    break;
                }
            }
        }
    }
    return rep;
}

CheckReport conjugation_check(const Ring& R, int n) {
    if (n < 3) throw std::invalid_argument("conjugation_check: n must be >= 3");
    CheckReport rep;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            Mat t = build_tij(R, n, i, j);
            Mat tinv = mat_inv(t);
            for (uint64_t xu = 0; xu < R.size(); ++xu) {
                RElem x = RElem(xu);
                Mat lhs = mat_mul(mat_mul(t, elementary(R, n, 1, n, x)), tinv);
                rep.products += 2;
                rep.cases += 1;
                if (!(lhs == elementary(R, n, i, j, x)))
                    rep.fail(describe_case("T_ij", R, i, j, 0, 0, x, x));
            }
        }
    return rep;
}

CommutantResult commutant_classify(const Ring& R, int n, uint64_t cap) {
    uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) {
        total *= R.size();
        if (total > cap) throw cap_exceeded("commutant_classify: matrix space exceeds cap");
    }
    std::vector<Mat> uppers;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) uppers.push_back(elementary(R, n, i, j, R.one()));

    CommutantResult out;
    for (uint64_t code = 0; code < total; ++code) {
        Mat m(R, n);
        uint64_t v = code;
        for (int i = 0; i < n * n; ++i) {
            m.e[i] = RElem(v % R.size());
            v /= R.size();
        }
        if (!R.is_unit(mat_det(m))) continue;
        ++out.gl_order;
        bool commutes = true;
        for (const Mat& u : uppers)
            if (!(mat_mul(m, u) == mat_mul(u, m))) { commutes = false; break; }
        if (commutes) out.commutant.push_back(m);
    }

    // expected set: { u * E_1n(x) : u unit, x in R }
    std::vector<Mat> expected;
    for (uint64_t uu = 0; uu < R.size(); ++uu) {
        if (!R.is_unit(RElem(uu))) continue;
        for (uint64_t xu = 0; xu < R.size(); ++xu)
            expected.push_back(mat_scale(RElem(uu), elementary(R, n, 1, n, RElem(xu))));
    }
    auto contains = [](const std::vector<Mat>& set, const Mat& m) {
        for (const Mat& s : set)
            if (s == m) return true;
        return false;
    };
    out.equals_expected = out.commutant.size() == expected.size();
    for (const Mat& m : out.commutant)
        if (!contains(expected, m)) out.equals_expected = false;
    for (const Mat& m : expected)
        if (!contains(out.commutant, m)) out.equals_expected = false;
    return out;
}

std::vector<ElemMove> elem_decompose(const Mat& m) {
    const Ring& R = *m.ring;
    int n = m.n;
    if (!(mat_det(m) == R.one())) throw std::invalid_argument("elem_decompose: determinant is not 1");

    Mat w = m;
    std::vector<ElemMove> applied; // row ops E_ij(x) applied on the left, in order
    auto row_op = [&](int i, int j, RElem x) {
        if (x == R.zero()) return;
        // w <- E_ij(x) w  (adds x * row j to row i)
        for (int c = 0; c < n; ++c) w.at(i - 1, c) = R.add(w.at(i - 1, c), R.mul(x, w.at(j - 1, c)));
        applied.push_back({i, j, x});
    };

    for (int col = 1; col <= n; ++col) {
        if (!R.is_unit(w.at(col - 1, col - 1))) {
            int rescue = 0;
            for (int r = col + 1; r <= n; ++r)
                if (R.is_unit(w.at(r - 1, col - 1))) { rescue = r; break; }
            if (!rescue)
                throw std::logic_error("elem_decompose: no unit pivot in column " + std::to_string(col));
            row_op(col, rescue, R.one());
        }
        RElem pivinv = R.inv(w.at(col - 1, col - 1));
        for (int r = 1; r <= n; ++r) {
            if (r == col) continue;
            RElem entry = w.at(r - 1, col - 1);
            if (entry == R.zero()) continue;
            row_op(r, col, R.neg(R.mul(entry, pivinv)));
        }
    }

    // w is now diag(u_1, ..., u_n) with product 1; peel it off with the
    // six-move blocks W(v; i, i+1) realizing diag(v, v^-1).
    // applied left-multiplications E_k ... E_1 M = D give
    // M = E_1^-1 E_2^-1 ... E_k^-1 D
    std::vector<ElemMove> word;
    word.reserve(applied.size() + 6 * size_t(n));
    for (const auto& mv : applied) word.push_back({mv.i, mv.j, R.neg(mv.x)});

    RElem prefix = R.one();
    for (int i = 1; i <= n - 1; ++i) {
        prefix = R.mul(prefix, w.at(i - 1, i - 1));
        if (prefix == R.one()) continue;
        RElem v = prefix, vinv = R.inv(prefix);
        int a = i, b = i + 1;
        word.push_back({a, b, v});
        word.push_back({b, a, R.neg(vinv)});
        word.push_back({a, b, v});
        word.push_back({a, b, R.neg(R.one())});
        word.push_back({b, a, R.one()});
        word.push_back({a, b, R.neg(R.one())});
    }
    return word;
}

std::pair<Mat, Mat> commutator_witness(const Ring& R, int n, int i, int j, RElem x) {
    if (n < 3) throw std::invalid_argument("commutator_witness: n must be >= 3");
    int k = 1;
    while (k == i || k == j) ++k;
    return {elementary(R, n, i, k, x), elementary(R, n, k, j, R.one())};
}

Mat random_sl(const Ring& R, int n, Rng& rng, int word_len) {
    Mat m = Mat::identity(R, n);
    for (int s = 0; s < word_len; ++s) {
        int i = 1 + int(rng.below(n)), j;
        do { j = 1 + int(rng.below(n)); } while (j == i);
        m = mat_mul(m, elementary(R, n, i, j, RElem(rng.below(R.size()))));
    }
    return m;
}

} // namespace sln
