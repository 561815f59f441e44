#include <doctest.h>

#include "sln/matrix.hpp"
#include "sln/steinberg.hpp"

using namespace sln;

namespace {

Mat random_mat(const Ring& R, int n, Rng& rng) {
    Mat m(R, n);
    for (auto& e : m.e) e = RElem(rng.below(R.size()));
    return m;
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("determinant basics") {
    const Ring& z9 = preset("z9");
    CHECK(mat_det(Mat::identity(z9, 3)) == z9.one());
    for (size_t x = 0; x < z9.size(); ++x)
        CHECK(mat_det(elementary(z9, 3, 1, 2, RElem(x))) == z9.one());
    // D_r and transpositions have determinant -1
    CHECK(mat_det(sign_flip(z9, 3, 1)) == z9.neg(z9.one()));
    CHECK(mat_det(transposition(z9, 3, 1, 3)) == z9.neg(z9.one()));
}

TEST_CASE("determinant is multiplicative on random pairs") {
    Rng rng(23);
    for (const auto& key : preset_keys()) {
        const Ring& R = preset(key);
        for (int i = 0; i < 10'000; ++i) {
            Mat a = random_mat(R, 3, rng), b = random_mat(R, 3, rng);
            CHECK(mat_det(mat_mul(a, b)) == R.mul(mat_det(a), mat_det(b)));
        }
    }
}

TEST_CASE("elimination and cofactor determinants agree") {
    Rng rng(31);
    for (const char* key : {"z9", "z4", "gr4_2", "f3_dual", "bc_ring"}) {
        const Ring& R = preset(key);
        for (int n = 2; n <= 4; ++n)
            for (int i = 0; i < 1000; ++i) {
                Mat a = random_mat(R, n, rng);
                CHECK(mat_det(a) == mat_det_cofactor(a));
            }
    }
}

TEST_CASE("inverse") {
    Rng rng(37);
    const Ring& gr = preset("gr4_2");
    int inverted = 0;
    while (inverted < 200) {
        Mat a = random_mat(gr, 3, rng);
        if (!gr.is_unit(mat_det(a))) {
            CHECK_THROWS_AS(mat_inv(a), non_unit_error);
            continue;
        }
        Mat inv = mat_inv(a);
        CHECK(mat_mul(a, inv).is_identity());
        CHECK(mat_mul(inv, a).is_identity());
        ++inverted;
    }
}

TEST_CASE("T_ij case table") {
    const Ring& z9 = preset("z9");
    // (1, n) is the identity
    CHECK(build_tij(z9, 3, 1, 3).is_identity());
    // (n, 1) = D_2 (1n)
    CHECK(build_tij(z9, 3, 3, 1) == mat_mul(sign_flip(z9, 3, 2), transposition(z9, 3, 1, 3)));
    // spec'd overlap-free case: (2,3) for n = 4 swaps {1,2} and {4,3}
    Mat t = build_tij(z9, 4, 2, 3);
    CHECK(t == mat_mul(transposition(z9, 4, 1, 2), transposition(z9, 4, 4, 3)));
}

TEST_CASE("every T_ij has determinant one") {
    for (const char* key : {"z9", "gr4_2", "f2"}) {
        const Ring& R = preset(key);
        for (int n = 3; n <= 5; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    CHECK(mat_det(build_tij(R, n, i, j)) == R.one());
                }
    }
}

TEST_CASE("signed-perm realization matches the builders") {
    const Ring& f3 = preset("f3");
    SignedPerm tr{SignedPerm::Kind::Transposition, 1, 2};
    CHECK(tr.realize(f3, 3) == transposition(f3, 3, 1, 2));
    SignedPerm sg{SignedPerm::Kind::Sign, 2, 0};
    CHECK(sg.realize(f3, 3) == sign_flip(f3, 3, 2));
    SignedPerm tij{SignedPerm::Kind::Tij, 2, 1};
    CHECK(tij.realize(f3, 3) == build_tij(f3, 3, 2, 1));
}

TEST_CASE("matrix literals round-trip") {
    Rng rng(41);
    for (const char* key : {"z9", "gr4_2", "bc_ring"}) {
        const Ring& R = preset(key);
        for (int i = 0; i < 50; ++i) {
            Mat a = random_mat(R, 3, rng);
            CHECK(mat_parse(R, 3, mat_to_string(a)) == a);
        }
    }
    CHECK_THROWS(mat_parse(preset("z9"), 2, "[[1,2],[3]]"));
}

TEST_CASE("entrywise maps") {
    const Ring& z9 = preset("z9");
    const Ring& f3 = preset("f3");
    Mat a = elementary(z9, 3, 1, 2, z9.from_int(5));
    Mat r = mat_residue(a);
    CHECK(r.ring == &f3);
    CHECK(r.at(0, 1) == f3.from_int(2));
    Mat lifted = mat_lift_digits(z9, r);
    CHECK(lifted.at(0, 1) == z9.from_int(2));
    auto hs = hom_enumerate(preset("f3_dual"), preset("f3_dual"));
    REQUIRE(!hs.homs.empty());
    Mat b = elementary(preset("f3_dual"), 3, 2, 3, preset("f3_dual").sze_t());
    Mat img = mat_map(hs.homs[0], b);
    CHECK(img.n == 3);
}

} // TEST_SUITE
