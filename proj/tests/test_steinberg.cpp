#include <doctest.h>

#include "sln/group_table.hpp"
#include "sln/steinberg.hpp"

using namespace sln;

TEST_SUITE("steinberg") {

TEST_CASE("relation families hold exhaustively on the catalog") {
    for (const char* key : {"z9", "z4", "gr4_2", "f3_dual"}) {
        auto rep = steinberg_check(preset(key), 3, SweepMode::Exhaustive);
        CHECK(rep.passed);
        CHECK(rep.cases > 0);
        CHECK_FALSE(rep.counterexample.has_value());
    }
    // family (c) with disjoint index pairs needs n = 4
    auto rep4 = steinberg_check(preset("z4"), 4, SweepMode::Exhaustive);
    CHECK(rep4.passed);
}

TEST_CASE("relation families across the whole catalog, n up to 5") {
    for (const auto& key : preset_keys())
        for (int n : {3, 4, 5}) {
            CheckReport rep;
            try {
                rep = steinberg_check(preset(key), n, SweepMode::Exhaustive);
            } catch (const budget_exceeded&) {
                rep = steinberg_check(preset(key), n, SweepMode::Sampled, 500'000'000, 100'000, 1);
            }
            CHECK(rep.passed);
        }
}

TEST_CASE("sampled mode and budget errors") {
    auto rep = steinberg_check(preset("gr4_2"), 5, SweepMode::Sampled, 500'000'000, 20'000, 9);
    CHECK(rep.passed);
    CHECK(rep.cases == 20'000);
    CHECK_THROWS_AS(steinberg_check(preset("gr4_2"), 5, SweepMode::Exhaustive, 1000),
                    budget_exceeded);
    CHECK_THROWS_AS(steinberg_check(preset("z9"), 2, SweepMode::Sampled), std::invalid_argument);
}

TEST_CASE("T_ij conjugation law, exhaustively") {
    for (const char* key : {"z9", "gr4_2"}) {
        for (int n : {3, 4, 5}) {
            auto rep = conjugation_check(preset(key), n);
            CHECK(rep.passed);
            CHECK(rep.cases == uint64_t(n) * (n - 1) * preset(key).size());
        }
    }
}

TEST_CASE("decompose a single elementary matrix") {
    const Ring& z9 = preset("z9");
    Mat e = elementary(z9, 3, 1, 2, z9.from_int(5));
    auto moves = elem_decompose(e);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].i == 1);
    CHECK(moves[0].j == 2);
    CHECK(moves[0].x == z9.from_int(5));
}

TEST_CASE("decompose diag(u, u^-1, 1) into the six-move pattern") {
    const Ring& z9 = preset("z9");
    Mat d = Mat::identity(z9, 3);
    d.at(0, 0) = z9.from_int(2);
    d.at(1, 1) = z9.inv(z9.from_int(2)); // 5
    auto moves = elem_decompose(d);
    CHECK(moves.size() == 6);
    CHECK(apply_moves(z9, 3, moves) == d);
}

TEST_CASE("decomposition round-trips with the contract length bound") {
    // every element of SL3(F2)
    GroupTable t = sl_table(preset("f2"), 3);
    REQUIRE(t.order() == 168);
    for (uint32_t i = 0; i < t.order(); ++i) {
        Mat m = t.element(i);
        auto moves = elem_decompose(m);
        CHECK(moves.size() <= 3 * 3 + 7 * 3);
        CHECK(apply_moves(*m.ring, 3, moves) == m);
    }
    // random elements over the length-2 rings
    for (const char* key : {"z9", "gr4_2"}) {
        const Ring& R = preset(key);
        Rng rng(7);
        for (int s = 0; s < 1000; ++s) {
            Mat m = random_sl(R, 3, rng);
            auto moves = elem_decompose(m);
            CHECK(moves.size() <= 30);
            CHECK(apply_moves(R, 3, moves) == m);
        }
    }
}

TEST_CASE("decompose rejects non-unimodular input") {
    const Ring& z9 = preset("z9");
    Mat d = Mat::identity(z9, 3);
    d.at(0, 0) = z9.from_int(2);
    CHECK_THROWS_AS(elem_decompose(d), std::invalid_argument);
}

TEST_CASE("commutant classification by brute force") {
    auto f2 = commutant_classify(preset("f2"), 3);
    CHECK(f2.commutant.size() == 2);
    CHECK(f2.gl_order == 168);
    CHECK(f2.equals_expected);
    auto f3 = commutant_classify(preset("f3"), 3);
    CHECK(f3.commutant.size() == 6); // |units| * |ring| = 2 * 3
    CHECK(f3.gl_order == 11232);
    CHECK(f3.equals_expected);
    // the identity (u = 1, x = 0) is always present
    bool has_id = false;
    for (const Mat& m : f3.commutant) has_id |= m.is_identity();
    CHECK(has_id);
}

TEST_CASE("commutator witnesses multiply out to E_ij(x)") {
    const Ring& z9 = preset("z9");
    for (size_t x = 0; x < z9.size(); ++x) {
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                if (i == j) continue;
                auto [a, b] = commutator_witness(z9, 3, i, j, RElem(x));
                Mat comm = mat_mul(mat_mul(a, b), mat_mul(mat_inv(a), mat_inv(b)));
                CHECK(comm == elementary(z9, 3, i, j, RElem(x)));
            }
    }
    // x = 0 gives the identity commutator
    auto [a, b] = commutator_witness(z9, 3, 1, 2, z9.zero());
    CHECK(mat_mul(mat_mul(a, b), mat_mul(mat_inv(a), mat_inv(b))).is_identity());
    // k is the least index distinct from i and j
    auto [c, d] = commutator_witness(z9, 3, 1, 2, z9.one());
    CHECK(c == elementary(z9, 3, 1, 3, z9.one()));
    CHECK(d == elementary(z9, 3, 3, 2, z9.one()));
}

} // TEST_SUITE
