#include <doctest.h>

#include "sln/fplinalg.hpp"
#include "sln/steinberg.hpp" // Rng

using namespace sln;

TEST_SUITE("fplinalg") {

TEST_CASE("echelon rank and kernel over F3") {
    fp::RowEchelon re(3, 4);
    CHECK(re.add_row(std::vector<uint8_t>{1, 2, 0, 1}));
    CHECK(re.add_row(std::vector<uint8_t>{0, 1, 1, 0}));
    CHECK_FALSE(re.add_row(std::vector<uint8_t>{1, 0, 1, 1})); // row1 - row2
    CHECK(re.rank() == 2);
    auto kern = re.kernel_basis();
    CHECK(kern.size() == 2);
    for (const auto& v : kern) {
        // both original rows must annihilate every kernel vector
        int a = (1 * v[0] + 2 * v[1] + 0 * v[2] + 1 * v[3]) % 3;
        int b = (0 * v[0] + 1 * v[1] + 1 * v[2] + 0 * v[3]) % 3;
        CHECK(a == 0);
        CHECK(b == 0);
    }
}

TEST_CASE("augmented solve and inconsistency") {
    fp::RowEchelon re(3, 2, true);
    re.add_row(std::vector<uint8_t>{1, 1}, 2);
    re.add_row(std::vector<uint8_t>{0, 1}, 1);
    REQUIRE(re.consistent());
    auto x = re.particular_solution();
    CHECK(((x[0] + x[1]) % 3) == 2);
    CHECK((x[1] % 3) == 1);
    re.add_row(std::vector<uint8_t>{1, 0}, 2); // contradicts x0 = 1
    CHECK_FALSE(re.consistent());
}

TEST_CASE("packed GF(2) path agrees with the generic byte path") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int cols = 1 + int(rng.below(40));
        int rows = 1 + int(rng.below(60));
        std::vector<std::vector<uint8_t>> data(rows, std::vector<uint8_t>(cols));
        for (auto& r : data)
            for (auto& c : r) c = uint8_t(rng.below(2));
        fp::RowEchelon packed(2, cols);
        fp::RowEchelon generic(3, cols); // same rows are valid mod 3 only if we
        // compare ranks over F2 against a rebuilt mod-2 elimination: use a
        // dense matrix rank as the oracle instead
        fp::Mat m(2, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = data[i][j];
        for (auto& r : data) packed.add_row(r);
        CHECK(packed.rank() == fp::rank_of(m));
        (void)generic;
        // kernel vectors annihilate all rows
        for (const auto& v : packed.kernel_basis())
            for (int i = 0; i < rows; ++i) {
                int acc = 0;
                for (int j = 0; j < cols; ++j) acc ^= (m.at(i, j) & v[j]);
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("mat mul and mat-vec") {
    fp::Mat a(3, 2, 3), b(3, 3, 2);
    uint8_t av[] = {1, 2, 0, 0, 1, 2};
    uint8_t bv[] = {1, 0, 2, 1, 0, 2};
    std::copy(av, av + 6, a.a.begin());
    std::copy(bv, bv + 6, b.a.begin());
    fp::Mat c = fp::mul(a, b);
    CHECK(c.at(0, 0) == (1 * 1 + 2 * 2 + 0 * 0) % 3);
    CHECK(c.at(1, 1) == (0 * 0 + 1 * 1 + 2 * 2) % 3);
    auto v = fp::mul_vec(a, std::vector<uint8_t>{1, 1, 1});
    CHECK(v[0] == (1 + 2 + 0) % 3);
    CHECK(v[1] == (0 + 1 + 2) % 3);
}

TEST_CASE("kernel dimension = cols - rank") {
    Rng rng(5);
    for (int p : {2, 3}) {
        for (int trial = 0; trial < 20; ++trial) {
            int rows = 1 + int(rng.below(12)), cols = 1 + int(rng.below(12));
            fp::Mat m(p, rows, cols);
            for (auto& x : m.a) x = uint8_t(rng.below(uint64_t(p)));
            CHECK(int(fp::kernel_of(m).size()) == cols - fp::rank_of(m));
        }
    }
}

} // TEST_SUITE
