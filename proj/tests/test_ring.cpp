#include <doctest.h>

#include <set>

#include "sln/ring.hpp"
#include "sln/steinberg.hpp" // Rng

using namespace sln;

TEST_SUITE("ring") {

TEST_CASE("catalog sizes") {
    CHECK(preset("z9").size() == 9);
    CHECK(preset("z4").size() == 4);
    CHECK(preset("gr4_2").size() == 16);  // |W(F4)/4| = 2^(2*2)
    CHECK(preset("f4").size() == 4);
    CHECK(preset("f3_dual").size() == 9);
    CHECK(preset("f2_dual").size() == 4);
    CHECK(preset("bc_ring").size() == 8); // {a + bt : a in Z/4, b in F2}
}

TEST_CASE("bc_ring canonical forms are distinct and enumerate fully") {
    const Ring& R = preset("bc_ring");
    std::set<std::string> forms;
    for (size_t a = 0; a < R.size(); ++a) forms.insert(R.to_string(RElem(a)));
    CHECK(forms.size() == 8);
    // t^2 = 0 and 2t = 0
    RElem t = R.sze_t();
    CHECK(R.mul(t, t) == R.zero());
    CHECK(R.mul(R.from_int(2), t) == R.zero());
}

TEST_CASE("ring axioms by full enumeration on small rings") {
    for (const auto& key : preset_keys()) {
        const Ring& R = preset(key);
        REQUIRE(R.size() <= 1000);
        for (size_t a = 0; a < R.size(); ++a)
            for (size_t b = 0; b < R.size(); ++b) {
                RElem x = RElem(a), y = RElem(b);
                CHECK(R.add(x, y) == R.add(y, x));
                CHECK(R.mul(x, y) == R.mul(y, x));
                CHECK(R.add(x, R.neg(x)) == R.zero());
                CHECK(R.mul(x, R.one()) == x);
            }
        for (size_t a = 0; a < R.size(); ++a)
            for (size_t b = 0; b < R.size(); ++b)
                for (size_t c = 0; c < R.size(); ++c) {
                    RElem x = RElem(a), y = RElem(b), z = RElem(c);
                    CHECK(R.add(R.add(x, y), z) == R.add(x, R.add(y, z)));
                    CHECK(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
                    CHECK(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
                }
    }
}

TEST_CASE("ring axioms on random triples for larger, untabulated rings") {
    // both above the tabulation threshold: Z/2^12 and Z[x]/(32, x^2+x+1)
    const Ring& Z = ring_cache(RingSpec::zpm(2, 12));
    CHECK(Z.size() == 4096);
    const Ring& G = ring_cache(RingSpec::galois(2, 5, 2, {1, 1, 1}));
    CHECK(G.size() == 1024);
    Rng rng(17);
    for (const Ring* Rp : {&Z, &G}) {
        const Ring& R = *Rp;
        for (int i = 0; i < 50'000; ++i) {
            RElem x = RElem(rng.below(R.size()));
            RElem y = RElem(rng.below(R.size()));
            RElem z = RElem(rng.below(R.size()));
            CHECK(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
            CHECK(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
        }
        for (int i = 0; i < 200; ++i) {
            RElem x = RElem(rng.below(R.size()));
            if (R.is_unit(x)) CHECK(R.mul(x, R.inv(x)) == R.one());
        }
    }
    // Teichmuller stays multiplicative out at length 5
    const Ring& k = G.residue_field();
    for (size_t a = 0; a < k.size(); ++a) {
        CHECK(G.residue(G.teichmuller(RElem(a))) == RElem(a));
        for (size_t b = 0; b < k.size(); ++b)
            CHECK(G.mul(G.teichmuller(RElem(a)), G.teichmuller(RElem(b))) ==
                  G.teichmuller(k.mul(RElem(a), RElem(b))));
    }
}

TEST_CASE("locality: non-units form an ideal") {
    for (const auto& key : preset_keys()) CHECK(preset(key).check_local());
}

TEST_CASE("units and inverses") {
    const Ring& z9 = preset("z9");
    CHECK_FALSE(z9.is_unit(z9.from_int(3)));
    CHECK(z9.is_unit(z9.from_int(2)));
    CHECK_THROWS_AS((void)z9.inv(z9.from_int(3)), non_unit_error);
    const Ring& fd = preset("f3_dual");
    CHECK_FALSE(fd.is_unit(fd.sze_t()));
    for (const auto& key : preset_keys()) {
        const Ring& R = preset(key);
        for (size_t a = 0; a < R.size(); ++a)
            if (R.is_unit(RElem(a))) CHECK(R.mul(RElem(a), R.inv(RElem(a))) == R.one());
    }
}

TEST_CASE("teichmuller lift") {
    const Ring& z9 = preset("z9");
    const Ring& f3 = z9.residue_field();
    CHECK(&f3 == &preset("f3"));
    CHECK(z9.teichmuller(f3.zero()) == z9.zero());
    // 2 lifts to 8: 2^3 = 8 and 8^3 = 512 = 8 mod 9
    CHECK(z9.teichmuller(f3.from_int(2)) == z9.from_int(8));
    CHECK(z9.pow(z9.from_int(8), 3) == z9.from_int(8));

    const Ring& gr = preset("gr4_2");
    const Ring& f4 = gr.residue_field();
    CHECK(&f4 == &preset("f4"));
    // the lift of the degree generator is the unique cube root of 1 over it
    RElem omega = f4.parse("[0,1]");
    RElem w = gr.teichmuller(omega);
    CHECK(gr.pow(w, 3) == gr.one());
    CHECK(gr.residue(w) == omega);

    // multiplicativity and residue o teichmuller = id on all of k
    for (const char* key : {"z9", "z4", "gr4_2"}) {
        const Ring& R = preset(key);
        const Ring& k = R.residue_field();
        for (size_t a = 0; a < k.size(); ++a) {
            CHECK(R.residue(R.teichmuller(RElem(a))) == RElem(a));
            for (size_t b = 0; b < k.size(); ++b)
                CHECK(R.mul(R.teichmuller(RElem(a)), R.teichmuller(RElem(b))) ==
                      R.teichmuller(k.mul(RElem(a), RElem(b))));
        }
    }
}

TEST_CASE("division by p into the residue field") {
    const Ring& z9 = preset("z9");
    CHECK(z9.div_p_residue(z9.from_int(6)) == z9.residue_field().from_int(2));
    CHECK_THROWS(z9.div_p_residue(z9.from_int(2)));
    const Ring& gr = preset("gr4_2");
    RElem two_omega = gr.parse("[0,2]");
    CHECK(gr.div_p_residue(two_omega) == gr.residue_field().parse("[0,1]"));
}

TEST_CASE("square-zero structure and max-ideal coordinates") {
    CHECK(preset("z9").is_square_zero());
    CHECK(preset("z4").is_square_zero());
    CHECK(preset("f3_dual").is_square_zero());
    CHECK(preset("bc_ring").is_square_zero());
    CHECK(preset("f3").is_square_zero()); // fields: m = 0

    const Ring& bc = preset("bc_ring");
    CHECK(bc.max_ideal_basis().size() == 2); // {2, t}
    for (size_t a = 0; a < bc.size(); ++a) {
        if (bc.is_unit(RElem(a))) continue;
        auto coords = bc.max_ideal_coords(RElem(a));
        RElem rebuilt = bc.zero();
        for (size_t j = 0; j < coords.size(); ++j)
            for (uint8_t c = 0; c < coords[j]; ++c) rebuilt = bc.add(rebuilt, bc.max_ideal_basis()[j]);
        CHECK(rebuilt == RElem(a));
    }
}

TEST_CASE("hom enumeration: no map kills 3 in Z/9") {
    auto hs = hom_enumerate(preset("f3"), preset("z9"));
    CHECK(hs.homs.empty());
    CHECK_FALSE(hs.residue_mismatch);
}

TEST_CASE("hom enumeration: dual numbers") {
    auto hs = hom_enumerate(preset("f3_dual"), preset("f3_dual"));
    CHECK(hs.homs.size() == 3); // t -> a*eps for a in F3
    auto bc = hom_enumerate(preset("bc_ring"), preset("f2_dual"));
    CHECK(bc.homs.size() == 2); // t -> 0 or eps
    for (const auto& h : hs.homs) CHECK(h.validate_full());
    for (const auto& h : bc.homs) CHECK(h.validate_full());
    auto mism = hom_enumerate(preset("f2_dual"), preset("f3_dual"));
    CHECK(mism.residue_mismatch);
    CHECK(mism.homs.empty());
}

TEST_CASE("every enumerated hom passes the independent full-table check") {
    const char* pairs[][2] = {{"f3", "f3"},      {"f3", "f3_dual"}, {"z4", "z4"},
                              {"z4", "f2_dual"}, {"gr4_2", "gr4_2"}, {"z9", "f3_dual"}};
    for (auto& [a, b] : pairs) {
        auto hs = hom_enumerate(preset(a), preset(b));
        for (const auto& h : hs.homs) CHECK(h.validate_full());
    }
}

TEST_CASE("spec validation errors") {
    CHECK_THROWS_AS(ring_cache(RingSpec::zpm(4, 1)), std::invalid_argument);     // p not prime
    CHECK_THROWS_AS(ring_cache(RingSpec::galois(2, 1, 2, {1, 0, 1})), std::invalid_argument); // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(ring_cache(RingSpec::zpm(2, 40)), cap_exceeded);             // above cap
    CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
}

TEST_CASE("element literals round-trip") {
    for (const auto& key : preset_keys()) {
        const Ring& R = preset(key);
        for (size_t a = 0; a < R.size(); ++a) CHECK(R.parse(R.to_string(RElem(a))) == RElem(a));
    }
    auto [ring, elem] = parse_element("gr4_2:[3,1]");
    CHECK(ring == &preset("gr4_2"));
    CHECK(ring->digits(elem) == std::vector<long>{3, 1});
    CHECK(parse_element("z9:5").second == preset("z9").from_int(5));
}

} // TEST_SUITE
