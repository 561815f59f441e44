#pragma once

// Exact arithmetic in finite local rings with residue field k = F_{p^d}:
//
//   Zpm(p, m)                Z/p^m
//   GaloisRing(p, m, d, f)   Z[x]/(p^m, f(x)),  f monic, irreducible mod p
//   SquareZeroExt(base, a)   base[t]/(t^2, p^a t)
//
// Elements are canonical indices into a fixed mixed-radix digit enumeration
// (base-p^m digits per polynomial coordinate, t-coordinates mod p^a), so
// equality is index equality and hashing is free.  Ring handles are immutable
// after construction and shared through a global cache keyed by the spec, so
// two rings with the same presentation are the same object.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sln/errors.hpp"

namespace sln {

using RElem = uint32_t;

enum class RingKind { Zpm, GaloisRing, SquareZeroExt };

struct RingSpec {
    RingKind kind = RingKind::Zpm;
    long p = 2;
    int m = 1;
    int d = 1;                   // residue degree (1 unless GaloisRing)
    std::vector<long> f;         // ascending coefficients, size d+1, monic
    std::shared_ptr<RingSpec> base; // SquareZeroExt only (Zpm or GaloisRing)
    int t_ann = 1;               // p^t_ann * t = 0

    static RingSpec zpm(long p, int m);
    static RingSpec galois(long p, int m, int d, std::vector<long> f);
    static RingSpec square_zero(RingSpec base, int t_ann);

    void validate() const; // throws std::invalid_argument
    std::string key() const; // canonical cache key / description
};

class Ring {
  public:
    static constexpr size_t kDefaultCap = 1'000'000;

    const RingSpec& spec() const { return spec_; }
    size_t size() const { return size_; }
    long p() const { return spec_.p; }
    int length() const { return spec_.m; }       // truncation length m
    int res_degree() const;                      // d of the residue field
    const std::string& name() const { return name_; }

    RElem zero() const { return 0; }
    RElem one() const { return one_; }
    RElem add(RElem a, RElem b) const;
    RElem sub(RElem a, RElem b) const;
    RElem mul(RElem a, RElem b) const;
    RElem neg(RElem a) const;
    RElem pow(RElem a, uint64_t e) const;
    RElem from_int(long v) const;
    bool is_unit(RElem a) const;
    RElem inv(RElem a) const; // throws non_unit_error

    // Residue field structure.  The returned ring is the canonical cached
    // instance (a field is its own residue field).
    const Ring& residue_field() const;
    RElem residue(RElem a) const;
    bool is_field() const;

    // Entrywise digit lift k -> this ring (a set-theoretic section of
    // residue; a ring section exactly when the digits multiply through).
    RElem lift_digits(RElem k_elem) const;

    // Multiplicative (Teichmuller) lift, computed by iterating y -> y^q on
    // the digit lift until stable.  Zpm / GaloisRing only.
    RElem teichmuller(RElem k_elem) const;

    // For a with residue(a) = 0: the class of a/p in the residue field.
    // Identifies the kernel layer of W_{m+1} -> W_m.  Zpm / GaloisRing only.
    RElem div_p_residue(RElem a) const;

    // SquareZeroExt accessors.
    const Ring& sze_base() const;
    RElem sze_base_part(RElem a) const;   // element of base
    RElem sze_t_part(RElem a) const;      // element of base (digits < p^t_ann)
    RElem sze_make(RElem base_part, RElem t_part) const;
    RElem sze_t() const;                  // the generator t

    // Maximal ideal viewed as an F_p-space (valid whenever p*m_A = 0, which
    // holds in every square-zero ring).  Basis and coordinates are only
    // available for rings small enough to tabulate.
    bool is_square_zero() const;          // m_A * m_A = 0
    const std::vector<RElem>& max_ideal_basis() const;
    std::vector<uint8_t> max_ideal_coords(RElem a) const;

    // Free generators for homomorphism enumeration ("x" and/or "t").
    std::vector<std::pair<std::string, RElem>> generators() const;

    std::vector<long> digits(RElem a) const;
    RElem from_digits(const std::vector<long>& c) const;
    std::string to_string(RElem a) const;       // "5" or "[3,1]"
    RElem parse(std::string_view s) const;

    // Exhaustive sanity sweep: non-units closed under + and under
    // multiplication by arbitrary elements.
    bool check_local() const;

    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

  private:
    friend const Ring& ring_cache(const RingSpec&, size_t);
    explicit Ring(RingSpec spec, size_t cap);

    RElem add_generic(RElem, RElem) const;
    RElem mul_generic(RElem, RElem) const;
    RElem neg_generic(RElem) const;
    RElem residue_index(RElem) const;
    void build_tables();
    void build_max_ideal();

    RingSpec spec_;
    std::string name_;
    size_t size_ = 0;
    RElem one_ = 0;
    int ncoords_ = 0;
    std::vector<long> radix_;    // per coordinate
    std::vector<size_t> stride_;
    std::vector<std::vector<long>> xpow_red_; // GaloisRing: x^(d+i) reduced, coeffs mod p^m
    const Ring* residue_ = nullptr; // nullptr => self
    const Ring* base_ = nullptr;    // SquareZeroExt only

    bool tabulated_ = false;
    std::vector<RElem> add_t_, mul_t_, neg_t_, inv_t_, res_t_;
    uint64_t unit_group_order_ = 0;

    bool square_zero_ = false;
    std::vector<RElem> mb_basis_;
    std::vector<std::vector<uint8_t>> mb_coords_; // indexed by element
};

// Global canonicalizing cache (thread-safe).
const Ring& ring_cache(const RingSpec& spec, size_t cap = Ring::kDefaultCap);

// Named presets: f2 f3 f4 z4 z9 gr4_2 f3_dual f2_dual bc_ring (plus aliases).
const Ring& preset(std::string_view key);
std::vector<std::string> preset_keys();

// Parses "z9:5" / "gr4_2:[3,1]" style element literals.
std::pair<const Ring*, RElem> parse_element(std::string_view s);

struct RingHom {
    const Ring* src = nullptr;
    const Ring* dst = nullptr;
    std::vector<RElem> gen_images; // aligned with src->generators()
    std::vector<RElem> table;      // full value map, indexed by src element

    RElem apply(RElem a) const { return table[a]; }
    // Full-table re-check of additivity/multiplicativity/1 and locality,
    // independent of how the hom was found.
    bool validate_full() const;
};

struct HomSearch {
    std::vector<RingHom> homs;
    bool residue_mismatch = false; // residue fields differ: empty by convention
};

// All local W-algebra homomorphisms A -> B inducing the identity on the
// common residue field, by brute force over generator images.
HomSearch hom_enumerate(const Ring& A, const Ring& B);

} // namespace sln
