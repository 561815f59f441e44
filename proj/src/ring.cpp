#include "sln/ring.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace sln {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long pow_long(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1L << 40) / (b > 1 ? b : 2)) throw std::invalid_argument("ring size overflow");
        r *= b;
    }
    return r;
}

// --- tiny F_p[x] helpers for the irreducibility check -----------------------

using Poly = std::vector<long>; // ascending, reduced mod p, no trailing zeros

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(const Poly& a, const Poly& b, long p) {
    Poly r = a;
    while (r.size() >= b.size() && !r.empty()) {
        long lead = r.back();
        if (lead == 0) { r.pop_back(); continue; }
        // b is monic
        size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            long& c = r[shift + i];
            c = ((c - lead * b[i]) % p + p) % p;
        }
        r = poly_trim(r);
    }
    return r;
}

bool poly_irreducible(const Poly& f, long p) {
    Poly g = f;
    for (long& c : g) c = ((c % p) + p) % p;
    g = poly_trim(g);
    int d = int(g.size()) - 1;
    if (d < 1 || g.back() != 1) return false;
    if (d == 1) return true;
    // trial division by every monic polynomial of degree 1..d/2
    for (int e = 1; 2 * e <= d; ++e) {
        long count = pow_long(p, e);
        for (long mask = 0; mask < count; ++mask) {
            Poly div(e + 1, 0);
            long v = mask;
            for (int i = 0; i < e; ++i) { div[i] = v % p; v /= p; }
            div[e] = 1;
            if (poly_mod(g, div, p).empty()) return false;
        }
    }
    return true;
}

std::unordered_map<std::string, std::string>& preset_names() {
    static std::unordered_map<std::string, std::string> m;
    return m;
}

} // namespace

// --- RingSpec ----------------------------------------------------------------

RingSpec RingSpec::zpm(long p, int m) {
    RingSpec s;
    s.kind = RingKind::Zpm;
    s.p = p;
    s.m = m;
    s.d = 1;
    return s;
}

RingSpec RingSpec::galois(long p, int m, int d, std::vector<long> f) {
    RingSpec s;
    s.kind = RingKind::GaloisRing;
    s.p = p;
    s.m = m;
    s.d = d;
    long pm = pow_long(p, m);
    for (long& c : f) c = ((c % pm) + pm) % pm;
    s.f = std::move(f);
    return s;
}

RingSpec RingSpec::square_zero(RingSpec base, int t_ann) {
    RingSpec s;
    s.kind = RingKind::SquareZeroExt;
    s.p = base.p;
    s.m = base.m;
    s.d = base.d;
    s.t_ann = t_ann;
    s.base = std::make_shared<RingSpec>(std::move(base));
    return s;
}

void RingSpec::validate() const {
    if (!is_prime(p)) throw std::invalid_argument("RingSpec: p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("RingSpec: m must be >= 1");
    switch (kind) {
        case RingKind::Zpm:
            break;
        case RingKind::GaloisRing: {
            if (d < 1 || int(f.size()) != d + 1) throw std::invalid_argument("RingSpec: f must have degree d");
            long pm = pow_long(p, m);
            if (f[d] % pm != 1) throw std::invalid_argument("RingSpec: f must be monic");
            if (!poly_irreducible(f, p)) throw std::invalid_argument("RingSpec: f is reducible mod p");
            break;
        }
        case RingKind::SquareZeroExt: {
            if (!base) throw std::invalid_argument("RingSpec: missing base");
            if (base->kind == RingKind::SquareZeroExt)
                throw std::invalid_argument("RingSpec: nested square-zero extensions are not supported");
            base->validate();
            if (t_ann < 0 || t_ann > base->m)
                throw std::invalid_argument("RingSpec: need 0 <= a <= m for p^a t = 0");
            break;
        }
    }
}

std::string RingSpec::key() const {
    std::ostringstream os;
    switch (kind) {
        case RingKind::Zpm:
            os << "Z" << p << "^" << m;
            break;
        case RingKind::GaloisRing:
            os << "GR(" << p << "," << m << "," << d << ")[";
            for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
            os << "]";
            break;
        case RingKind::SquareZeroExt:
            os << base->key() << "[t;a=" << t_ann << "]";
            break;
    }
    return os.str();
}

// --- Ring construction --------------------------------------------------------

Ring::Ring(RingSpec spec, size_t cap) : spec_(std::move(spec)) {
    spec_.validate();
    long pm = pow_long(spec_.p, spec_.m);

    switch (spec_.kind) {
        case RingKind::Zpm:
            ncoords_ = 1;
            radix_ = {pm};
            break;
        case RingKind::GaloisRing:
            ncoords_ = spec_.d;
            radix_.assign(spec_.d, pm);
            break;
        case RingKind::SquareZeroExt: {
            base_ = &ring_cache(*spec_.base, cap);
            int nb = base_->ncoords_;
            long pa = pow_long(spec_.p, spec_.t_ann);
            ncoords_ = 2 * nb;
            radix_.assign(nb, pm);
            radix_.insert(radix_.end(), size_t(nb), pa);
            break;
        }
    }

    stride_.resize(ncoords_);
    size_t sz = 1;
    for (int i = 0; i < ncoords_; ++i) {
        stride_[i] = sz;
        sz *= size_t(radix_[i]);
        if (sz > cap) throw cap_exceeded("ring size exceeds cap " + std::to_string(cap));
    }
    size_ = sz;

    if (spec_.kind == RingKind::GaloisRing) {
        // x^(d+i) reduced by f, for i = 0..d-2
        int d = spec_.d;
        std::vector<long> cur(d, 0); // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
        for (int i = 0; i < d; ++i) cur[i] = ((-spec_.f[i]) % pm + pm) % pm;
        xpow_red_.push_back(cur);
        for (int i = 1; i <= d - 2; ++i) {
            std::vector<long> nxt(d, 0);
            long top = cur[d - 1];
            for (int j = d - 1; j > 0; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top)
                for (int j = 0; j < d; ++j) nxt[j] = (nxt[j] + top * xpow_red_[0][j]) % pm;
            xpow_red_.push_back(nxt);
            cur = nxt;
        }
    }

    // residue field (self when already a field)
    RingSpec res_spec;
    switch (spec_.kind) {
        case RingKind::Zpm:
            res_spec = RingSpec::zpm(spec_.p, 1);
            break;
        case RingKind::GaloisRing: {
            std::vector<long> fres = spec_.f;
            for (long& c : fres) c = ((c % spec_.p) + spec_.p) % spec_.p;
            res_spec = RingSpec::galois(spec_.p, 1, spec_.d, fres);
            break;
        }
        case RingKind::SquareZeroExt:
            res_spec = RingSpec(); // filled below from base
            break;
    }
    if (spec_.kind == RingKind::SquareZeroExt) {
        residue_ = &base_->residue_field();
    } else if (res_spec.key() == spec_.key()) {
        residue_ = nullptr; // self
    } else {
        residue_ = &ring_cache(res_spec, cap);
    }

    std::vector<long> one_c(ncoords_, 0);
    one_c[0] = 1;
    one_ = from_digits(one_c);

    const Ring& k = residue_ ? *residue_ : *this;
    unit_group_order_ = uint64_t(size_) - uint64_t(size_) / k.size();

    if (auto it = preset_names().find(spec_.key()); it != preset_names().end())
        name_ = it->second;
    else
        name_ = spec_.key();

    if (size_ <= 512) build_tables();
}

int Ring::res_degree() const {
    return spec_.kind == RingKind::SquareZeroExt ? spec_.base->d : spec_.d;
}

bool Ring::is_field() const { return residue_ == nullptr; }

std::vector<long> Ring::digits(RElem a) const {
    std::vector<long> c(ncoords_);
    size_t v = a;
    for (int i = 0; i < ncoords_; ++i) {
        c[i] = long(v % size_t(radix_[i]));
        v /= size_t(radix_[i]);
    }
    return c;
}

RElem Ring::from_digits(const std::vector<long>& c) const {
    if (int(c.size()) != ncoords_) throw std::invalid_argument("from_digits: wrong coordinate count");
    size_t v = 0;
    for (int i = ncoords_ - 1; i >= 0; --i) {
        long ci = ((c[i] % radix_[i]) + radix_[i]) % radix_[i];
        v = v * size_t(radix_[i]) + size_t(ci);
    }
    return RElem(v);
}

RElem Ring::add_generic(RElem a, RElem b) const {
    auto ca = digits(a), cb = digits(b);
    for (int i = 0; i < ncoords_; ++i) ca[i] = (ca[i] + cb[i]) % radix_[i];
    return from_digits(ca);
}

RElem Ring::neg_generic(RElem a) const {
    auto c = digits(a);
    for (int i = 0; i < ncoords_; ++i) c[i] = (radix_[i] - c[i]) % radix_[i];
    return from_digits(c);
}

RElem Ring::mul_generic(RElem a, RElem b) const {
    switch (spec_.kind) {
        case RingKind::Zpm:
            return RElem((uint64_t(a) * b) % uint64_t(radix_[0]));
        case RingKind::GaloisRing: {
            int d = spec_.d;
            long pm = radix_[0];
            auto ca = digits(a), cb = digits(b);
            std::vector<long> conv(2 * d - 1, 0);
            for (int i = 0; i < d; ++i) {
                if (!ca[i]) continue;
                for (int j = 0; j < d; ++j) conv[i + j] = (conv[i + j] + ca[i] * cb[j]) % pm;
            }
            std::vector<long> out(conv.begin(), conv.begin() + d);
            for (int i = d; i < 2 * d - 1; ++i) {
                long c = conv[i];
                if (!c) continue;
                const auto& red = xpow_red_[i - d];
                for (int j = 0; j < d; ++j) out[j] = (out[j] + c * red[j]) % pm;
            }
            return from_digits(out);
        }
        case RingKind::SquareZeroExt: {
            RElem a0 = sze_base_part(a), a1 = sze_t_part(a);
            RElem b0 = sze_base_part(b), b1 = sze_t_part(b);
            RElem c0 = base_->mul(a0, b0);
            RElem c1 = base_->add(base_->mul(a0, b1), base_->mul(a1, b0));
            return sze_make(c0, c1);
        }
    }
    throw std::logic_error("unreachable");
}

RElem Ring::residue_index(RElem a) const {
    auto c = digits(a);
    switch (spec_.kind) {
        case RingKind::Zpm:
            return RElem(c[0] % spec_.p);
        case RingKind::GaloisRing: {
            size_t v = 0;
            for (int i = spec_.d - 1; i >= 0; --i) v = v * size_t(spec_.p) + size_t(c[i] % spec_.p);
            return RElem(v);
        }
        case RingKind::SquareZeroExt:
            return base_->residue(sze_base_part(a));
    }
    throw std::logic_error("unreachable");
}

void Ring::build_tables() {
    size_t n = size_;
    add_t_.resize(n * n);
    mul_t_.resize(n * n);
    neg_t_.resize(n);
    res_t_.resize(n);
    for (size_t a = 0; a < n; ++a) {
        neg_t_[a] = neg_generic(RElem(a));
        res_t_[a] = residue_index(RElem(a));
        for (size_t b = a; b < n; ++b) {
            RElem s = add_generic(RElem(a), RElem(b));
            RElem m = mul_generic(RElem(a), RElem(b));
            add_t_[a * n + b] = add_t_[b * n + a] = s;
            mul_t_[a * n + b] = mul_t_[b * n + a] = m;
        }
    }
    inv_t_.assign(n, RElem(UINT32_MAX));
    for (size_t a = 0; a < n; ++a) {
        if (res_t_[a] == 0) continue;
        for (size_t b = 0; b < n; ++b)
            if (mul_t_[a * n + b] == one_) { inv_t_[a] = RElem(b); break; }
    }
    tabulated_ = true;
    build_max_ideal();
}

void Ring::build_max_ideal() {
    std::vector<RElem> nonunits;
    for (size_t a = 0; a < size_; ++a)
        if (res_t_[a] == 0) nonunits.push_back(RElem(a));
    square_zero_ = true;
    for (RElem a : nonunits) {
        for (RElem b : nonunits)
            if (mul(a, b) != 0) { square_zero_ = false; break; }
        if (!square_zero_) break;
    }
    if (!square_zero_) return;
    // greedy F_p-basis of the maximal ideal, with coordinate table
    long p = spec_.p;
    mb_coords_.assign(size_, {});
    std::unordered_map<RElem, std::vector<uint8_t>> span;
    span[0] = {};
    for (RElem e : nonunits) {
        if (span.count(e)) continue;
        size_t bi = mb_basis_.size();
        mb_basis_.push_back(e);
        std::unordered_map<RElem, std::vector<uint8_t>> grown;
        for (const auto& [s, coords] : span) {
            RElem cur = s;
            for (long c = 0; c < p; ++c) {
                auto cc = coords;
                cc.resize(bi + 1, 0);
                cc[bi] = uint8_t(c);
                grown[cur] = cc;
                cur = add(cur, e);
            }
        }
        span = std::move(grown);
    }
    for (auto& [s, coords] : span) {
        coords.resize(mb_basis_.size(), 0);
        mb_coords_[s] = coords;
    }
}

RElem Ring::add(RElem a, RElem b) const {
    if (tabulated_) return add_t_[size_t(a) * size_ + b];
    return add_generic(a, b);
}

RElem Ring::sub(RElem a, RElem b) const { return add(a, neg(b)); }

RElem Ring::mul(RElem a, RElem b) const {
    if (tabulated_) return mul_t_[size_t(a) * size_ + b];
    return mul_generic(a, b);
}

RElem Ring::neg(RElem a) const {
    if (tabulated_) return neg_t_[a];
    return neg_generic(a);
}

RElem Ring::pow(RElem a, uint64_t e) const {
    RElem r = one_, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

RElem Ring::from_int(long v) const {
    long pm = radix_[0];
    std::vector<long> c(ncoords_, 0);
    c[0] = ((v % pm) + pm) % pm;
    return from_digits(c);
}

RElem Ring::residue(RElem a) const {
    if (tabulated_) return res_t_[a];
    return residue_index(a);
}

bool Ring::is_unit(RElem a) const { return residue(a) != 0; }

RElem Ring::inv(RElem a) const {
    if (!is_unit(a)) throw non_unit_error("inv of non-unit " + to_string(a) + " in " + name_);
    if (tabulated_) return inv_t_[a];
    RElem r = pow(a, unit_group_order_ - 1);
    if (mul(a, r) != one_) {
        if (spec_.kind == RingKind::Zpm) {
            // extended Euclid on the single coordinate
            long m = radix_[0], x0 = 1, x1 = 0, r0 = long(a), r1 = m;
            while (r1) {
                long q = r0 / r1;
                std::swap(r0 -= q * r1, r1);
                std::swap(x0 -= q * x1, x1);
            }
            return from_int(x0);
        }
        throw std::logic_error("inv: exponentiation failed in " + name_);
    }
    return r;
}

const Ring& Ring::residue_field() const { return residue_ ? *residue_ : *this; }

RElem Ring::lift_digits(RElem k_elem) const {
    const Ring& k = residue_field();
    if (&k == this) return k_elem;
    auto kc = k.digits(k_elem);
    std::vector<long> c(ncoords_, 0);
    for (size_t i = 0; i < kc.size(); ++i) c[i] = kc[i];
    return from_digits(c);
}

RElem Ring::teichmuller(RElem k_elem) const {
    if (spec_.kind == RingKind::SquareZeroExt)
        throw std::invalid_argument("teichmuller: not defined for square-zero extensions");
    const Ring& k = residue_field();
    uint64_t q = uint64_t(pow_long(spec_.p, res_degree()));
    RElem w = lift_digits(k_elem);
    for (int it = 0; it <= spec_.m + 1; ++it) {
        RElem w2 = pow(w, q);
        if (w2 == w) {
            if (k.digits(residue(w)) != k.digits(k_elem))
                throw std::logic_error("teichmuller: lift drifted off the fibre");
            return w;
        }
        w = w2;
    }
    throw std::logic_error("teichmuller: did not stabilize within m iterations");
}

RElem Ring::div_p_residue(RElem a) const {
    if (spec_.kind == RingKind::SquareZeroExt)
        throw std::invalid_argument("div_p_residue: not defined for square-zero extensions");
    if (residue(a) != 0) throw std::invalid_argument("div_p_residue: element is not in (p)");
    auto c = digits(a);
    const Ring& k = residue_field();
    std::vector<long> out(k.ncoords_, 0);
    for (int i = 0; i < ncoords_; ++i) out[i] = (c[i] / spec_.p) % spec_.p;
    return k.from_digits(out);
}

const Ring& Ring::sze_base() const {
    if (!base_) throw std::invalid_argument("sze_base: not a square-zero extension");
    return *base_;
}

RElem Ring::sze_base_part(RElem a) const {
    const Ring& b = sze_base();
    auto c = digits(a);
    return b.from_digits(std::vector<long>(c.begin(), c.begin() + b.ncoords_));
}

RElem Ring::sze_t_part(RElem a) const {
    const Ring& b = sze_base();
    auto c = digits(a);
    return b.from_digits(std::vector<long>(c.begin() + b.ncoords_, c.end()));
}

RElem Ring::sze_make(RElem base_part, RElem t_part) const {
    const Ring& b = sze_base();
    auto cb = b.digits(base_part);
    auto ct = b.digits(t_part);
    std::vector<long> c(cb);
    c.insert(c.end(), ct.begin(), ct.end());
    return from_digits(c); // t digits reduced mod p^a by from_digits
}

RElem Ring::sze_t() const {
    const Ring& b = sze_base();
    return sze_make(b.zero(), b.one());
}

bool Ring::is_square_zero() const {
    if (!tabulated_) throw cap_exceeded("is_square_zero: ring too large to tabulate");
    return square_zero_;
}

const std::vector<RElem>& Ring::max_ideal_basis() const {
    if (!tabulated_ || !square_zero_)
        throw std::invalid_argument("max_ideal_basis: requires a tabulated square-zero ring");
    return mb_basis_;
}

std::vector<uint8_t> Ring::max_ideal_coords(RElem a) const {
    if (!tabulated_ || !square_zero_)
        throw std::invalid_argument("max_ideal_coords: requires a tabulated square-zero ring");
    if (is_unit(a)) throw std::invalid_argument("max_ideal_coords: unit element");
    return mb_coords_[a];
}

std::vector<std::pair<std::string, RElem>> Ring::generators() const {
    switch (spec_.kind) {
        case RingKind::Zpm:
            return {};
        case RingKind::GaloisRing: {
            std::vector<long> c(ncoords_, 0);
            if (spec_.d > 1) c[1] = 1;
            else c[0] = 1; // degenerate d=1: generator is 1
            return {{"x", from_digits(c)}};
        }
        case RingKind::SquareZeroExt: {
            std::vector<std::pair<std::string, RElem>> g;
            for (auto& [nm, el] : base_->generators()) g.emplace_back(nm, sze_make(el, base_->zero()));
            g.emplace_back("t", sze_t());
            return g;
        }
    }
    throw std::logic_error("unreachable");
}

std::string Ring::to_string(RElem a) const {
    auto c = digits(a);
    if (ncoords_ == 1) return std::to_string(c[0]);
    std::string s = "[";
    for (int i = 0; i < ncoords_; ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

RElem Ring::parse(std::string_view s) const {
    auto parse_long = [](std::string_view t) {
        long v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size()) throw std::invalid_argument("bad element literal");
        return v;
    };
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("bad element literal: " + std::string(s));
        s.remove_prefix(1);
        s.remove_suffix(1);
        std::vector<long> c;
        while (!s.empty()) {
            size_t comma = s.find(',');
            std::string_view tok = s.substr(0, comma);
            c.push_back(parse_long(tok));
            if (comma == std::string_view::npos) break;
            s.remove_prefix(comma + 1);
        }
        if (int(c.size()) != ncoords_) throw std::invalid_argument("bad coordinate count in element literal");
        return from_digits(c);
    }
    std::vector<long> c(ncoords_, 0);
    c[0] = parse_long(s);
    if (ncoords_ != 1 && c[0] >= radix_[0]) throw std::invalid_argument("bad element literal for multi-coordinate ring");
    return from_digits(c);
}

bool Ring::check_local() const {
    if (size_ * size_ > 100'000'000) throw cap_exceeded("check_local: ring too large for full enumeration");
    std::vector<RElem> nonunits;
    for (size_t a = 0; a < size_; ++a)
        if (!is_unit(RElem(a))) nonunits.push_back(RElem(a));
    for (RElem a : nonunits)
        for (RElem b : nonunits)
            if (is_unit(add(a, b))) return false;
    for (RElem a : nonunits)
        for (size_t b = 0; b < size_; ++b)
            if (is_unit(mul(a, RElem(b)))) return false;
    return true;
}

// --- cache & presets -----------------------------------------------------------

namespace {
const std::vector<std::pair<std::string, RingSpec>>& preset_specs();
}

const Ring& ring_cache(const RingSpec& spec, size_t cap) {
    static std::recursive_mutex mu;
    static std::map<std::string, std::unique_ptr<Ring>> cache;
    std::lock_guard lock(mu);
    static bool names_registered = [] {
        for (auto& [nm, s] : preset_specs()) preset_names().emplace(s.key(), nm);
        return true;
    }();
    (void)names_registered;
    std::string key = spec.key();
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
    auto ring = std::unique_ptr<Ring>(new Ring(spec, cap));
    auto [it, inserted] = cache.emplace(std::move(key), std::move(ring));
    return *it->second;
}

namespace {

const std::vector<std::pair<std::string, RingSpec>>& preset_specs() {
    static const std::vector<std::pair<std::string, RingSpec>> v = [] {
        std::vector<std::pair<std::string, RingSpec>> s;
        s.emplace_back("f2", RingSpec::zpm(2, 1));
        s.emplace_back("f3", RingSpec::zpm(3, 1));
        s.emplace_back("f4", RingSpec::galois(2, 1, 2, {1, 1, 1}));
        s.emplace_back("z4", RingSpec::zpm(2, 2));
        s.emplace_back("z9", RingSpec::zpm(3, 2));
        s.emplace_back("gr4_2", RingSpec::galois(2, 2, 2, {1, 1, 1}));
        s.emplace_back("f3_dual", RingSpec::square_zero(RingSpec::zpm(3, 1), 1));
        s.emplace_back("f2_dual", RingSpec::square_zero(RingSpec::zpm(2, 1), 1));
        s.emplace_back("bc_ring", RingSpec::square_zero(RingSpec::zpm(2, 2), 1));
        return s;
    }();
    return v;
}

const std::unordered_map<std::string, std::string>& preset_aliases() {
    static const std::unordered_map<std::string, std::string> a = {
        {"f3_dual_t", "f3_dual"},
        {"f2_dual_t", "f2_dual"},
    };
    return a;
}

} // namespace

const Ring& preset(std::string_view key) {
    std::string k(key);
    if (auto it = preset_aliases().find(k); it != preset_aliases().end()) k = it->second;
    for (auto& [nm, spec] : preset_specs())
        if (nm == k) return ring_cache(spec);
    throw std::invalid_argument("unknown ring preset: " + std::string(key));
}

std::vector<std::string> preset_keys() {
    std::vector<std::string> keys;
    for (auto& [nm, spec] : preset_specs()) keys.push_back(nm);
    return keys;
}

std::pair<const Ring*, RElem> parse_element(std::string_view s) {
    size_t colon = s.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("element literal needs a ring prefix");
    const Ring& r = preset(s.substr(0, colon));
    return {&r, r.parse(s.substr(colon + 1))};
}

// --- homomorphisms --------------------------------------------------------------

namespace {

// Evaluates the canonical form of `a` in dst given generator images.
RElem hom_eval(const Ring& src, const Ring& dst, const std::vector<RElem>& images, RElem a) {
    switch (src.spec().kind) {
        case RingKind::Zpm:
            return dst.from_int(src.digits(a)[0]);
        case RingKind::GaloisRing: {
            auto c = src.digits(a);
            RElem x = images.at(0);
            RElem acc = dst.zero(), xp = dst.one();
            for (size_t i = 0; i < c.size(); ++i) {
                acc = dst.add(acc, dst.mul(dst.from_int(c[i]), xp));
                xp = dst.mul(xp, x);
            }
            return acc;
        }
        case RingKind::SquareZeroExt: {
            const Ring& b = src.sze_base();
            std::vector<RElem> base_imgs(images.begin(), images.end() - 1);
            RElem timg = images.back();
            RElem v0 = hom_eval(b, dst, base_imgs, src.sze_base_part(a));
            RElem v1 = hom_eval(b, dst, base_imgs, src.sze_t_part(a));
            return dst.add(v0, dst.mul(v1, timg));
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<RElem>> candidate_images(const Ring& A, const Ring& B) {
    long p = A.p();
    long pm = pow_long(p, A.length());
    switch (A.spec().kind) {
        case RingKind::Zpm:
            if (B.from_int(pm) != B.zero()) return {};
            return {{}};
        case RingKind::GaloisRing: {
            if (B.from_int(pm) != B.zero()) return {};
            auto gens = A.generators();
            RElem x = gens.at(0).second;
            RElem x_res = A.residue(x);
            const auto& f = A.spec().f;
            std::vector<std::vector<RElem>> out;
            for (size_t b = 0; b < B.size(); ++b) {
                RElem img = RElem(b);
                if (B.residue(img) != x_res) continue;
                RElem acc = B.zero(), xp = B.one();
                for (size_t i = 0; i < f.size(); ++i) {
                    acc = B.add(acc, B.mul(B.from_int(f[i]), xp));
                    xp = B.mul(xp, img);
                }
                if (acc == B.zero()) out.push_back({img});
            }
            return out;
        }
        case RingKind::SquareZeroExt: {
            auto base_cands = candidate_images(A.sze_base(), B);
            long pa = pow_long(p, A.spec().t_ann);
            std::vector<RElem> t_cands;
            for (size_t c = 0; c < B.size(); ++c) {
                RElem img = RElem(c);
                if (B.residue(img) != B.residue_field().zero()) continue;
                if (B.mul(img, img) != B.zero()) continue;
                if (B.mul(B.from_int(pa), img) != B.zero()) continue;
                t_cands.push_back(img);
            }
            std::vector<std::vector<RElem>> out;
            for (auto& bc : base_cands)
                for (RElem tc : t_cands) {
                    auto imgs = bc;
                    imgs.push_back(tc);
                    out.push_back(std::move(imgs));
                }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace

bool RingHom::validate_full() const {
    const Ring& A = *src;
    const Ring& B = *dst;
    if (table[A.one()] != B.one()) return false;
    if (A.size() * A.size() > 10'000'000) throw cap_exceeded("validate_full: source too large");
    for (size_t a = 0; a < A.size(); ++a)
        for (size_t b = 0; b < A.size(); ++b) {
            if (table[A.add(RElem(a), RElem(b))] != B.add(table[a], table[b])) return false;
            if (table[A.mul(RElem(a), RElem(b))] != B.mul(table[a], table[b])) return false;
        }
    for (size_t a = 0; a < A.size(); ++a)
        if (!A.is_unit(RElem(a)) && B.is_unit(table[a])) return false;
    // identity on the residue field
    const Ring& k = A.residue_field();
    for (size_t ke = 0; ke < k.size(); ++ke)
        if (B.residue(table[A.lift_digits(RElem(ke))]) != RElem(ke)) return false;
    return true;
}

HomSearch hom_enumerate(const Ring& A, const Ring& B) {
    HomSearch out;
    if (&A.residue_field() != &B.residue_field()) {
        out.residue_mismatch = true;
        return out;
    }
    for (auto& imgs : candidate_images(A, B)) {
        RingHom h;
        h.src = &A;
        h.dst = &B;
        h.gen_images = imgs;
        h.table.resize(A.size());
        for (size_t a = 0; a < A.size(); ++a) h.table[a] = hom_eval(A, B, imgs, RElem(a));
        out.homs.push_back(std::move(h));
    }
    return out;
}

} // namespace sln
