#include "sln/group_table.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>

namespace sln {

std::string GroupTable::encode(const Mat& m) const {
    std::string s(enc_size_, '\0');
    for (int i = 0; i < n_ * n_; ++i) {
        uint32_t v = m.e[i];
        for (int b = 0; b < bytes_per_entry_; ++b) s[size_t(i) * bytes_per_entry_ + b] = char((v >> (8 * b)) & 0xff);
    }
    return s;
}

Mat GroupTable::decode(const char* bytes) const {
    Mat m(*ring_, n_);
    for (int i = 0; i < n_ * n_; ++i) {
        uint32_t v = 0;
        for (int b = 0; b < bytes_per_entry_; ++b) v |= uint32_t(uint8_t(bytes[size_t(i) * bytes_per_entry_ + b])) << (8 * b);
        m.e[i] = v;
    }
    return m;
}

Mat GroupTable::element(uint32_t idx) const {
    if (idx >= count_) throw std::out_of_range("GroupTable::element");
    return decode(&arena_[idx * enc_size_]);
}

uint32_t GroupTable::index_of(const Mat& m) const {
    if (m.ring != ring_ || m.n != n_) return npos;
    auto it = index_.find(encode(m));
    return it == index_.end() ? npos : it->second;
}

std::vector<int> GroupTable::word(uint32_t idx) const {
    std::vector<int> w;
    while (idx != 0) {
        w.push_back(letter_[idx]);
        idx = parent_[idx];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

uint32_t GroupTable::mul(uint32_t a, uint32_t b) const {
    uint32_t r = index_of(mat_mul(element(a), element(b)));
    if (r == npos) throw std::logic_error("GroupTable::mul: product left the table");
    return r;
}

uint32_t GroupTable::inverse(uint32_t a) const {
    uint32_t r = index_of(mat_inv(element(a)));
    if (r == npos) throw std::logic_error("GroupTable::inverse: inverse left the table");
    return r;
}

uint64_t GroupTable::gen_hash() const {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    std::string key = ring_->spec().key();
    for (char c : key) mix(uint8_t(c));
    mix(uint64_t(n_));
    for (const Mat& g : gens_)
        for (RElem v : g.e) mix(v);
    return h;
}

GroupTable closure(const std::vector<Mat>& gens, size_t cap) {
    if (gens.empty()) throw std::invalid_argument("closure: need at least one generator");
    const Ring* R = gens[0].ring;
    int n = gens[0].n;
    for (const Mat& g : gens) {
        if (g.ring != R || g.n != n) throw std::invalid_argument("closure: generators over mixed rings/dims");
        if (!R->is_unit(mat_det(g))) throw std::invalid_argument("closure: non-invertible generator");
    }

    GroupTable t;
    t.ring_ = R;
    t.n_ = n;
    t.gens_ = gens;
    t.bytes_per_entry_ = 1;
    size_t sz = R->size();
    while (sz > 256) {
        sz >>= 8;
        ++t.bytes_per_entry_;
    }
    t.enc_size_ = size_t(n) * n * t.bytes_per_entry_;

    auto push = [&](const Mat& m, uint32_t par, int32_t letter) -> uint32_t {
        std::string key = t.encode(m);
        auto it = t.index_.find(key);
        if (it != t.index_.end()) return it->second;
        if (t.count_ >= cap)
            throw cap_exceeded("closure: exceeded cap of " + std::to_string(cap) + " elements");
        uint32_t idx = uint32_t(t.count_++);
        t.arena_.insert(t.arena_.end(), key.begin(), key.end());
        t.parent_.push_back(par);
        t.letter_.push_back(letter);
        t.index_.emplace(std::move(key), idx);
        return idx;
    };

    push(Mat::identity(*R, n), 0, -1);
    size_t ngens = gens.size();
    for (uint32_t cur = 0; cur < t.count_; ++cur) {
        Mat m = t.element(cur);
        for (size_t g = 0; g < ngens; ++g)
            t.cayley_.push_back(push(mat_mul(m, gens[g]), cur, int32_t(g)));
    }
    return t;
}

// F_p-basis 1, x, ..., x^(d-1) of the field k.
static std::vector<RElem> field_basis(const Ring& k) {
    if (!k.is_field()) throw std::invalid_argument("field_basis: ring is not a field");
    std::vector<RElem> basis;
    for (int i = 0; i < k.res_degree(); ++i) {
        std::vector<long> c(k.res_degree(), 0);
        c[i] = 1;
        basis.push_back(k.from_digits(c));
    }
    return basis;
}

std::vector<Mat> sl_generators(const Ring& k, int n) {
    std::vector<Mat> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (RElem b : field_basis(k)) gens.push_back(elementary(k, n, i, j, b));
        }
    return gens;
}

std::vector<Mat> unitriangular_generators(const Ring& k, int n) {
    std::vector<Mat> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (RElem b : field_basis(k)) gens.push_back(elementary(k, n, i, j, b));
    return gens;
}

GroupTable sl_table(const Ring& k, int n, size_t cap) { return closure(sl_generators(k, n), cap); }

GroupTable sylow_unitriangular(const Ring& k, int n) {
    return closure(unitriangular_generators(k, n));
}

uint64_t sl_order_formula(uint64_t q, int n) {
    uint64_t r = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) r *= q;
    for (int i = 2; i <= n; ++i) {
        uint64_t qi = 1;
        for (int j = 0; j < i; ++j) qi *= q;
        r *= (qi - 1);
    }
    return r;
}

// --- disk cache ------------------------------------------------------------

static constexpr char kMagic[8] = {'S', 'L', 'N', 'G', 'T', '0', '0', '1'};

void GroupTable::save(const std::string& path) const {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("GroupTable::save: cannot open " + path);
    os.write(kMagic, 8);
    std::string rk = ring_->spec().key();
    auto w32 = [&](uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); };
    auto w64 = [&](uint64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); };
    w32(uint32_t(rk.size()));
    os.write(rk.data(), std::streamsize(rk.size()));
    w32(uint32_t(n_));
    w32(uint32_t(gens_.size()));
    for (const Mat& g : gens_)
        for (RElem v : g.e) w32(v);
    w64(count_);
    os.write(arena_.data(), std::streamsize(arena_.size()));
    os.write(reinterpret_cast<const char*>(cayley_.data()), std::streamsize(cayley_.size() * 4));
    os.write(reinterpret_cast<const char*>(parent_.data()), std::streamsize(parent_.size() * 4));
    os.write(reinterpret_cast<const char*>(letter_.data()), std::streamsize(letter_.size() * 4));
    if (!os) throw std::runtime_error("GroupTable::save: write failed");
}

GroupTable GroupTable::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("GroupTable::load: cannot open " + path);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kMagic, 8) != 0) throw std::runtime_error("GroupTable::load: bad magic/version");
    auto r32 = [&]() {
        uint32_t v = 0;
        is.read(reinterpret_cast<char*>(&v), 4);
        return v;
    };
    auto r64 = [&]() {
        uint64_t v = 0;
        is.read(reinterpret_cast<char*>(&v), 8);
        return v;
    };
    uint32_t klen = r32();
    std::string rk(klen, '\0');
    is.read(rk.data(), klen);

    // reconstruct the ring from its spec key via the preset table; fall back
    // to parsing is intentionally not supported (cache keys come from us)
    const Ring* ring = nullptr;
    for (const auto& key : preset_keys()) {
        const Ring& r = preset(key);
        if (r.spec().key() == rk) { ring = &r; break; }
    }
    if (!ring) throw std::runtime_error("GroupTable::load: unknown ring key " + rk);

    GroupTable t;
    t.ring_ = ring;
    t.n_ = int(r32());
    uint32_t ng = r32();
    for (uint32_t g = 0; g < ng; ++g) {
        Mat m(*ring, t.n_);
        for (auto& v : m.e) v = r32();
        t.gens_.push_back(std::move(m));
    }
    t.bytes_per_entry_ = 1;
    size_t sz = ring->size();
    while (sz > 256) {
        sz >>= 8;
        ++t.bytes_per_entry_;
    }
    t.enc_size_ = size_t(t.n_) * t.n_ * t.bytes_per_entry_;
    t.count_ = r64();
    t.arena_.resize(t.count_ * t.enc_size_);
    is.read(t.arena_.data(), std::streamsize(t.arena_.size()));
    t.cayley_.resize(t.count_ * t.gens_.size());
    is.read(reinterpret_cast<char*>(t.cayley_.data()), std::streamsize(t.cayley_.size() * 4));
    t.parent_.resize(t.count_);
    is.read(reinterpret_cast<char*>(t.parent_.data()), std::streamsize(t.parent_.size() * 4));
    t.letter_.resize(t.count_);
    is.read(reinterpret_cast<char*>(t.letter_.data()), std::streamsize(t.letter_.size() * 4));
    if (!is) throw std::runtime_error("GroupTable::load: truncated file");
    t.index_.reserve(t.count_);
    for (uint32_t i = 0; i < t.count_; ++i)
        t.index_.emplace(std::string(&t.arena_[i * t.enc_size_], t.enc_size_), i);
    return t;
}

GroupTable closure_cached(const std::vector<Mat>& gens, const std::string& cache_dir, size_t cap) {
    // same hash as GroupTable::gen_hash, computed without closing
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    std::string rk = gens.at(0).ring->spec().key();
    for (char c : rk) mix(uint8_t(c));
    mix(uint64_t(gens[0].n));
    for (const Mat& g : gens)
        for (RElem v : g.e) mix(v);

    std::filesystem::create_directories(cache_dir);
    std::string path = cache_dir + "/gt_" + std::to_string(h) + ".bin";
    if (std::filesystem::exists(path)) {
        try {
            GroupTable t = GroupTable::load(path);
            if (t.gen_hash() == h) return t;
        } catch (const std::exception&) {
            // stale or corrupt cache entry: rebuild below
        }
    }
    GroupTable t = closure(gens, cap);
    t.save(path);
    return t;
}

} // namespace sln
