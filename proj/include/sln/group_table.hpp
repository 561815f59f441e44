#pragma once

// Finite matrix groups materialized by BFS closure over a generator set.
// Elements are canonical packed encodings indexed in discovery order
// (identity first); the Cayley edges under right multiplication by each
// generator and a BFS spanning tree are kept alongside.  Closure order is
// deterministic, which downstream cohomology code relies on.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sln/matrix.hpp"

namespace sln {

class GroupTable {
  public:
    static constexpr uint32_t npos = UINT32_MAX;
    static constexpr size_t kDefaultCap = 2'000'000;

    const Ring& ring() const { return *ring_; }
    int dim() const { return n_; }
    size_t order() const { return count_; }
    const std::vector<Mat>& gens() const { return gens_; }
    size_t num_gens() const { return gens_.size(); }

    Mat element(uint32_t idx) const;
    uint32_t index_of(const Mat& m) const; // npos when absent
    bool contains(const Mat& m) const { return index_of(m) != npos; }

    // Cayley edge: index of element(idx) * gens()[g].
    uint32_t step(uint32_t idx, size_t g) const { return cayley_[idx * gens_.size() + g]; }
    uint32_t parent(uint32_t idx) const { return parent_[idx]; }
    int parent_letter(uint32_t idx) const { return letter_[idx]; }
    // Generator letters multiplying to element(idx), starting at the identity.
    std::vector<int> word(uint32_t idx) const;
    // Product index via matrix multiplication + lookup.
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inverse(uint32_t a) const;

    uint64_t gen_hash() const;

    void save(const std::string& path) const;
    static GroupTable load(const std::string& path);

    friend GroupTable closure(const std::vector<Mat>& gens, size_t cap);

  private:
    GroupTable() = default;
    std::string encode(const Mat& m) const;
    Mat decode(const char* bytes) const;

    const Ring* ring_ = nullptr;
    int n_ = 0;
    int bytes_per_entry_ = 1;
    size_t enc_size_ = 0;
    size_t count_ = 0;
    std::vector<Mat> gens_;
    std::vector<char> arena_; // count_ * enc_size_ bytes
    std::vector<uint32_t> cayley_;
    std::vector<uint32_t> parent_;
    std::vector<int32_t> letter_;
    std::unordered_map<std::string, uint32_t> index_;
};

// BFS closure of the generator set (all gens over one ring, all invertible).
// Throws cap_exceeded past `cap` elements.
GroupTable closure(const std::vector<Mat>& gens, size_t cap = GroupTable::kDefaultCap);

// Standard generators E_ij(b) of SL_n(k), b running over an F_p-basis of k.
std::vector<Mat> sl_generators(const Ring& k, int n);
// Upper unitriangular generators E_ij(b), i < j.
std::vector<Mat> unitriangular_generators(const Ring& k, int n);

GroupTable sl_table(const Ring& k, int n, size_t cap = GroupTable::kDefaultCap);
// The full upper unitriangular group over k: a Sylow-p subgroup of SL_n(k)
// of order p^(d n(n-1)/2).
GroupTable sylow_unitriangular(const Ring& k, int n);

// |SL_n(F_q)| = q^(n(n-1)/2) * prod_{i=2..n} (q^i - 1).
uint64_t sl_order_formula(uint64_t q, int n);

// Disk cache: loads a saved table when (ring, n, generator hash) matches,
// otherwise closes and saves.
GroupTable closure_cached(const std::vector<Mat>& gens, const std::string& cache_dir,
                          size_t cap = GroupTable::kDefaultCap);

} // namespace sln
