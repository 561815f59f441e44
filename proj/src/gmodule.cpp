#include "sln/gmodule.hpp"

#include <algorithm>
#include <set>

namespace sln {

namespace {

// k-coefficients of the diagonal of a trace-zero matrix in the basis
// h_u = e_uu - e_(u+1)(u+1):  c_u = a_0 + ... + a_u.
std::vector<RElem> diagonal_h_coeffs(const Mat& m) {
    const Ring& k = *m.ring;
    std::vector<RElem> c;
    RElem acc = k.zero();
    for (int i = 0; i + 1 < m.n; ++i) {
        acc = k.add(acc, m.at(i, i));
        c.push_back(acc);
    }
    return c;
}

} // namespace

GModule module_make(ModuleKind kind, const GroupTable& G, const Ring* tensor_ring) {
    GModule mod;
    mod.G_ = &G;
    mod.k_ = &G.ring();
    mod.n_ = G.dim();
    mod.kind_ = kind;
    if (!mod.k_->is_field()) throw std::invalid_argument("module_make: group ring must be a field");
    mod.p_ = int(mod.k_->p());
    mod.kdeg_ = mod.k_->res_degree();
    int n = mod.n_, d = mod.kdeg_, p = mod.p_;

    switch (kind) {
        case ModuleKind::Full: mod.dim_ = n * n * d; break;
        case ModuleKind::TraceZero: mod.dim_ = (n * n - 1) * d; break;
        case ModuleKind::Scalar:
            if (n % p != 0) throw std::invalid_argument("module_make: S inside M0 requires p | n");
            mod.dim_ = d;
            break;
        case ModuleKind::TraceZeroModScalar:
            if (n % p != 0) throw std::invalid_argument("module_make: V = M0/S requires p | n");
            mod.dim_ = (n * n - 2) * d;
            break;
        case ModuleKind::TrivialLine: mod.dim_ = d; break;
        case ModuleKind::FullTensorMaxIdeal: {
            if (!tensor_ring) throw std::invalid_argument("module_make: tensor ring required");
            if (&tensor_ring->residue_field() != mod.k_)
                throw std::invalid_argument("module_make: tensor ring residue field mismatch");
            if (!tensor_ring->is_square_zero())
                throw std::invalid_argument("module_make: tensor ring is not square-zero");
            mod.tensor_ring_ = tensor_ring;
            mod.dim_ = n * n * int(tensor_ring->max_ideal_basis().size());
            break;
        }
    }
    mod.build_actions();
    return mod;
}

fp::Vec GModule::to_coords(const Mat& m) const {
    const Ring& k = *k_;
    int n = n_, d = kdeg_;
    fp::Vec v(dim_, 0);
    auto put = [&](int slot, RElem kval) {
        auto dig = k.digits(kval);
        for (int l = 0; l < d; ++l) v[size_t(slot) * d + l] = uint8_t(dig[l]);
    };
    switch (kind_) {
        case ModuleKind::Full: {
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) put(s * n + t, m.at(s, t));
            return v;
        }
        case ModuleKind::TraceZero:
        case ModuleKind::TraceZeroModScalar: {
            if (mat_trace(m) != k.zero()) throw std::invalid_argument("to_coords: trace is nonzero");
            int slot = 0;
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    if (s == t) continue;
                    put(slot++, m.at(s, t));
                }
            auto h = diagonal_h_coeffs(m);
            if (kind_ == ModuleKind::TraceZero) {
                for (int u = 0; u < n - 1; ++u) put(slot++, h[u]);
            } else {
                // project M0 -> V: kill the h_{n-2} coefficient by a scalar
                // shift (I has h_u coefficient u+1, and n-1 = -1 mod p)
                RElem lambda = k.neg(h[n - 2]); // gamma / (n-1) = -gamma
                for (int u = 0; u < n - 2; ++u) {
                    RElem coeff = k.sub(h[u], k.mul(lambda, k.from_int(u + 1)));
                    put(slot++, coeff);
                }
            }
            return v;
        }
        case ModuleKind::Scalar: {
            RElem lam = m.at(0, 0);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    if (m.at(s, t) != (s == t ? lam : k.zero()))
                        throw std::invalid_argument("to_coords: not a scalar matrix");
            put(0, lam);
            return v;
        }
        case ModuleKind::TrivialLine:
            throw std::invalid_argument("to_coords: trivial module has no matrix realization");
        case ModuleKind::FullTensorMaxIdeal: {
            const Ring& B = *tensor_ring_;
            int e = int(B.max_ideal_basis().size());
            if (m.ring != &B) throw std::invalid_argument("to_coords: wrong ring for tensor module");
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    auto mc = B.max_ideal_coords(m.at(s, t));
                    for (int j = 0; j < e; ++j) v[size_t(s * n + t) * e + j] = mc[j];
                }
            return v;
        }
    }
    throw std::logic_error("unreachable");
}

Mat GModule::from_coords(const fp::Vec& v) const {
    const Ring& k = *k_;
    int n = n_, d = kdeg_;
    if (int(v.size()) != dim_) throw std::invalid_argument("from_coords: wrong length");
    auto get = [&](int slot) {
        std::vector<long> dig(d);
        for (int l = 0; l < d; ++l) dig[l] = v[size_t(slot) * d + l];
        return k.from_digits(dig);
    };
    switch (kind_) {
        case ModuleKind::Full: {
            Mat m(k, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) m.at(s, t) = get(s * n + t);
            return m;
        }
        case ModuleKind::TraceZero:
        case ModuleKind::TraceZeroModScalar: {
            Mat m(k, n);
            int slot = 0;
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    if (s == t) continue;
                    m.at(s, t) = get(slot++);
                }
            int nh = (kind_ == ModuleKind::TraceZero) ? n - 1 : n - 2;
            std::vector<RElem> h(size_t(n) - 1, k.zero());
            for (int u = 0; u < nh; ++u) h[u] = get(slot++);
            // diagonal from h-coefficients: a_0 = c_0, a_i = c_i - c_{i-1}
            m.at(0, 0) = h[0];
            for (int i = 1; i < n - 1; ++i) m.at(i, i) = k.sub(h[i], h[i - 1]);
            m.at(n - 1, n - 1) = k.neg(h[n - 2]);
            return m;
        }
        case ModuleKind::Scalar: {
            Mat m = Mat::identity(k, n);
            return mat_scale(get(0), m);
        }
        case ModuleKind::TrivialLine:
            throw std::invalid_argument("from_coords: trivial module has no matrix realization");
        case ModuleKind::FullTensorMaxIdeal: {
            const Ring& B = *tensor_ring_;
            const auto& mb = B.max_ideal_basis();
            int e = int(mb.size());
            Mat m(B, n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    RElem acc = B.zero();
                    for (int j = 0; j < e; ++j) {
                        uint8_t c = v[size_t(s * n + t) * e + j];
                        for (uint8_t rep = 0; rep < c; ++rep) acc = B.add(acc, mb[j]);
                    }
                    m.at(s, t) = acc;
                }
            return m;
        }
    }
    throw std::logic_error("unreachable");
}

void GModule::build_actions() {
    const Ring& k = *k_;
    size_t ngens = G_->num_gens();
    gen_act_.reserve(ngens);

    if (kind_ == ModuleKind::TrivialLine) {
        for (size_t g = 0; g < ngens; ++g) gen_act_.push_back(fp::Mat::identity(p_, dim_));
    } else if (kind_ == ModuleKind::FullTensorMaxIdeal) {
        const Ring& B = *tensor_ring_;
        for (size_t g = 0; g < ngens; ++g) {
            Mat L = mat_lift_digits(B, G_->gens()[g]);
            Mat Linv = mat_inv(L);
            fp::Mat a(p_, dim_, dim_);
            for (int b = 0; b < dim_; ++b) {
                fp::Vec unit(dim_, 0);
                unit[b] = 1;
                fp::Vec col = to_coords(mat_mul(mat_mul(L, from_coords(unit)), Linv));
                for (int r = 0; r < dim_; ++r) a.at(r, b) = col[r];
            }
            gen_act_.push_back(std::move(a));
        }
    } else {
        for (size_t g = 0; g < ngens; ++g) {
            const Mat& gm = G_->gens()[g];
            Mat ginv = mat_inv(gm);
            fp::Mat a(p_, dim_, dim_);
            for (int b = 0; b < dim_; ++b) {
                fp::Vec unit(dim_, 0);
                unit[b] = 1;
                fp::Vec col = to_coords(mat_mul(mat_mul(gm, from_coords(unit)), ginv));
                for (int r = 0; r < dim_; ++r) a.at(r, b) = col[r];
            }
            gen_act_.push_back(std::move(a));
        }
    }

    // k-scalar structure (multiplication by the basis of k)
    if (kind_ != ModuleKind::FullTensorMaxIdeal) {
        for (int l = 0; l < kdeg_; ++l) {
            std::vector<long> dig(kdeg_, 0);
            dig[l] = 1;
            RElem beta = k.from_digits(dig);
            fp::Mat a(p_, dim_, dim_);
            if (kind_ == ModuleKind::TrivialLine) {
                for (int b = 0; b < dim_; ++b) {
                    std::vector<long> bd(kdeg_, 0);
                    bd[b] = 1;
                    auto prod = k.digits(k.mul(beta, k.from_digits(bd)));
                    for (int r = 0; r < dim_; ++r) a.at(r, b) = uint8_t(prod[r]);
                }
            } else {
                for (int b = 0; b < dim_; ++b) {
                    fp::Vec unit(dim_, 0);
                    unit[b] = 1;
                    fp::Vec col = to_coords(mat_scale(beta, from_coords(unit)));
                    for (int r = 0; r < dim_; ++r) a.at(r, b) = col[r];
                }
            }
            k_act_.push_back(std::move(a));
        }
    }

    // per-element actions along the spanning tree
    act_.resize(G_->order());
    act_[0] = fp::Mat::identity(p_, dim_);
    for (uint32_t idx = 1; idx < G_->order(); ++idx)
        act_[idx] = fp::mul(act_[G_->parent(idx)], gen_act_[size_t(G_->parent_letter(idx))]);
}

int GModule::invariants_dim() const {
    fp::RowEchelon re(p_, dim_);
    fp::Vec row(dim_);
    for (const auto& a : gen_act_) {
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j) row[j] = uint8_t((a.at(i, j) + (i == j ? p_ - 1 : 0)) % p_);
            re.add_row(row);
        }
    }
    return dim_ - re.rank();
}

std::vector<std::vector<fp::Vec>> submodule_lattice(const GModule& mod, bool k_closed) {
    int D = mod.dim();
    int p = mod.p();
    uint64_t total = 1;
    for (int i = 0; i < D; ++i) {
        total *= uint64_t(p);
        if (total > (uint64_t(1) << 26)) throw cap_exceeded("submodule_lattice: p^dim too large");
    }

    std::vector<const fp::Mat*> ops;
    for (size_t g = 0; g < mod.group().num_gens(); ++g) ops.push_back(&mod.gen_action(g));
    if (k_closed && mod.has_k_structure())
        for (int l = 0; l < mod.k_degree(); ++l) ops.push_back(&mod.k_action(l));

    std::set<std::string> seen;
    std::vector<std::vector<fp::Vec>> proper;

    auto key_of = [&](const std::vector<fp::Vec>& rows) {
        std::string key;
        for (const auto& r : rows) key.append(r.begin(), r.end());
        return key;
    };

    for (uint64_t code = 1; code < total; ++code) {
        fp::Vec v(D);
        uint64_t x = code;
        for (int i = 0; i < D; ++i) {
            v[i] = uint8_t(x % p);
            x /= p;
        }
        fp::RowEchelon span(p, D);
        span.add_row(v);
        std::vector<fp::Vec> work{v};
        bool full = span.rank() == D;
        while (!work.empty() && !full) {
            fp::Vec w = std::move(work.back());
            work.pop_back();
            for (const fp::Mat* op : ops) {
                fp::Vec u = fp::mul_vec(*op, w);
                if (span.add_row(u)) {
                    if (span.rank() == D) { full = true; break; }
                    work.push_back(std::move(u));
                }
            }
        }
        if (full) continue;
        auto rows = span.basis_rows();
        auto key = key_of(rows);
        if (seen.insert(key).second) proper.push_back(std::move(rows));
    }

    // pairwise sums until saturation
    bool grew = true;
    while (grew) {
        grew = false;
        size_t cnt = proper.size();
        for (size_t a = 0; a < cnt; ++a)
            for (size_t b = a + 1; b < cnt; ++b) {
                fp::RowEchelon span(p, D);
                for (const auto& r : proper[a]) span.add_row(r);
                for (const auto& r : proper[b]) span.add_row(r);
                if (span.rank() == D) continue;
                auto rows = span.basis_rows();
                auto key = key_of(rows);
                if (seen.insert(key).second) {
                    proper.push_back(std::move(rows));
                    grew = true;
                }
            }
    }
    std::sort(proper.begin(), proper.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return proper;
}

HomDim equivariant_hom_dim(const GModule& src, const GModule& dst) {
    if (src.p() != dst.p()) throw std::invalid_argument("equivariant_hom_dim: different characteristics");
    if (&src.group() != &dst.group()) throw std::invalid_argument("equivariant_hom_dim: different groups");
    int p = src.p();
    int Ds = src.dim(), Dd = dst.dim();
    int N = Ds * Dd; // unknowns T[a][b], a < Dd, b < Ds
    fp::RowEchelon re(p, N);
    fp::Vec row(size_t(N), 0);

    auto add_pair_constraints = [&](const fp::Mat& actS, const fp::Mat& actD) {
        // act_dst * T = T * act_src, entrywise over (i, j)
        for (int i = 0; i < Dd; ++i)
            for (int j = 0; j < Ds; ++j) {
                std::fill(row.begin(), row.end(), 0);
                for (int a = 0; a < Dd; ++a) row[size_t(a) * Ds + j] = uint8_t((row[size_t(a) * Ds + j] + actD.at(i, a)) % p);
                for (int b = 0; b < Ds; ++b)
                    row[size_t(i) * Ds + b] = uint8_t((row[size_t(i) * Ds + b] + p - actS.at(b, j) % p) % p);
                re.add_row(row);
            }
    };

    for (size_t g = 0; g < src.group().num_gens(); ++g)
        add_pair_constraints(src.gen_action(g), dst.gen_action(g));

    bool k_imposed = src.has_k_structure() && dst.has_k_structure() && src.k_degree() > 1;
    if (k_imposed)
        for (int l = 0; l < src.k_degree(); ++l) add_pair_constraints(src.k_action(l), dst.k_action(l));

    HomDim out;
    out.fp_dim = N - re.rank();
    int d = src.k_degree();
    if (d > 1 && (src.has_k_structure() && dst.has_k_structure())) {
        if (out.fp_dim % d != 0) throw std::logic_error("equivariant_hom_dim: k-dimension not integral");
        out.k_dim = out.fp_dim / d;
    } else {
        out.k_dim = out.fp_dim;
    }
    return out;
}

namespace {

// phi(g) as a linear map of the generator unknowns, built by walking the
// spanning-tree path from the identity:  C_{g s} = C_g + act(g) at block s.
fp::Mat symbolic_phi(const GModule& mod, uint32_t g) {
    const GroupTable& G = mod.group();
    int D = mod.dim();
    int N = int(G.num_gens()) * D;
    fp::Mat C(mod.p(), D, N);
    auto word = G.word(g);
    uint32_t e = 0;
    for (int letter : word) {
        const fp::Mat& a = mod.act(e);
        for (int r = 0; r < D; ++r)
            for (int c = 0; c < D; ++c) {
                uint8_t& slot = C.at(r, letter * D + c);
                slot = uint8_t((slot + a.at(r, c)) % mod.p());
            }
        e = G.step(e, size_t(letter));
    }
    return C;
}

void add_edge_constraints(const GModule& mod, fp::RowEchelon& re, uint32_t g, int letter) {
    const GroupTable& G = mod.group();
    int D = mod.dim(), p = mod.p();
    uint32_t h = G.step(g, size_t(letter));
    fp::Mat Cg = symbolic_phi(mod, g);
    fp::Mat Ch = symbolic_phi(mod, h);
    const fp::Mat& a = mod.act(g);
    fp::Vec row(Cg.cols);
    for (int r = 0; r < D; ++r) {
        for (int c = 0; c < Cg.cols; ++c) row[c] = uint8_t((Cg.at(r, c) + p - Ch.at(r, c)) % p);
        for (int c = 0; c < D; ++c) {
            uint8_t& slot = row[size_t(letter) * D + c];
            slot = uint8_t((slot + a.at(r, c)) % p);
        }
        re.add_row(row);
    }
}

// Propagates the concrete assignment over the whole Cayley graph; returns
// the first violated non-tree edge, or nullopt when kappa is a cocycle.
std::optional<std::pair<uint32_t, int>> verify_candidate(const GModule& mod, const fp::Vec& kappa) {
    const GroupTable& G = mod.group();
    int D = mod.dim(), p = mod.p();
    size_t ngens = G.num_gens();
    std::vector<uint8_t> values(G.order() * size_t(D), 0);
    for (uint32_t g = 0; g < G.order(); ++g) {
        const fp::Mat& a = mod.act(g);
        for (size_t l = 0; l < ngens; ++l) {
            uint32_t h = G.step(g, l);
            // act(g) * kappa_block(l)
            fp::Vec inc(D, 0);
            for (int r = 0; r < D; ++r) {
                int acc = 0;
                for (int c = 0; c < D; ++c) acc += a.at(r, c) * kappa[l * size_t(D) + c];
                inc[r] = uint8_t(acc % p);
            }
            uint8_t* vg = &values[g * size_t(D)];
            uint8_t* vh = &values[h * size_t(D)];
            if (h != 0 && G.parent(h) == g && size_t(G.parent_letter(h)) == l) {
                for (int r = 0; r < D; ++r) vh[r] = uint8_t((vg[r] + inc[r]) % p);
            } else {
                for (int r = 0; r < D; ++r)
                    if (uint8_t((vg[r] + inc[r]) % p) != vh[r]) return std::make_pair(g, int(l));
            }
        }
    }
    return std::nullopt;
}

} // namespace

H1Result h1_dim(const GModule& mod, uint64_t max_unknowns) {
    const GroupTable& G = mod.group();
    int D = mod.dim();
    size_t ngens = G.num_gens();
    uint64_t N = uint64_t(ngens) * D;
    if (N > max_unknowns) throw budget_exceeded("h1_dim: unknown count exceeds budget");

    H1Result res;
    fp::RowEchelon re(mod.p(), int(N));

    // seed constraints from the non-tree edges nearest the identity
    uint64_t seed_target = 6 * N + 64;
    uint64_t seeded = 0;
    for (uint32_t g = 0; g < G.order() && seeded < seed_target; ++g)
        for (size_t l = 0; l < ngens && seeded < seed_target; ++l) {
            uint32_t h = G.step(g, l);
            if (h != 0 && G.parent(h) == g && size_t(G.parent_letter(h)) == l) continue;
            add_edge_constraints(mod, re, g, int(l));
            ++seeded;
            res.constraint_rows += uint64_t(D);
        }

    // certify the kernel against every Cayley edge, refining as needed
    while (true) {
        ++res.refine_passes;
        auto kernel = re.kernel_basis();
        bool all_ok = true;
        for (const auto& kappa : kernel) {
            auto bad = verify_candidate(mod, kappa);
            if (bad) {
                add_edge_constraints(mod, re, bad->first, bad->second);
                res.constraint_rows += uint64_t(D);
                all_ok = false;
            }
        }
        if (all_ok) {
            res.z1_dim = int(kernel.size());
            break;
        }
        if (res.refine_passes > int(N) + 2)
            throw std::logic_error("h1_dim: refinement failed to converge");
    }

    res.b1_dim = D - mod.invariants_dim();
    res.fp_dim = res.z1_dim - res.b1_dim;
    int d = mod.k_degree();
    if (mod.has_k_structure() && d > 1) {
        if (res.fp_dim % d != 0) throw std::logic_error("h1_dim: k-dimension not integral");
        res.k_dim = res.fp_dim / d;
    } else {
        res.k_dim = res.fp_dim;
    }
    return res;
}

} // namespace sln
