#include "sln/cohomology.hpp"

namespace sln {

ModuleKind ExtensionDesc::kernel_kind() const {
    switch (variant) {
        case ExtVariant::SlFull: return ModuleKind::TraceZero;
        case ExtVariant::ScalarQuotient: return ModuleKind::TraceZeroModScalar;
        case ExtVariant::GlSquareZero: return ModuleKind::FullTensorMaxIdeal;
    }
    throw std::logic_error("unreachable");
}

Mat ExtensionDesc::sigma0(const Mat& gbar) const {
    if (gbar.ring != k) throw std::invalid_argument("sigma0: matrix is not over the residue field");
    Mat lifted(*big, gbar.n);
    for (size_t i = 0; i < gbar.e.size(); ++i)
        lifted.e[i] = (lift_mode == LiftMode::Teichmuller && variant != ExtVariant::GlSquareZero)
                          ? big->teichmuller(gbar.e[i])
                          : big->lift_digits(gbar.e[i]);
    if (variant == ExtVariant::GlSquareZero) return lifted; // GL target: no repair
    RElem det = mat_det(lifted);
    if (det != big->one()) {
        RElem fix = big->inv(det);
        for (int j = 0; j < lifted.n; ++j) lifted.at(0, j) = big->mul(fix, lifted.at(0, j));
    }
    return lifted;
}

Mat ExtensionDesc::canonicalize(const Mat& X) const {
    if (variant != ExtVariant::ScalarQuotient) return X;
    // first unit entry in row-major order discriminates the q coset reps
    int pos = -1;
    for (int i = 0; i < X.n * X.n; ++i)
        if (big->is_unit(X.e[i])) { pos = i; break; }
    if (pos < 0) throw std::logic_error("canonicalize: no unit entry in an invertible matrix");
    Mat best = X;
    RElem best_val = X.e[pos];
    long p = big->p();
    for (size_t kk = 1; kk < k->size(); ++kk) {
        RElem scalar = big->add(big->one(), big->mul(big->from_int(p), big->lift_digits(RElem(kk))));
        Mat cand = mat_scale(scalar, X);
        if (cand.e[pos] < best_val) {
            best_val = cand.e[pos];
            best = std::move(cand);
        }
    }
    return best;
}

ExtensionDesc extension_make(const Ring& k, int n, ExtVariant variant, const GroupTable& quotient,
                             LiftMode mode) {
    if (variant == ExtVariant::GlSquareZero)
        throw std::invalid_argument("extension_make: use extension_make_gl for square-zero targets");
    if (!k.is_field()) throw std::invalid_argument("extension_make: k must be a field");
    if (variant == ExtVariant::ScalarQuotient && n % k.p() != 0)
        throw std::invalid_argument("extension_make: scalar quotient requires p | n");
    if (&quotient.ring() != &k || quotient.dim() != n)
        throw std::invalid_argument("extension_make: quotient table mismatch");

    ExtensionDesc ext;
    ext.variant = variant;
    ext.k = &k;
    ext.n = n;
    ext.quotient = &quotient;
    ext.lift_mode = mode;
    RingSpec w2;
    if (k.spec().kind == RingKind::Zpm)
        w2 = RingSpec::zpm(k.p(), 2);
    else
        w2 = RingSpec::galois(k.p(), 2, k.spec().d, k.spec().f);
    ext.big = &ring_cache(w2);
    return ext;
}

ExtensionDesc extension_make_gl(const Ring& target, const GroupTable& quotient) {
    if (!target.is_square_zero()) throw std::invalid_argument("extension_make_gl: target is not square-zero");
    const Ring& k = target.residue_field();
    if (&quotient.ring() != &k) throw std::invalid_argument("extension_make_gl: quotient/residue mismatch");
    ExtensionDesc ext;
    ext.variant = ExtVariant::GlSquareZero;
    ext.k = &k;
    ext.n = quotient.dim();
    ext.quotient = &quotient;
    ext.lift_mode = LiftMode::Digit;
    ext.big = &target;
    return ext;
}

GModule kernel_module(const ExtensionDesc& ext, const GroupTable& subgroup) {
    return module_make(ext.kernel_kind(), subgroup,
                       ext.variant == ExtVariant::GlSquareZero ? ext.big : nullptr);
}

namespace {

// Extracts kernel coordinates of a big-group element X that reduces to the
// identity: the layer matrix of (X - I)/p for the W/p^2 variants (mod
// scalars for ScalarQuotient), the max-ideal digits of X - I for GL targets.
fp::Vec kernel_coords(const ExtensionDesc& ext, const GModule& mod, const Mat& X) {
    const Ring& big = *ext.big;
    int n = X.n;
    if (ext.variant == ExtVariant::GlSquareZero)
        return mod.to_coords(mat_sub(X, Mat::identity(big, n)));
    if (!mat_residue(X).is_identity())
        throw std::logic_error("kernel_coords: element is not in the kernel");
    Mat layer(ext.k ? *ext.k : big.residue_field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RElem delta = (i == j) ? big.sub(X.at(i, j), big.one()) : X.at(i, j);
            layer.at(i, j) = big.div_p_residue(delta);
        }
    return mod.to_coords(layer);
}

// Kernel element from coordinates: I + p*lift(layer) (SL variants) or
// I + U (GL variant).
Mat kernel_embed(const ExtensionDesc& ext, const GModule& mod, const fp::Vec& coords) {
    const Ring& big = *ext.big;
    int n = ext.n;
    if (ext.variant == ExtVariant::GlSquareZero)
        return mat_add(Mat::identity(big, n), mod.from_coords(coords));
    Mat layer = mod.from_coords(coords);
    Mat out = Mat::identity(big, n);
    RElem p = big.from_int(big.p());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = big.add(out.at(i, j), big.mul(p, big.lift_digits(layer.at(i, j))));
    return out;
}

} // namespace

fp::Vec cocycle_value(const ExtensionDesc& ext, const GModule& kernel_mod, const Mat& g, const Mat& h) {
    Mat gh = mat_mul(g, h);
    Mat X = mat_mul(mat_mul(ext.sigma0(g), ext.sigma0(h)), mat_inv(ext.sigma0(gh)));
    return kernel_coords(ext, kernel_mod, X);
}

SplitDecision splitting_decide(const ExtensionDesc& ext, const GroupTable& subgroup) {
    if (&subgroup.ring() != ext.k || subgroup.dim() != ext.n)
        throw std::invalid_argument("splitting_decide: subgroup is not inside the quotient");
    long p = ext.k->p();

    GModule mod = kernel_module(ext, subgroup);
    int D = mod.dim();
    uint32_t H = uint32_t(subgroup.order());
    size_t ngens = subgroup.num_gens();

    // precompute lifts and their inverses
    std::vector<Mat> L(H), Linv(H);
    for (uint32_t i = 0; i < H; ++i) {
        L[i] = ext.sigma0(subgroup.element(i));
        Linv[i] = mat_inv(L[i]);
    }

    // unknowns: phi(e) in the kernel module per subgroup element;
    // equations over the pairs (g, s) for generators s:
    //   act(g) phi(s) - phi(gs) + phi(g) = c(g, s)
    int N = int(H) * D;
    fp::RowEchelon re(int(p), N, /*augmented=*/true);
    fp::Vec row(size_t(N), 0);
    std::vector<uint32_t> gen_idx(ngens);
    for (size_t s = 0; s < ngens; ++s) {
        gen_idx[s] = subgroup.index_of(subgroup.gens()[s]);
        if (gen_idx[s] == GroupTable::npos) throw std::logic_error("splitting_decide: generator missing");
    }

    for (uint32_t g = 0; g < H; ++g) {
        const fp::Mat& a = mod.act(g);
        for (size_t s = 0; s < ngens; ++s) {
            uint32_t gs = subgroup.step(g, s);
            fp::Vec c = kernel_coords(ext, mod, mat_mul(mat_mul(L[g], L[gen_idx[s]]), Linv[gs]));
            for (int r = 0; r < D; ++r) {
                std::fill(row.begin(), row.end(), 0);
                for (int cc = 0; cc < D; ++cc) row[size_t(gen_idx[s]) * D + cc] = a.at(r, cc);
                auto bump = [&](size_t slot, int delta) {
                    row[slot] = uint8_t(((row[slot] + delta) % p + p) % p);
                };
                bump(size_t(gs) * D + r, -1);
                bump(size_t(g) * D + r, +1);
                re.add_row(row, c[r]);
            }
        }
    }

    SplitDecision out;
    out.rank = re.rank();
    out.subgroup_is_full = subgroup.order() == ext.quotient->order();
    uint64_t ppart = 1;
    uint64_t qorder = ext.quotient->order();
    while (qorder % uint64_t(p) == 0) {
        ppart *= uint64_t(p);
        qorder /= uint64_t(p);
    }
    out.gaschutz_applicable = subgroup.order() == ppart;

    if (!re.consistent()) {
        out.split = false;
        out.inconsistent = true;
        if (out.subgroup_is_full || out.gaschutz_applicable) out.full_group_split = false;
        return out;
    }

    // build the corrected section sigma(g) = eps(-phi(g)) sigma0(g) and
    // verify it is homomorphic on every pair
    fp::Vec phi = re.particular_solution();
    out.section.resize(H);
    for (uint32_t i = 0; i < H; ++i) {
        fp::Vec coords(phi.begin() + size_t(i) * D, phi.begin() + size_t(i + 1) * D);
        for (auto& cc : coords) cc = uint8_t((p - cc) % p);
        out.section[i] = mat_mul(kernel_embed(ext, mod, coords), L[i]);
    }
    for (uint32_t i = 0; i < H; ++i) {
        if (!(mat_residue(out.section[i]) == subgroup.element(i)))
            throw std::logic_error("splitting_decide: section does not reduce to the identity map");
        for (uint32_t j = 0; j < H; ++j) {
            Mat prod = mat_mul(out.section[i], out.section[j]);
            Mat expect = out.section[subgroup.mul(i, j)];
            if (ext.variant == ExtVariant::ScalarQuotient) {
                prod = ext.canonicalize(prod);
                expect = ext.canonicalize(expect);
            }
            if (!(prod == expect))
                throw std::logic_error("splitting_decide: solved section failed pair verification");
            ++out.pairs_verified;
        }
    }
    out.split = true;
    if (out.subgroup_is_full || out.gaschutz_applicable) out.full_group_split = true;
    return out;
}

} // namespace sln
