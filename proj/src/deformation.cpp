#include "sln/deformation.hpp"

#include <unordered_map>

namespace sln {

LiftCount lift_classes(const LiftSetting& s, const Ring& target) {
    const GroupTable& gamma = *s.gamma;
    const Ring& k = gamma.ring();
    LiftCount out;

    if (&target == &k) {
        out.classes = 1; // only the representation itself reduces to itself mod (0)
        return out;
    }
    if (!target.is_square_zero())
        throw std::invalid_argument("lift_classes: target is not square-zero");
    if (&target.residue_field() != &k)
        throw std::invalid_argument("lift_classes: target residue field differs from k");

    ExtensionDesc ext = extension_make_gl(target, gamma);
    SplitDecision dec = splitting_decide(ext, *s.sylow);
    if (!dec.full_group_split.has_value())
        throw std::invalid_argument("lift_classes: subgroup is not Sylow, cannot transfer the verdict");
    if (!*dec.full_group_split) {
        out.obstructed = true;
        out.classes = 0;
        return out;
    }

    GModule M = module_make(ModuleKind::Full, gamma);
    out.h1_fp = h1_dim(M).fp_dim;
    size_t e = target.max_ideal_basis().size();
    out.classes = 1;
    for (size_t i = 0; i < e * size_t(out.h1_fp); ++i) out.classes *= uint64_t(k.p());
    return out;
}

std::vector<AuditRow> universal_property_audit(const LiftSetting& s,
                                               const std::vector<const Ring*>& targets) {
    const Ring& k = s.gamma->ring();
    std::vector<AuditRow> rows;
    for (const Ring* B : targets) {
        AuditRow row;
        row.target = B->name();
        row.lift_count = lift_classes(s, *B).classes;
        row.hom_count = hom_enumerate(k, *B).homs.size();
        row.match = row.lift_count == row.hom_count;
        rows.push_back(std::move(row));
    }
    return rows;
}

// --- section reconstruction --------------------------------------------------

SectionMap section_reconstruct(const Ring& R, const Ring& A, const GroupTable& G) {
    if (&A != &R.residue_field())
        throw std::invalid_argument("section_reconstruct: A must be the residue field of R");
    if (&G.ring() != &R) throw std::invalid_argument("section_reconstruct: G is not over R");
    int n = G.dim();
    if (G.order() != sl_order_formula(A.size(), n))
        throw std::invalid_argument("section_reconstruct: G does not project isomorphically onto SL_n(A)");

    // index the fibres: reduction is injective on G
    std::unordered_map<std::string, uint32_t> reduced_index;
    auto enc = [&](const Mat& m) {
        std::string s;
        s.reserve(m.e.size() * 4);
        for (RElem v : m.e) {
            s.push_back(char(v & 0xff));
            s.push_back(char((v >> 8) & 0xff));
            s.push_back(char((v >> 16) & 0xff));
            s.push_back(char((v >> 24) & 0xff));
        }
        return s;
    };
    for (uint32_t i = 0; i < G.order(); ++i) {
        auto key = enc(mat_residue(G.element(i)));
        if (!reduced_index.emplace(key, i).second)
            throw std::invalid_argument("section_reconstruct: reduction is not injective on G");
    }
    auto preimage = [&](const Mat& target) -> Mat {
        auto it = reduced_index.find(enc(target));
        if (it == reduced_index.end())
            throw std::logic_error("section_reconstruct: fibre over an elementary matrix is empty");
        return G.element(it->second);
    };

    SectionMap out;
    out.R = &R;
    out.A = &A;
    out.s_table.resize(A.size());
    out.lambda_table.resize(A.size());

    for (size_t xv = 0; xv < A.size(); ++xv) {
        RElem x = RElem(xv);
        Mat X = preimage(elementary(A, n, 1, n, x));
        // shape: constant diagonal u, the only off-diagonal entry at (1, n)
        RElem u = X.at(0, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool diag = (i == j);
                bool corner = (i == 0 && j == n - 1);
                RElem expect = diag ? u : R.zero();
                if (!diag && !corner && X.at(i, j) != expect)
                    throw std::logic_error("section_reconstruct: fibre element is not u*E_1n(s)");
                if (diag && X.at(i, j) != u)
                    throw std::logic_error("section_reconstruct: fibre element is not u*E_1n(s)");
            }
        // certify u = 1 through the commutator identity
        Mat a = preimage(elementary(A, n, 1, 2, x));
        Mat b = preimage(elementary(A, n, 2, n, A.one()));
        Mat comm = mat_mul(mat_mul(a, b), mat_mul(mat_inv(a), mat_inv(b)));
        if (!(comm == X))
            throw std::logic_error("section_reconstruct: commutator certificate failed");
        if (u != R.one())
            throw std::logic_error("section_reconstruct: unit factor is not 1 after certification");
        out.lambda_table[xv] = u;
        out.s_table[xv] = X.at(0, n - 1);
    }

    // ring-homomorphism checks for s, plus the group-level identities
    out.additive = true;
    out.multiplicative = true;
    out.section_of_pi = true;
    for (size_t xv = 0; xv < A.size(); ++xv) {
        if (R.residue(out.s_table[xv]) != RElem(xv)) out.section_of_pi = false;
        for (size_t yv = 0; yv < A.size(); ++yv) {
            RElem sx = out.s_table[xv], sy = out.s_table[yv];
            if (R.add(sx, sy) != out.s_table[A.add(RElem(xv), RElem(yv))]) out.additive = false;
            if (R.mul(sx, sy) != out.s_table[A.mul(RElem(xv), RElem(yv))]) out.multiplicative = false;
        }
    }
    // Steinberg-level checks inside G: products of preimages match preimages
    for (size_t xv = 0; xv < A.size(); ++xv)
        for (size_t yv = 0; yv < A.size(); ++yv) {
            RElem x = RElem(xv), y = RElem(yv);
            Mat px = preimage(elementary(A, n, 1, n, x));
            Mat py = preimage(elementary(A, n, 1, n, y));
            if (!(mat_mul(px, py) == preimage(elementary(A, n, 1, n, A.add(x, y))))) out.additive = false;
            Mat ax = preimage(elementary(A, n, 1, 2, x));
            Mat by = preimage(elementary(A, n, 2, n, y));
            Mat comm = mat_mul(mat_mul(ax, by), mat_mul(mat_inv(ax), mat_inv(by)));
            if (!(comm == preimage(elementary(A, n, 1, n, A.mul(x, y))))) out.multiplicative = false;
        }
    return out;
}

// --- kernel cocycles over k[t]/t^2 -------------------------------------------

namespace {

struct GenCocycle {
    std::vector<fp::Vec> letter_values; // c on slk's generators, module coords
    std::vector<fp::Vec> direct_defects; // from generators reducing to I or duplicates
};

// Writes each input generator as (I + t c) emb(gbar) and groups the values
// by slk's generator list.
GenCocycle split_generators(const std::vector<Mat>& gens, const GroupTable& slk, const GModule& mod) {
    const Ring& R = *gens.at(0).ring;
    const Ring& k = slk.ring();
    if (&R.residue_field() != &k || R.spec().kind != RingKind::SquareZeroExt)
        throw std::invalid_argument("kernel cocycle: generators must live over k[t]/t^2");
    int n = slk.dim();

    if (&R.sze_base() != &k)
        throw std::invalid_argument("kernel cocycle: base of the square-zero extension must be k");

    auto displacement = [&](const Mat& g, const Mat& emb_red) {
        Mat Q = mat_mul(g, mat_inv(emb_red));
        Mat c(k, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RElem base = R.sze_base_part(Q.at(i, j));
                RElem expect = (i == j) ? R.sze_base().one() : R.sze_base().zero();
                if (base != expect)
                    throw std::invalid_argument("kernel cocycle: generator is not I + t*c times a constant lift");
                c.at(i, j) = R.sze_t_part(Q.at(i, j));
            }
        return c;
    };

    GenCocycle out;
    out.letter_values.assign(slk.num_gens(), {});
    std::unordered_map<uint32_t, Mat> first_lift; // slk gen element index -> first lift
    std::vector<bool> assigned(slk.num_gens(), false);

    for (const Mat& g : gens) {
        Mat red = mat_residue(g);
        if (red.is_identity()) {
            out.direct_defects.push_back(mod.to_coords(displacement(g, Mat::identity(R, n))));
            continue;
        }
        // locate red among slk's generators
        size_t letter = SIZE_MAX;
        for (size_t l = 0; l < slk.num_gens(); ++l)
            if (slk.gens()[l] == red) { letter = l; break; }
        if (letter == SIZE_MAX)
            throw std::invalid_argument("kernel cocycle: a generator reduces outside slk's generator set");
        Mat emb_red = mat_lift_digits(R, red);
        Mat c = displacement(g, emb_red);
        if (!assigned[letter]) {
            assigned[letter] = true;
            out.letter_values[letter] = mod.to_coords(c);
            first_lift.emplace(uint32_t(letter), g);
        } else {
            // second lift of the same reduction: difference is a kernel element
            Mat diff = mat_mul(g, mat_inv(first_lift.at(uint32_t(letter))));
            out.direct_defects.push_back(mod.to_coords(displacement(diff, Mat::identity(R, n))));
        }
    }
    for (size_t l = 0; l < slk.num_gens(); ++l)
        if (!assigned[l]) throw std::invalid_argument("kernel cocycle: missing a lift for a quotient generator");
    return out;
}

struct Propagation {
    std::vector<fp::Vec> values; // c(g) per quotient element
    std::vector<fp::Vec> defects; // nonzero closure defects at non-tree edges
};

Propagation propagate_cocycle(const GroupTable& slk, const GModule& mod,
                              const std::vector<fp::Vec>& letter_values, bool collect_defects) {
    int D = mod.dim();
    int p = mod.p();
    Propagation out;
    out.values.assign(slk.order(), fp::Vec(size_t(D), 0));
    for (uint32_t g = 0; g < slk.order(); ++g) {
        const fp::Mat& a = mod.act(g);
        for (size_t l = 0; l < slk.num_gens(); ++l) {
            uint32_t h = slk.step(g, l);
            fp::Vec inc = fp::mul_vec(a, letter_values[l]);
            fp::vec_add_into(p, inc, out.values[g]);
            if (h != 0 && slk.parent(h) == g && size_t(slk.parent_letter(h)) == size_t(l)) {
                out.values[h] = std::move(inc);
            } else {
                fp::vec_sub_into(p, inc, out.values[h]);
                if (!fp::vec_is_zero(inc)) {
                    if (!collect_defects) {
                        out.defects.push_back(std::move(inc));
                        return out; // caller treats any defect as inconsistency
                    }
                    out.defects.push_back(std::move(inc));
                }
            }
        }
    }
    return out;
}

} // namespace

Mat find_conjugator(const std::vector<Mat>& G_gens, const GroupTable& slk, const GModule& M_full) {
    if (M_full.kind() != ModuleKind::Full || &M_full.group() != &slk)
        throw std::invalid_argument("find_conjugator: need the full matrix module over slk");
    const Ring& R = *G_gens.at(0).ring;
    int n = slk.dim();
    int p = M_full.p();

    GenCocycle gc = split_generators(G_gens, slk, M_full);
    for (const auto& dd : gc.direct_defects)
        if (!fp::vec_is_zero(dd))
            throw std::invalid_argument("find_conjugator: generators meet the kernel (not the iso case)");

    Propagation prop = propagate_cocycle(slk, M_full, gc.letter_values, /*collect_defects=*/false);
    if (!prop.defects.empty())
        throw std::invalid_argument("find_conjugator: displacement values do not extend to a cocycle");

    // solve c(s) = s Y s^-1 - Y over the generators
    int D = M_full.dim();
    fp::RowEchelon re(p, D, /*augmented=*/true);
    fp::Vec row(size_t(D), 0);
    for (size_t l = 0; l < slk.num_gens(); ++l) {
        uint32_t sidx = slk.index_of(slk.gens()[l]);
        const fp::Mat& a = M_full.act(sidx);
        for (int r = 0; r < D; ++r) {
            for (int c = 0; c < D; ++c) row[c] = uint8_t((a.at(r, c) + (r == c ? p - 1 : 0)) % p);
            re.add_row(row, gc.letter_values[l][r]);
        }
    }
    if (!re.consistent())
        throw std::logic_error("find_conjugator: coboundary system unsolvable (H^1 vanishing violated)");
    fp::Vec y = re.particular_solution();
    Mat Y = M_full.from_coords(y);

    // X = I + tY, and X ĝ X^-1 must equal the constant lift of each reduction
    Mat X = Mat::identity(R, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            X.at(i, j) = R.add(X.at(i, j), R.mul(R.sze_t(), R.lift_digits(Y.at(i, j))));
    Mat Xinv = mat_inv(X);
    for (const Mat& g : G_gens) {
        Mat conj = mat_mul(mat_mul(X, g), Xinv);
        if (!(conj == mat_lift_digits(R, mat_residue(g))))
            throw std::logic_error("find_conjugator: conjugation failed to normalize a generator");
    }
    return X;
}

TrichotomyResult trichotomy_classify(const std::vector<Mat>& G_gens, const GroupTable& slk,
                                     const GModule& M0) {
    if (M0.kind() != ModuleKind::TraceZero || &M0.group() != &slk)
        throw std::invalid_argument("trichotomy_classify: need the trace-zero module over slk");
    const Ring& k = slk.ring();
    if (k.res_degree() != 1) throw std::invalid_argument("trichotomy_classify: k must be a prime field");
    int n = slk.dim();
    int p = M0.p();
    int D = M0.dim();

    GenCocycle gc = split_generators(G_gens, slk, M0);
    Propagation prop = propagate_cocycle(slk, M0, gc.letter_values, /*collect_defects=*/true);

    // kernel subgroup = edge defects plus the orbit of the direct defects;
    // close the span under the action (the kernel is normal)
    fp::RowEchelon span(p, D);
    std::vector<fp::Vec> work;
    auto feed = [&](const fp::Vec& v) {
        if (span.add_row(v)) work.push_back(v);
    };
    for (const auto& v : gc.direct_defects) feed(v);
    for (const auto& v : prop.defects) feed(v);
    while (!work.empty() && span.rank() < D) {
        fp::Vec w = std::move(work.back());
        work.pop_back();
        for (size_t l = 0; l < slk.num_gens(); ++l) feed(fp::mul_vec(M0.gen_action(l), w));
    }

    TrichotomyResult out;
    out.defect_dim = span.rank();
    if (out.defect_dim == 0) {
        out.verdict = Trichotomy::Iso;
    } else if (out.defect_dim == D) {
        out.verdict = Trichotomy::Full;
    } else if (n % p == 0 && out.defect_dim == M0.k_degree() &&
               span.in_row_space(M0.to_coords(Mat::identity(k, n)))) {
        out.verdict = Trichotomy::ScalarExtension;
    } else {
        throw std::logic_error("trichotomy_classify: defect space is not 0, the scalar line, or all of M0");
    }
    return out;
}

Mat random_kernel_twist(const Ring& R, int n, Rng& rng) {
    if (R.spec().kind != RingKind::SquareZeroExt)
        throw std::invalid_argument("random_kernel_twist: ring must be k[t]/t^2");
    const Ring& k = R.residue_field();
    Mat X = Mat::identity(R, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            X.at(i, j) = R.add(X.at(i, j), R.mul(R.sze_t(), R.lift_digits(RElem(rng.below(k.size())))));
    return X;
}

} // namespace sln
