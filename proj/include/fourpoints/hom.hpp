// Hom spaces between presented modules as chain-map pairs (G, H) with
// G*A_M = A_N*H, reduced modulo the maps inducing zero; optional further
// quotient by maps factoring through free modules (stable Hom).  On top of
// this: isomorphism testing with witnesses, Ext^1 classes and extensions.
#ifndef FOURPOINTS_HOM_HPP
#define FOURPOINTS_HOM_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "fourpoints/modules.hpp"
#include "fourpoints/rng.hpp"

namespace fourpoints {

/// Chain map between presentations; the module hom is determined by G.
struct ModuleHom {
    GradedMap G;  // F0(M) -> F0(N)(shift)
    GradedMap H;  // F1(M) -> F1(N)(shift)
};

/// f2 ∘ f1 for composable homs (shifts add).
inline ModuleHom compose_homs(const ModuleHom& f2, const ModuleHom& f1)
{
    const int t = f1.G.tgt().gens.empty() || f2.G.src().gens.empty()
                      ? 0
                      : f2.G.src().gens[0] - f1.G.tgt().gens[0];
    // align the twist of f2 with the target of f1
    return {compose(f2.G.twist(t), f1.G), compose(f2.H.twist(t), f1.H)};
}

namespace detail {

/// Coefficient layout for a homogeneous degree-0 matrix F -> G(shift).
struct MapLayout {
    struct Slot {
        std::size_t row, col;  // (target gen, source gen)
        int deg;               // polynomial degree of the entry
        std::size_t offset, size;
    };
    std::vector<Slot> slots;
    std::size_t total = 0;

    MapLayout() = default;
    MapLayout(const RingId& ring, const FreeGraded& src, const FreeGraded& tgt)
    {
        for (std::size_t i = 0; i < tgt.count(); ++i)
            for (std::size_t j = 0; j < src.count(); ++j) {
                const int d = src.gens[j] - tgt.gens[i];
                if (d < 0) continue;
                const std::size_t n = ring_dim(ring, d);
                slots.push_back({i, j, d, total, n});
                total += n;
            }
    }

    std::vector<Fp> vectorize(const RingId& ring, const GradedMap& m) const
    {
        std::vector<Fp> v(total, Fp(0));
        for (const Slot& s : slots) {
            std::vector<Fp> c = coeff_vector(ring, m.entry(s.row, s.col), s.deg);
            for (std::size_t k = 0; k < s.size; ++k) v[s.offset + k] = c[k];
        }
        return v;
    }

    GradedMap materialize(const RingId& ring, const FreeGraded& src, const FreeGraded& tgt,
                          const std::vector<Fp>& v, std::size_t base = 0) const
    {
        std::vector<std::vector<Poly>> e(tgt.count(), std::vector<Poly>(src.count()));
        for (const Slot& s : slots) {
            std::vector<Monomial> basis = ring_basis(ring, s.deg);
            Poly f;
            for (std::size_t k = 0; k < s.size; ++k) f.add_term(basis[k], v[base + s.offset + k]);
            e[s.row][s.col] = f;
        }
        return GradedMap(src, tgt, std::move(e));
    }
};

} // namespace detail

/// Basis of Hom_{grR}(M, N(shift))_0, plain or stable.
class HomSpace {
public:
    HomSpace(const PresentedModule& M, const PresentedModule& N, int shift = 0, bool stable = false)
        : M_(M), N_(N), shift_(shift)
    {
        const RingId ring = M.ring();
        if (ring != N.ring()) throw std::invalid_argument("HomSpace: mixed rings");
        const FreeGraded f0m = M.f0(), f1m = M.f1();
        const FreeGraded f0n = N.f0().twist(shift), f1n = N.f1().twist(shift);
        const GradedMap an = N.presentation.twist(shift);

        gl_ = detail::MapLayout(ring, f0m, f0n);
        detail::MapLayout hl(ring, f1m, f1n);
        hl_ = hl;

        // constraint rows: coefficients of G*A_M - A_N*H, entry by entry
        struct RowBlock { std::size_t i, j, offset, size; int deg; };
        std::vector<RowBlock> rows;
        std::size_t nrows = 0;
        for (std::size_t i = 0; i < f0n.count(); ++i)
            for (std::size_t j = 0; j < f1m.count(); ++j) {
                const int d = f1m.gens[j] - f0n.gens[i];
                if (d < 0) continue;
                rows.push_back({i, j, nrows, ring_dim(ring, d), d});
                nrows += ring_dim(ring, d);
            }

        Mat sys(nrows, gl_.total + hl_.total);
        // G-unknowns: (i, j0) slot entry m contributes m * A_M[j0][j] to row (i, j)
        for (const auto& s : gl_.slots) {
            std::vector<Monomial> basis = ring_basis(ring, s.deg);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const std::size_t c = s.offset + k;
                for (const RowBlock& rb : rows) {
                    if (rb.i != s.row) continue;
                    const Poly& a = M.presentation.entry(s.col, rb.j);
                    if (a.is_zero()) continue;
                    Poly f = normal_form(ring, Poly::term(Fp(1), basis[k]) * a);
                    std::vector<Fp> cv = coeff_vector(ring, f, rb.deg);
                    for (std::size_t r = 0; r < rb.size; ++r) sys(rb.offset + r, c) += cv[r];
                }
            }
        }
        // H-unknowns: (i0, j) slot entry m contributes -A_N[i][i0] * m to rows (i, j)
        for (const auto& s : hl_.slots) {
            std::vector<Monomial> basis = ring_basis(ring, s.deg);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const std::size_t c = gl_.total + s.offset + k;
                for (const RowBlock& rb : rows) {
                    if (rb.j != s.col) continue;
                    const Poly& a = an.entry(rb.i, s.row);
                    if (a.is_zero()) continue;
                    Poly f = normal_form(ring, a * Poly::term(Fp(1), basis[k]));
                    std::vector<Fp> cv = coeff_vector(ring, f, rb.deg);
                    for (std::size_t r = 0; r < rb.size; ++r) sys(rb.offset + r, c) -= cv[r];
                }
            }
        }

        Mat sol = kernel_basis(sys);

        // maps inducing the zero hom: G = A_N * K
        detail::MapLayout kl(ring, f0m, f1n);
        for (const auto& s : kl.slots) {
            std::vector<Monomial> basis = ring_basis(ring, s.deg);
            for (const Monomial& m : basis) {
                std::vector<Fp> gvec(gl_.total, Fp(0));
                bool nonzero = false;
                for (const auto& gs : gl_.slots) {
                    if (gs.col != s.col) continue;
                    const Poly& a = an.entry(gs.row, s.row);
                    if (a.is_zero()) continue;
                    Poly f = normal_form(ring, a * Poly::term(Fp(1), m));
                    std::vector<Fp> cv = coeff_vector(ring, f, gs.deg);
                    for (std::size_t k = 0; k < gs.size; ++k) {
                        gvec[gs.offset + k] += cv[k];
                        if (!gvec[gs.offset + k].is_zero()) nonzero = true;
                    }
                }
                if (nonzero) modulo_.push_back(std::move(gvec));
            }
        }

        // stable quotient: maps M -> F0(N) composed with the cover, i.e.
        // phi with phi * A_M = 0
        if (stable) {
            Mat fsys(nrows, gl_.total);
            for (std::size_t c = 0; c < gl_.total; ++c)
                for (std::size_t r = 0; r < nrows; ++r) fsys(r, c) = sys(r, c);
            // reuse rows for the strict condition phi*A_M = 0 (no H correction)
            Mat fsol = kernel_basis(fsys);
            for (std::size_t j = 0; j < fsol.cols(); ++j) modulo_.push_back(fsol.column(j));
        }

        Subspace span(gl_.total);
        for (const auto& v : modulo_) span.insert(v);
        for (std::size_t j = 0; j < sol.cols(); ++j) {
            std::vector<Fp> full = sol.column(j);
            std::vector<Fp> gvec(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(gl_.total));
            if (!span.insert(gvec)) continue;
            basis_vecs_.push_back(full);
            basis_.push_back({gl_.materialize(ring, f0m, f0n, full, 0),
                              hl_.materialize(ring, f1m, f1n, full, gl_.total)});
        }
        f0m_ = f0m;
        f0n_ = f0n;
        f1m_ = f1m;
        f1n_ = f1n;
    }

    std::size_t dim() const { return basis_.size(); }
    const ModuleHom& basis(std::size_t k) const { return basis_[k]; }
    const PresentedModule& source() const { return M_; }
    const PresentedModule& target() const { return N_; }
    int shift() const { return shift_; }

    ModuleHom combination(const std::vector<Fp>& c) const
    {
        if (c.size() != basis_.size()) throw std::invalid_argument("HomSpace::combination: length mismatch");
        std::vector<Fp> acc(gl_.total + hl_.total, Fp(0));
        for (std::size_t k = 0; k < c.size(); ++k)
            for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += c[k] * basis_vecs_[k][t];
        const RingId ring = M_.ring();
        return {gl_.materialize(ring, f0m_, f0n_, acc, 0),
                hl_.materialize(ring, f1m_, f1n_, acc, gl_.total)};
    }

    ModuleHom random_element(Rng& rng) const
    {
        std::vector<Fp> c(basis_.size());
        for (Fp& x : c) x = rng.field_element();
        return combination(c);
    }

    /// Coordinates of a hom in this basis, modulo the zero-inducing maps.
    std::vector<Fp> coords(const GradedMap& G) const
    {
        std::vector<Fp> v = gl_.vectorize(M_.ring(), G);
        Mat sys(gl_.total, modulo_.size() + basis_.size());
        for (std::size_t j = 0; j < modulo_.size(); ++j)
            for (std::size_t i = 0; i < gl_.total; ++i) sys(i, j) = modulo_[j][i];
        for (std::size_t j = 0; j < basis_.size(); ++j)
            for (std::size_t i = 0; i < gl_.total; ++i) sys(i, modulo_.size() + j) = basis_vecs_[j][i];
        auto x = solve(sys, v);
        if (!x.has_value()) throw std::runtime_error("HomSpace::coords: map is not in the Hom space");
        return std::vector<Fp>(x->begin() + static_cast<std::ptrdiff_t>(modulo_.size()), x->end());
    }

private:
    PresentedModule M_, N_;
    int shift_;
    detail::MapLayout gl_, hl_;
    FreeGraded f0m_, f0n_, f1m_, f1n_;
    std::vector<std::vector<Fp>> modulo_;
    std::vector<std::vector<Fp>> basis_vecs_;
    std::vector<ModuleHom> basis_;
};

inline HomSpace hom_graded(const PresentedModule& M, const PresentedModule& N, int shift = 0)
{
    return HomSpace(M, N, shift, false);
}

inline HomSpace stable_hom(const PresentedModule& M, const PresentedModule& N, int shift = 0)
{
    return HomSpace(M, N, shift, true);
}

// ---------------------------------------------------------------------------
// Isomorphism testing

struct IsoResult {
    bool iso = false;
    std::optional<ModuleHom> witness;
    explicit operator bool() const { return iso; }
};

/// Induced scalar matrix of a hom on degree-d pieces.
inline Mat induced_piece_map(const ModuleHom& f, const ModulePiece& from, const ModulePiece& to)
{
    Mat block = f.G.degree_block(from.degree());
    Mat out(to.dim(), from.dim());
    for (std::size_t k = 0; k < from.dim(); ++k) {
        std::vector<Fp> img = block.apply(from.lift(k));
        std::vector<Fp> q = to.coords(img);
        for (std::size_t i = 0; i < to.dim(); ++i) out(i, k) = q[i];
    }
    return out;
}

/// Degree-0 isomorphism test: a hom surjective in every degree of the window
/// together with equal Hilbert functions certifies a degreewise bijection.
/// Seeded random elements of the Hom space are tried first, then a
/// deterministic sweep, before returning a negative.
inline IsoResult iso_test(const PresentedModule& M, const PresentedModule& N,
                          std::uint64_t seed = 0, int samples = 8,
                          std::optional<int> window_bound = std::nullopt)
{
    PresentedModule m = minimal_presentation(M);
    PresentedModule n = minimal_presentation(N);
    if (m.f0().count() == 0 && n.f0().count() == 0) return {true, ModuleHom{}};
    if (m.f0().count() == 0 || n.f0().count() == 0) return {false, std::nullopt};

    // minimal generator degrees are an isomorphism invariant
    std::vector<int> gm = m.f0().gens, gn = n.f0().gens;
    std::sort(gm.begin(), gm.end());
    std::sort(gn.begin(), gn.end());
    if (gm != gn) return {false, std::nullopt};

    const int dlo = m.f0().min_gen();
    int top = std::max(m.f0().max_gen(), n.f0().max_gen());
    if (m.f1().count()) top = std::max(top, m.f1().max_gen());
    if (n.f1().count()) top = std::max(top, n.f1().max_gen());
    const int dhi = window_bound.value_or(top + 3);

    std::vector<ModulePiece> pm, pn;
    for (int d = dlo; d <= dhi; ++d) {
        pm.emplace_back(m, d);
        pn.emplace_back(n, d);
        if (pm.back().dim() != pn.back().dim()) return {false, std::nullopt};
    }

    HomSpace hom(m, n, 0, false);
    if (hom.dim() == 0) return {false, std::nullopt};

    auto try_hom = [&](const ModuleHom& f) -> bool {
        for (std::size_t k = 0; k < pm.size(); ++k) {
            if (pm[k].dim() == 0) continue;
            Mat mat = induced_piece_map(f, pm[k], pn[k]);
            if (rank(mat) != pn[k].dim()) return false;
        }
        return true;
    };

    Rng rng(seed ^ 0x15f0u);
    for (int s = 0; s < samples; ++s) {
        ModuleHom f = hom.random_element(rng);
        if (try_hom(f)) return {true, f};
    }
    // deterministic fallback: basis elements, then pairwise sums
    for (std::size_t a = 0; a < hom.dim(); ++a) {
        std::vector<Fp> c(hom.dim(), Fp(0));
        c[a] = Fp(1);
        ModuleHom f = hom.combination(c);
        if (try_hom(f)) return {true, f};
    }
    for (std::size_t a = 0; a < hom.dim(); ++a)
        for (std::size_t b = a + 1; b < hom.dim(); ++b) {
            std::vector<Fp> c(hom.dim(), Fp(0));
            c[a] = Fp(1);
            c[b] = Fp(1);
            ModuleHom f = hom.combination(c);
            if (try_hom(f)) return {true, f};
        }
    return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// Ext^1 and extensions

/// Multiplication by a homogeneous poly as a matrix between module pieces.
inline Mat piece_mult(const PresentedModule& M, const ModulePiece& from, const ModulePiece& to,
                      const Poly& f)
{
    Mat out(to.dim(), from.dim());
    if (f.is_zero()) return out;
    const FreeGraded& F0 = M.f0();
    for (std::size_t k = 0; k < from.dim(); ++k) {
        FreeColumn col = column_from_coords(F0, from.lift(k), from.degree());
        for (Poly& c : col) c = normal_form(M.ring(), f * c);
        std::vector<Fp> q = to.coords(column_coords(F0, col, to.degree()));
        for (std::size_t i = 0; i < to.dim(); ++i) out(i, k) = q[i];
    }
    return out;
}

/// Basis of Ext^1_{grR}(Z, X)_0, each class given as a lifted cocycle
/// xi: F1(Z) -> F0(X) ready to sit in a block presentation.
inline std::vector<GradedMap> ext1_basis(const PresentedModule& Z, const PresentedModule& X)
{
    PresentedModule z = minimal_presentation(Z);
    Resolution res = minimal_resolution(z, 2);
    const GradedMap& A = res.maps[0];  // F1 -> F0
    const GradedMap& B = res.maps[1];  // F2 -> F1

    PresentedModule x = minimal_presentation(X);
    const FreeGraded& f1 = A.src();
    const FreeGraded& f0 = A.tgt();
    const FreeGraded& f2 = B.src();

    // unknowns: for each generator j of F1(Z), a vector in X_{deg j}
    std::vector<ModulePiece> val_pieces;
    std::vector<std::size_t> offset(f1.count() + 1, 0);
    for (std::size_t j = 0; j < f1.count(); ++j) {
        val_pieces.emplace_back(x, f1.gens[j]);
        offset[j + 1] = offset[j] + val_pieces[j].dim();
    }
    const std::size_t nunk = offset[f1.count()];

    // cocycle condition: composition with B vanishes in X
    std::vector<ModulePiece> tgt_pieces;
    std::vector<std::size_t> roffset(f2.count() + 1, 0);
    for (std::size_t l = 0; l < f2.count(); ++l) {
        tgt_pieces.emplace_back(x, f2.gens[l]);
        roffset[l + 1] = roffset[l] + tgt_pieces[l].dim();
    }
    Mat sys(roffset[f2.count()], nunk);
    for (std::size_t l = 0; l < f2.count(); ++l)
        for (std::size_t j = 0; j < f1.count(); ++j) {
            const Poly& b = B.entry(j, l);
            if (b.is_zero()) continue;
            Mat mul = piece_mult(x, val_pieces[j], tgt_pieces[l], b);
            for (std::size_t r = 0; r < mul.rows(); ++r)
                for (std::size_t c = 0; c < mul.cols(); ++c) sys(roffset[l] + r, offset[j] + c) += mul(r, c);
        }
    Mat cocycles = kernel_basis(sys);

    // coboundaries: psi ∘ A for psi: F0(Z) -> X
    Subspace span(nunk);
    for (std::size_t i = 0; i < f0.count(); ++i) {
        ModulePiece pi(x, f0.gens[i]);
        for (std::size_t k = 0; k < pi.dim(); ++k) {
            std::vector<Fp> vec(nunk, Fp(0));
            for (std::size_t j = 0; j < f1.count(); ++j) {
                const Poly& a = A.entry(i, j);
                if (a.is_zero()) continue;
                Mat mul = piece_mult(x, pi, val_pieces[j], a);
                for (std::size_t r = 0; r < mul.rows(); ++r) vec[offset[j] + r] += mul(r, k);
            }
            span.insert(vec);
        }
    }

    std::vector<GradedMap> out;
    for (std::size_t c = 0; c < cocycles.cols(); ++c) {
        std::vector<Fp> v = cocycles.column(c);
        if (!span.insert(v)) continue;
        // lift the class to a map F1(Z) -> F0(X)
        std::vector<std::vector<Poly>> e(x.f0().count(), std::vector<Poly>(f1.count()));
        for (std::size_t j = 0; j < f1.count(); ++j) {
            std::vector<Fp> q(v.begin() + static_cast<std::ptrdiff_t>(offset[j]),
                              v.begin() + static_cast<std::ptrdiff_t>(offset[j + 1]));
            FreeColumn col = column_from_coords(x.f0(), val_pieces[j].lift_coords(q), f1.gens[j]);
            for (std::size_t i = 0; i < x.f0().count(); ++i) e[i][j] = col[i];
        }
        out.push_back(GradedMap(f1, x.f0(), std::move(e)));
    }
    return out;
}

inline std::size_t ext1_dim(const PresentedModule& Z, const PresentedModule& X)
{
    return ext1_basis(Z, X).size();
}

/// Middle term of the extension of Z by X along the lifted cocycle xi,
/// presented by the block matrix [[A_X, xi], [0, A_Z]].
inline PresentedModule extension_module(const PresentedModule& Z, const PresentedModule& X,
                                        const GradedMap& xi)
{
    PresentedModule z = minimal_presentation(Z);
    PresentedModule x = minimal_presentation(X);
    if (!(xi.src() == z.f1()) || !(xi.tgt() == x.f0()))
        throw std::invalid_argument("extension_module: cocycle has the wrong bidegree");
    const std::size_t r0 = x.f0().count(), r1 = z.f0().count();
    const std::size_t c0 = x.f1().count(), c1 = z.f1().count();
    FreeGraded F0{x.ring(), x.f0().gens};
    F0.gens.insert(F0.gens.end(), z.f0().gens.begin(), z.f0().gens.end());
    FreeGraded F1{x.ring(), x.f1().gens};
    F1.gens.insert(F1.gens.end(), z.f1().gens.begin(), z.f1().gens.end());
    std::vector<std::vector<Poly>> e(r0 + r1, std::vector<Poly>(c0 + c1));
    for (std::size_t i = 0; i < r0; ++i)
        for (std::size_t j = 0; j < c0; ++j) e[i][j] = x.presentation.entry(i, j);
    for (std::size_t i = 0; i < r0; ++i)
        for (std::size_t j = 0; j < c1; ++j) e[i][c0 + j] = xi.entry(i, j);
    for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t j = 0; j < c1; ++j) e[r0 + i][c0 + j] = z.presentation.entry(i, j);
    return {GradedMap(std::move(F1), std::move(F0), std::move(e))};
}

/// Direct sum of presented modules.
inline PresentedModule direct_sum(const PresentedModule& A, const PresentedModule& B)
{
    return extension_module(B, A, GradedMap::zero(minimal_presentation(B).f1(),
                                                  minimal_presentation(A).f0()));
}

} // namespace fourpoints

#endif
