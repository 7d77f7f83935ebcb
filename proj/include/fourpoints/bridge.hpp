// The tilting functor made concrete: E(M) assembles the stable Hom spaces
// from M into the point modules and into k^st into a D~4 representation, with
// arrows given by postcomposition with the canonical quotients L_i -> k^st.
// Also: the tau-exchange check, the preprojective-algebra dimension tables,
// and the orthogonality of the tilting summands.
#ifndef FOURPOINTS_BRIDGE_HPP
#define FOURPOINTS_BRIDGE_HPP

#include <array>
#include <string>
#include <vector>

#include "fourpoints/mf.hpp"
#include "fourpoints/quiver_classify.hpp"

namespace fourpoints {

/// The five tilting summands with the arrow maps fixed once.
struct TiltingData {
    std::array<PresentedModule, 4> L;  // point modules, minimal presentations
    PresentedModule kst;               // MCM approximation of k
    PresentedModule k;                 // the residue field itself
    std::array<ModuleHom, 4> q;        // stable generators of Hom(L_i, k^st)

    static const TiltingData& instance()
    {
        static const TiltingData data = make();
        return data;
    }

private:
    static TiltingData make()
    {
        TiltingData d{{point_module(1), point_module(2), point_module(3), point_module(4)},
                      minimal_presentation(stabilize_k()),
                      k_module(),
                      {}};
        for (int i = 0; i < 4; ++i) {
            HomSpace h = stable_hom(d.L[static_cast<std::size_t>(i)], d.kst);
            if (h.dim() != 1)
                throw std::logic_error("TiltingData: expected a one-dimensional arrow space, got " +
                                       std::to_string(h.dim()));
            d.q[static_cast<std::size_t>(i)] = h.basis(0);
        }
        return d;
    }
};

/// E(M) for an MCM module without free summands: vertex spaces are the
/// stable Hom spaces into the tilting summands, arrows postcompose with the
/// quotients onto k^st.
inline Rep apply_E(const PresentedModule& M)
{
    const TiltingData& T = TiltingData::instance();
    PresentedModule m = minimal_presentation(M);

    HomSpace v0 = stable_hom(m, T.kst);
    std::array<HomSpace, 4> vi = {stable_hom(m, T.L[0]), stable_hom(m, T.L[1]),
                                  stable_hom(m, T.L[2]), stable_hom(m, T.L[3])};

    Rep rep(v0.dim(), {vi[0].dim(), vi[1].dim(), vi[2].dim(), vi[3].dim()});
    for (int i = 0; i < 4; ++i) {
        Mat arrows(v0.dim(), vi[static_cast<std::size_t>(i)].dim());
        for (std::size_t k = 0; k < vi[static_cast<std::size_t>(i)].dim(); ++k) {
            ModuleHom comp = compose_homs(T.q[static_cast<std::size_t>(i)],
                                          vi[static_cast<std::size_t>(i)].basis(k));
            std::vector<Fp> c = v0.coords(comp.G);
            for (std::size_t r = 0; r < v0.dim(); ++r) arrows(r, k) = c[r];
        }
        rep.maps[static_cast<std::size_t>(i)] = arrows;
    }
    return rep;
}

/// E(tau M) versus tau^{-1} E(M).
inline bool tau_exchange_check(const PresentedModule& M, std::uint64_t seed = 0)
{
    Rep lhs = apply_E(tau_module(M));
    Rep rhs = tau_inv_rep(apply_E(M));
    return iso_rep(lhs, rhs, seed).iso;
}

// ---------------------------------------------------------------------------
// Preprojective dimension tables

/// dim Ext^i_{grR}(A, B(-i))_0 for i = 0..imax, from a minimal resolution of
/// A and the Hom complex into B.
inline std::vector<long> ext_diagonal_dims(const PresentedModule& A, const PresentedModule& B,
                                           int imax)
{
    Resolution res = minimal_resolution(A, imax + 1);
    PresentedModule b = minimal_presentation(B);

    // Hom(F_j, B(-i))_0 = sum of pieces B_{g - i} over generators g of F_j
    auto hom_dim = [&](int j, int tw) {
        const FreeGraded& F = res.step(static_cast<std::size_t>(j));
        std::size_t n = 0;
        for (int g : F.gens) n += piece_dim(b, g + tw);
        return n;
    };
    // matrix of precomposition with d_{j+1}: Hom(F_j, B(tw)) -> Hom(F_{j+1}, B(tw))
    auto diff_rank = [&](int j, int tw) -> std::size_t {
        const GradedMap& d = res.maps[static_cast<std::size_t>(j)];  // F_{j+1} -> F_j
        const FreeGraded& Fj = d.tgt();
        const FreeGraded& Fj1 = d.src();
        std::vector<ModulePiece> src_pieces, tgt_pieces;
        std::vector<std::size_t> soff(Fj.count() + 1, 0), toff(Fj1.count() + 1, 0);
        for (std::size_t g = 0; g < Fj.count(); ++g) {
            src_pieces.emplace_back(b, Fj.gens[g] + tw);
            soff[g + 1] = soff[g] + src_pieces[g].dim();
        }
        for (std::size_t l = 0; l < Fj1.count(); ++l) {
            tgt_pieces.emplace_back(b, Fj1.gens[l] + tw);
            toff[l + 1] = toff[l] + tgt_pieces[l].dim();
        }
        Mat D(toff[Fj1.count()], soff[Fj.count()]);
        for (std::size_t l = 0; l < Fj1.count(); ++l)
            for (std::size_t g = 0; g < Fj.count(); ++g) {
                const Poly& e = d.entry(g, l);
                if (e.is_zero()) continue;
                Mat mul = piece_mult(b, src_pieces[g], tgt_pieces[l], e);
                for (std::size_t r = 0; r < mul.rows(); ++r)
                    for (std::size_t c = 0; c < mul.cols(); ++c) D(toff[l] + r, soff[g] + c) += mul(r, c);
            }
        return rank(D);
    };

    std::vector<long> out;
    for (int i = 0; i <= imax; ++i) {
        const int tw = -i;
        long kernel = static_cast<long>(hom_dim(i, tw)) - static_cast<long>(diff_rank(i, tw));
        long image = i == 0 ? 0 : static_cast<long>(diff_rank(i - 1, tw));
        out.push_back(kernel - image);
    }
    return out;
}

struct PreprojReport {
    int degrees = 0;
    // per degree, 5x5 tables indexed by summand (0 = k / P(0), i = L_i / P(i))
    std::vector<std::array<std::array<long, 5>, 5>> module_side;   // Ext^i(U_a, U_b(-i))
    std::vector<std::array<std::array<long, 5>, 5>> quiver_side;   // Hom(P(b), tau^{-i} P(a))
    bool agree = true;
    std::string first_mismatch;

    long module_total(int i) const
    {
        long s = 0;
        for (const auto& row : module_side[static_cast<std::size_t>(i)])
            for (long v : row) s += v;
        return s;
    }
    long quiver_total(int i) const
    {
        long s = 0;
        for (const auto& row : quiver_side[static_cast<std::size_t>(i)])
            for (long v : row) s += v;
        return s;
    }
};

/// Module-side Ext^{i,-i}(U, U) versus quiver-side Hom(A, tau^{-i}A),
/// summand by summand, for i = 0..n_max.
inline PreprojReport preproj_dims(int n_max = 5)
{
    const TiltingData& T = TiltingData::instance();
    PreprojReport rep;
    rep.degrees = n_max;

    std::array<const PresentedModule*, 5> U = {&T.k, &T.L[0], &T.L[1], &T.L[2], &T.L[3]};

    // module side
    std::vector<std::array<std::array<long, 5>, 5>> mod(static_cast<std::size_t>(n_max) + 1);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            std::vector<long> dims = ext_diagonal_dims(*U[static_cast<std::size_t>(a)],
                                                       *U[static_cast<std::size_t>(b)], n_max);
            for (int i = 0; i <= n_max; ++i)
                mod[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = dims[static_cast<std::size_t>(i)];
        }
    rep.module_side = std::move(mod);

    // quiver side: Hom(P(b), tau^{-i} P(a)); E(U_a) = P(a) and E is
    // contravariant, so the tables match transposed
    std::vector<Rep> shifted(5);
    for (int a = 0; a < 5; ++a) shifted[static_cast<std::size_t>(a)] = projective_rep(a);
    rep.quiver_side.resize(static_cast<std::size_t>(n_max) + 1);
    for (int i = 0; i <= n_max; ++i) {
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                rep.quiver_side[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    static_cast<long>(hom_rep_dim(projective_rep(b), shifted[static_cast<std::size_t>(a)]));
        if (i < n_max)
            for (int a = 0; a < 5; ++a)
                shifted[static_cast<std::size_t>(a)] = tau_inv_rep(shifted[static_cast<std::size_t>(a)]);
    }

    for (int i = 0; i <= n_max && rep.agree; ++i)
        for (int a = 0; a < 5 && rep.agree; ++a)
            for (int b = 0; b < 5 && rep.agree; ++b)
                if (rep.module_side[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
                    rep.quiver_side[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                    rep.agree = false;
                    rep.first_mismatch = "degree " + std::to_string(i) + ", summands (" +
                                         std::to_string(a) + "," + std::to_string(b) + "): module " +
                                         std::to_string(rep.module_side[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) +
                                         " vs quiver " +
                                         std::to_string(rep.quiver_side[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
                }
    return rep;
}

/// Tor-vanishing of the tilting summands: beta_{n,0}(L_i) = 0 for n in
/// [1, bound] and beta_{0,0} = 1, for every i.
inline bool tilting_orthogonality_check(int bound = 6)
{
    for (int i = 1; i <= 4; ++i) {
        BettiTable t = minimal_resolution(point_module(i), bound).betti;
        if (t.get(0, 0) != 1) return false;
        for (int n = 1; n <= bound; ++n)
            if (t.get(n, 0) != 0) return false;
    }
    return true;
}

} // namespace fourpoints

#endif
