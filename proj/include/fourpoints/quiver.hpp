// Representations of the D~4 quiver (four arrows into a central vertex):
// intertwiner spaces, Euler form and defect, Ext^1 with extensions, and the
// AR translates computed from minimal projective / injective presentations.
#ifndef FOURPOINTS_QUIVER_HPP
#define FOURPOINTS_QUIVER_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fourpoints/mat.hpp"
#include "fourpoints/rng.hpp"

namespace fourpoints {

using DimVector = std::array<long, 5>;  // (d0; d1, d2, d3, d4)

/// Five spaces and four maps into the center: maps[i]: V_{i+1} -> V_0.
struct Rep {
    std::array<std::size_t, 5> dims{};  // dims[0] = center
    std::array<Mat, 4> maps;            // maps[i] has shape dims[0] x dims[i+1]

    Rep() = default;
    Rep(std::size_t d0, std::array<std::size_t, 4> leaf_dims)
    {
        dims[0] = d0;
        for (int i = 0; i < 4; ++i) {
            dims[static_cast<std::size_t>(i) + 1] = leaf_dims[static_cast<std::size_t>(i)];
            maps[static_cast<std::size_t>(i)] = Mat(d0, leaf_dims[static_cast<std::size_t>(i)]);
        }
    }

    std::size_t total_dim() const
    {
        std::size_t n = 0;
        for (std::size_t d : dims) n += d;
        return n;
    }

    DimVector dim_vector() const
    {
        DimVector v{};
        for (int i = 0; i < 5; ++i) v[static_cast<std::size_t>(i)] = static_cast<long>(dims[static_cast<std::size_t>(i)]);
        return v;
    }

    bool is_zero() const { return total_dim() == 0; }

    void check() const
    {
        for (int i = 0; i < 4; ++i) {
            const Mat& m = maps[static_cast<std::size_t>(i)];
            if (m.rows() != dims[0] || m.cols() != dims[static_cast<std::size_t>(i) + 1])
                throw std::invalid_argument("Rep: map shape inconsistent with dimensions");
        }
    }
};

/// One-dimensional space at a single leaf (or the center), identity arrow.
inline Rep simple_rep(int vertex)
{
    if (vertex == 0) return Rep(1, {0, 0, 0, 0});
    Rep r(0, {0, 0, 0, 0});
    r.dims[static_cast<std::size_t>(vertex)] = 1;
    r.maps[static_cast<std::size_t>(vertex) - 1] = Mat(0, 1);
    return r;
}

inline Rep projective_rep(int vertex)
{
    if (vertex == 0) return simple_rep(0);
    Rep r(1, {0, 0, 0, 0});
    r.dims[static_cast<std::size_t>(vertex)] = 1;
    for (int i = 0; i < 4; ++i)
        r.maps[static_cast<std::size_t>(i)] = Mat(1, r.dims[static_cast<std::size_t>(i) + 1]);
    r.maps[static_cast<std::size_t>(vertex) - 1](0, 0) = Fp(1);
    return r;
}

inline Rep injective_rep(int vertex)
{
    if (vertex == 0) {
        Rep r(1, {1, 1, 1, 1});
        for (int i = 0; i < 4; ++i) r.maps[static_cast<std::size_t>(i)](0, 0) = Fp(1);
        return r;
    }
    return simple_rep(vertex);
}

/// Four lines through the origin of k^2, as a representation.
inline Rep four_lines_rep(const std::array<std::array<Fp, 2>, 4>& lines)
{
    Rep r(2, {1, 1, 1, 1});
    for (int i = 0; i < 4; ++i) {
        r.maps[static_cast<std::size_t>(i)](0, 0) = lines[static_cast<std::size_t>(i)][0];
        r.maps[static_cast<std::size_t>(i)](1, 0) = lines[static_cast<std::size_t>(i)][1];
    }
    return r;
}

inline Rep direct_sum_rep(const Rep& a, const Rep& b)
{
    Rep c;
    for (int v = 0; v < 5; ++v) c.dims[static_cast<std::size_t>(v)] = a.dims[static_cast<std::size_t>(v)] + b.dims[static_cast<std::size_t>(v)];
    for (int i = 0; i < 4; ++i) {
        const Mat& ma = a.maps[static_cast<std::size_t>(i)];
        const Mat& mb = b.maps[static_cast<std::size_t>(i)];
        Mat m(c.dims[0], c.dims[static_cast<std::size_t>(i) + 1]);
        for (std::size_t r = 0; r < ma.rows(); ++r)
            for (std::size_t cc = 0; cc < ma.cols(); ++cc) m(r, cc) = ma(r, cc);
        for (std::size_t r = 0; r < mb.rows(); ++r)
            for (std::size_t cc = 0; cc < mb.cols(); ++cc) m(a.dims[0] + r, ma.cols() + cc) = mb(r, cc);
        c.maps[static_cast<std::size_t>(i)] = m;
    }
    return c;
}

/// Conjugate by invertible base changes (g_v) at every vertex.
inline Rep conjugate_rep(const Rep& r, const std::array<Mat, 5>& g)
{
    Rep out = r;
    Mat g0inv = inverse(g[0]).value();
    for (int i = 0; i < 4; ++i)
        out.maps[static_cast<std::size_t>(i)] = g0inv * r.maps[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i) + 1];
    return out;
}

inline Rep random_conjugate(const Rep& r, Rng& rng)
{
    std::array<Mat, 5> g;
    for (int v = 0; v < 5; ++v) {
        const std::size_t n = r.dims[static_cast<std::size_t>(v)];
        for (;;) {
            Mat m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.field_element();
            if (rank(m) == n) { g[static_cast<std::size_t>(v)] = m; break; }
        }
    }
    return conjugate_rep(r, g);
}

// ---------------------------------------------------------------------------
// Hom, Euler form, Ext^1

using RepHom = std::array<Mat, 5>;  // f_v: M_v -> N_v with f_0 phi^M_i = ... intertwining

namespace detail {

struct RepHomLayout {
    std::array<std::size_t, 5> offset{};
    std::size_t total = 0;
    std::array<std::pair<std::size_t, std::size_t>, 5> shape;  // (rows, cols) of f_v

    RepHomLayout(const Rep& M, const Rep& N)
    {
        std::size_t pos = 0;
        for (int v = 0; v < 5; ++v) {
            offset[static_cast<std::size_t>(v)] = pos;
            shape[static_cast<std::size_t>(v)] = {N.dims[static_cast<std::size_t>(v)], M.dims[static_cast<std::size_t>(v)]};
            pos += N.dims[static_cast<std::size_t>(v)] * M.dims[static_cast<std::size_t>(v)];
        }
        total = pos;
    }

    RepHom unpack(const std::vector<Fp>& x) const
    {
        RepHom f;
        for (int v = 0; v < 5; ++v) {
            auto [r, c] = shape[static_cast<std::size_t>(v)];
            Mat m(r, c);
            std::size_t pos = offset[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m(i, j) = x[pos++];
            f[static_cast<std::size_t>(v)] = m;
        }
        return f;
    }
};

/// Intertwiner constraint matrix: rows = entries of phi^N_i f_i - f_0 phi^M_i.
inline Mat intertwiner_system(const Rep& M, const Rep& N)
{
    RepHomLayout lay(M, N);
    std::size_t nrows = 0;
    for (int i = 0; i < 4; ++i) nrows += N.dims[0] * M.dims[static_cast<std::size_t>(i) + 1];
    Mat sys(nrows, lay.total);
    std::size_t row0 = 0;
    for (int i = 0; i < 4; ++i) {
        const Mat& pm = M.maps[static_cast<std::size_t>(i)];
        const Mat& pn = N.maps[static_cast<std::size_t>(i)];
        const std::size_t mi = M.dims[static_cast<std::size_t>(i) + 1];
        // rows indexed by (r in N_0, c in M_i)
        for (std::size_t r = 0; r < N.dims[0]; ++r)
            for (std::size_t c = 0; c < mi; ++c) {
                const std::size_t row = row0 + r * mi + c;
                // + phi^N_i[r][k] * f_i[k][c]
                for (std::size_t k = 0; k < N.dims[static_cast<std::size_t>(i) + 1]; ++k)
                    sys(row, lay.offset[static_cast<std::size_t>(i) + 1] + k * mi + c) += pn(r, k);
                // - f_0[r][k] * phi^M_i[k][c]
                for (std::size_t k = 0; k < M.dims[0]; ++k)
                    sys(row, lay.offset[0] + r * M.dims[0] + k) -= pm(k, c);
            }
        row0 += N.dims[0] * mi;
    }
    return sys;
}

} // namespace detail

/// Basis of intertwiners (f_0,...,f_4) with phi^N_i f_i = f_0 phi^M_i.
inline std::vector<RepHom> hom_rep(const Rep& M, const Rep& N)
{
    detail::RepHomLayout lay(M, N);
    Mat K = kernel_basis(detail::intertwiner_system(M, N));
    std::vector<RepHom> out;
    for (std::size_t j = 0; j < K.cols(); ++j) out.push_back(lay.unpack(K.column(j)));
    return out;
}

inline std::size_t hom_rep_dim(const Rep& M, const Rep& N)
{
    detail::RepHomLayout lay(M, N);
    Mat sys = detail::intertwiner_system(M, N);
    return lay.total - rank(sys);
}

/// <d, e> = d0 e0 + sum d_i e_i - sum d_i e0 for the sink orientation.
inline long euler_form(const DimVector& d, const DimVector& e)
{
    long s = d[0] * e[0];
    for (int i = 1; i < 5; ++i) s += d[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(i)] * e[0];
    return s;
}

inline long defect(const DimVector& d)
{
    return -2 * d[0] + d[1] + d[2] + d[3] + d[4];
}

inline long defect(const Rep& M) { return defect(M.dim_vector()); }

/// dim Ext^1 = dim Hom - <dim M, dim N> (hereditary).
inline long ext1_rep_dim(const Rep& M, const Rep& N)
{
    return static_cast<long>(hom_rep_dim(M, N)) - euler_form(M.dim_vector(), N.dim_vector());
}

/// Cokernel dimension of the arrow-system map, the direct route to Ext^1.
inline long ext1_rep_dim_direct(const Rep& M, const Rep& N)
{
    Mat sys = detail::intertwiner_system(M, N);
    return static_cast<long>(sys.rows()) - static_cast<long>(rank(sys));
}

/// Cocycles (xi_i: Z_i -> X_0) modulo coboundaries; basis of Ext^1(Z, X).
inline std::vector<std::array<Mat, 4>> ext1_rep_basis(const Rep& Z, const Rep& X)
{
    // coboundary of (g_v) is (phi^X_i g_i - g_0 phi^Z_i), landing in the same
    // coordinate space as the cocycles
    Mat sys = detail::intertwiner_system(Z, X);
    std::size_t nrows = sys.rows();
    Subspace cob(nrows);
    for (std::size_t c = 0; c < sys.cols(); ++c) cob.insert(sys.column(c));

    std::vector<std::array<Mat, 4>> out;
    std::vector<std::size_t> comp = cob.complement();
    for (std::size_t k : comp) {
        std::vector<Fp> v(nrows, Fp(0));
        v[k] = Fp(1);
        std::array<Mat, 4> xi;
        std::size_t row0 = 0;
        for (int i = 0; i < 4; ++i) {
            const std::size_t mi = Z.dims[static_cast<std::size_t>(i) + 1];
            Mat m(X.dims[0], mi);
            for (std::size_t r = 0; r < X.dims[0]; ++r)
                for (std::size_t cc = 0; cc < mi; ++cc) m(r, cc) = v[row0 + r * mi + cc];
            xi[static_cast<std::size_t>(i)] = m;
            row0 += X.dims[0] * mi;
        }
        out.push_back(xi);
    }
    return out;
}

/// Middle term of 0 -> X -> Y -> Z -> 0 with class xi; xi = 0 gives the sum.
inline Rep extension_rep(const Rep& Z, const Rep& X, const std::array<Mat, 4>& xi)
{
    Rep y;
    for (int v = 0; v < 5; ++v) y.dims[static_cast<std::size_t>(v)] = X.dims[static_cast<std::size_t>(v)] + Z.dims[static_cast<std::size_t>(v)];
    for (int i = 0; i < 4; ++i) {
        const Mat& mx = X.maps[static_cast<std::size_t>(i)];
        const Mat& mz = Z.maps[static_cast<std::size_t>(i)];
        const Mat& e = xi[static_cast<std::size_t>(i)];
        if (e.rows() != X.dims[0] || e.cols() != Z.dims[static_cast<std::size_t>(i) + 1])
            throw std::invalid_argument("extension_rep: cocycle block has the wrong shape");
        Mat m(y.dims[0], y.dims[static_cast<std::size_t>(i) + 1]);
        for (std::size_t r = 0; r < mx.rows(); ++r)
            for (std::size_t c = 0; c < mx.cols(); ++c) m(r, c) = mx(r, c);
        for (std::size_t r = 0; r < e.rows(); ++r)
            for (std::size_t c = 0; c < e.cols(); ++c) m(r, mx.cols() + c) = e(r, c);
        for (std::size_t r = 0; r < mz.rows(); ++r)
            for (std::size_t c = 0; c < mz.cols(); ++c) m(X.dims[0] + r, mx.cols() + c) = mz(r, c);
        y.maps[static_cast<std::size_t>(i)] = m;
    }
    return y;
}

// ---------------------------------------------------------------------------
// AR translates

/// tau via the Nakayama functor on a minimal projective presentation:
/// tau M = ker(nu P_1 -> nu P_0); kills projectives.
inline Rep tau_rep(const Rep& M)
{
    const std::size_t d0 = M.dims[0];
    // projective cover: P(i) x V_i for the leaves plus P(0) x C, where C is a
    // complement of sum im(phi_i) in V_0
    Subspace image(d0);
    for (int i = 0; i < 4; ++i) image.insert_columns(M.maps[static_cast<std::size_t>(i)]);
    std::vector<std::size_t> comp = image.complement();

    std::size_t cols = comp.size();
    for (int i = 0; i < 4; ++i) cols += M.dims[static_cast<std::size_t>(i) + 1];
    Mat mu(d0, cols);
    std::size_t pos = 0;
    std::array<std::size_t, 4> leaf_off{};
    for (int i = 0; i < 4; ++i) {
        leaf_off[static_cast<std::size_t>(i)] = pos;
        const Mat& m = M.maps[static_cast<std::size_t>(i)];
        for (std::size_t r = 0; r < d0; ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) mu(r, pos + c) = m(r, c);
        pos += m.cols();
    }
    const std::size_t c_off = pos;
    for (std::size_t k = 0; k < comp.size(); ++k) mu(comp[k], pos + k) = Fp(1);

    Mat K = kernel_basis(mu);  // columns: basis of the relation space
    const std::size_t dk = K.cols();

    // tau M at vertex 0: relations vanishing on the C block
    Mat cblock(comp.size(), dk);
    for (std::size_t r = 0; r < comp.size(); ++r)
        for (std::size_t c = 0; c < dk; ++c) cblock(r, c) = K(c_off + r, c);
    Mat B0 = kernel_basis(cblock);

    Rep out;
    out.dims[0] = B0.cols();
    for (int i = 0; i < 4; ++i) {
        // vertex i: relations vanishing on the V_i and C blocks
        const std::size_t mi = M.dims[static_cast<std::size_t>(i) + 1];
        Mat blk(mi + comp.size(), dk);
        for (std::size_t r = 0; r < mi; ++r)
            for (std::size_t c = 0; c < dk; ++c) blk(r, c) = K(leaf_off[static_cast<std::size_t>(i)] + r, c);
        for (std::size_t r = 0; r < comp.size(); ++r)
            for (std::size_t c = 0; c < dk; ++c) blk(mi + r, c) = K(c_off + r, c);
        Mat Bi = kernel_basis(blk);
        out.dims[static_cast<std::size_t>(i) + 1] = Bi.cols();
        // inclusion ker_i -> ker_0 expressed in the chosen bases
        Mat arrows(B0.cols(), Bi.cols());
        for (std::size_t c = 0; c < Bi.cols(); ++c) {
            auto x = solve(B0, Bi.column(c));
            if (!x.has_value()) throw std::logic_error("tau_rep: inclusion failed");
            for (std::size_t r = 0; r < B0.cols(); ++r) arrows(r, c) = (*x)[r];
        }
        out.maps[static_cast<std::size_t>(i)] = arrows;
    }
    return out;
}

/// tau^{-1} via the inverse Nakayama functor on a minimal injective
/// copresentation; kills injectives.
inline Rep tau_inv_rep(const Rep& M)
{
    const std::size_t d0 = M.dims[0];

    struct LeafData {
        Mat ker;                       // basis of ker(phi_i)
        Subspace graph{0};             // span of (phi_i v, pi_i v)
        std::vector<std::size_t> wbasis;  // complement: basis of W_i
        Mat A;                         // V_0 -> W_i
        Mat B;                         // ker(phi_i) -> W_i
    };
    std::array<LeafData, 4> leaf;

    for (int i = 0; i < 4; ++i) {
        const Mat& phi = M.maps[static_cast<std::size_t>(i)];
        const std::size_t di = M.dims[static_cast<std::size_t>(i) + 1];
        LeafData L{Mat(), Subspace(0), {}, Mat(), Mat()};
        L.ker = kernel_basis(phi);
        const std::size_t ki = L.ker.cols();

        // projection pi_i onto ker(phi_i): complete the kernel basis by
        // standard vectors, invert, read the kernel coordinates
        Subspace kspan(di);
        kspan.insert_columns(L.ker);
        std::vector<std::size_t> kcomp = kspan.complement();
        Mat P(di, di);
        for (std::size_t c = 0; c < ki; ++c)
            for (std::size_t r = 0; r < di; ++r) P(r, c) = L.ker(r, c);
        for (std::size_t c = 0; c < kcomp.size(); ++c) P(kcomp[c], ki + c) = Fp(1);
        Mat Pinv = di ? inverse(P).value() : Mat();

        // graph of v -> (phi v, pi v) inside V_0 + ker
        L.graph = Subspace(d0 + ki);
        for (std::size_t c = 0; c < di; ++c) {
            std::vector<Fp> v(d0 + ki, Fp(0));
            for (std::size_t r = 0; r < d0; ++r) v[r] = phi(r, c);
            if (di) {
                std::vector<Fp> picol = Pinv.column(c);
                for (std::size_t r = 0; r < ki; ++r) v[d0 + r] = picol[r];
            }
            L.graph.insert(v);
        }
        L.wbasis = L.graph.complement();
        const std::size_t wi = L.wbasis.size();

        L.A = Mat(wi, d0);
        for (std::size_t c = 0; c < d0; ++c) {
            std::vector<Fp> v(d0 + ki, Fp(0));
            v[c] = Fp(1);
            std::vector<Fp> q = L.graph.quotient_coords(v);
            for (std::size_t r = 0; r < wi; ++r) L.A(r, c) = q[r];
        }
        L.B = Mat(wi, ki);
        for (std::size_t c = 0; c < ki; ++c) {
            std::vector<Fp> v(d0 + ki, Fp(0));
            v[d0 + c] = Fp(1);
            std::vector<Fp> q = L.graph.quotient_coords(v);
            for (std::size_t r = 0; r < wi; ++r) L.B(r, c) = q[r];
        }
        leaf[static_cast<std::size_t>(i)] = std::move(L);
    }

    // vertex 0 of tau^{-1} M: (sum W_i) / (im stacked A + sum im B_i)
    std::size_t wtot = 0;
    std::array<std::size_t, 4> woff{};
    for (int i = 0; i < 4; ++i) {
        woff[static_cast<std::size_t>(i)] = wtot;
        wtot += leaf[static_cast<std::size_t>(i)].wbasis.size();
    }
    Subspace zero_rel(wtot);
    for (std::size_t c = 0; c < d0; ++c) {
        std::vector<Fp> v(wtot, Fp(0));
        for (int i = 0; i < 4; ++i) {
            const Mat& A = leaf[static_cast<std::size_t>(i)].A;
            for (std::size_t r = 0; r < A.rows(); ++r) v[woff[static_cast<std::size_t>(i)] + r] = A(r, c);
        }
        zero_rel.insert(v);
    }
    for (int i = 0; i < 4; ++i) {
        const Mat& B = leaf[static_cast<std::size_t>(i)].B;
        for (std::size_t c = 0; c < B.cols(); ++c) {
            std::vector<Fp> v(wtot, Fp(0));
            for (std::size_t r = 0; r < B.rows(); ++r) v[woff[static_cast<std::size_t>(i)] + r] = B(r, c);
            zero_rel.insert(v);
        }
    }
    std::vector<std::size_t> zcomp = zero_rel.complement();

    Rep out;
    out.dims[0] = zcomp.size();
    for (int i = 0; i < 4; ++i) {
        const LeafData& L = leaf[static_cast<std::size_t>(i)];
        const std::size_t wi = L.wbasis.size();
        // vertex i: W_i / im B_i
        Subspace bspan(wi);
        bspan.insert_columns(L.B);
        std::vector<std::size_t> vcomp = bspan.complement();
        out.dims[static_cast<std::size_t>(i) + 1] = vcomp.size();
        Mat arrows(zcomp.size(), vcomp.size());
        for (std::size_t c = 0; c < vcomp.size(); ++c) {
            std::vector<Fp> v(wtot, Fp(0));
            v[woff[static_cast<std::size_t>(i)] + vcomp[c]] = Fp(1);
            std::vector<Fp> q = zero_rel.quotient_coords(v);
            for (std::size_t r = 0; r < zcomp.size(); ++r) arrows(r, c) = q[r];
        }
        out.maps[static_cast<std::size_t>(i)] = arrows;
    }
    return out;
}

inline Rep tau_power(Rep M, int n)
{
    for (int i = 0; i < n; ++i) M = tau_rep(M);
    return M;
}
inline Rep tau_inv_power(Rep M, int n)
{
    for (int i = 0; i < n; ++i) M = tau_inv_rep(M);
    return M;
}

// ---------------------------------------------------------------------------
// Isomorphism testing

struct RepIso {
    bool iso = false;
    std::vector<RepHom> witness;  // singleton when iso
    explicit operator bool() const { return iso; }
};

inline bool rep_hom_invertible(const Rep& M, const RepHom& f)
{
    for (int v = 0; v < 5; ++v) {
        const Mat& m = f[static_cast<std::size_t>(v)];
        if (m.rows() != m.cols()) return false;
        if (rank(m) != m.rows()) return false;
    }
    (void)M;
    return true;
}

/// Invertible intertwiner search: seeded random elements of Hom first, then a
/// deterministic sweep over basis elements and pairwise sums.
inline RepIso iso_rep(const Rep& M, const Rep& N, std::uint64_t seed = 0, int samples = 8)
{
    if (M.dims != N.dims) return {false, {}};
    if (M.total_dim() == 0) return {true, {}};
    std::vector<RepHom> basis = hom_rep(M, N);
    if (basis.empty()) return {false, {}};

    auto combine = [&](const std::vector<Fp>& c) {
        RepHom f;
        for (int v = 0; v < 5; ++v) {
            Mat acc(N.dims[static_cast<std::size_t>(v)], M.dims[static_cast<std::size_t>(v)]);
            for (std::size_t k = 0; k < basis.size(); ++k)
                acc = acc + c[k] * basis[k][static_cast<std::size_t>(v)];
            f[static_cast<std::size_t>(v)] = acc;
        }
        return f;
    };

    Rng rng(seed ^ 0xa5c3u);
    for (int s = 0; s < samples; ++s) {
        std::vector<Fp> c(basis.size());
        for (Fp& x : c) x = rng.field_element();
        RepHom f = combine(c);
        if (rep_hom_invertible(M, f)) return {true, {f}};
    }
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (rep_hom_invertible(M, basis[a])) return {true, {basis[a]}};
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            std::vector<Fp> c(basis.size(), Fp(0));
            c[a] = Fp(1);
            c[b] = Fp(1);
            RepHom f = combine(c);
            if (rep_hom_invertible(M, f)) return {true, {f}};
        }
    }
    return {false, {}};
}

} // namespace fourpoints

#endif
