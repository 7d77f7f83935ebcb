// Matrix factorizations of pencil members over the hypersurface quotients,
// their cokernel modules over R (the fundamental family N_t, the degenerate
// family D_t^±, the point modules L_i), tube modules of higher length, and
// resolution periodicity checks.
#ifndef FOURPOINTS_MF_HPP
#define FOURPOINTS_MF_HPP

#include <stdexcept>
#include <string>

#include "fourpoints/hom.hpp"
#include "fourpoints/modules.hpp"

namespace fourpoints {

/// Square pair (phi, psi) with phi*psi = psi*phi = f * I over a hypersurface
/// ring S/(Q_s), where f = Q_t for some t != s.
struct MFPair {
    RingId ring;          // HYPERSURFACE(s)
    ProjPair t;           // parameter of the factored quadric
    Poly f;               // Q_t
    GradedMap phi;        // sum B(-1-e_i) -> sum B(-e_i)
    GradedMap psi;        // shifted companion, phi*psi = f*I

    std::size_t size() const { return phi.tgt().count(); }
};

namespace detail {

inline GradedMap square_map(const RingId& ring, const std::vector<std::vector<Poly>>& e, int src_deg,
                            int tgt_deg)
{
    const std::size_t n = e.size();
    FreeGraded src{ring, std::vector<int>(n, src_deg)};
    FreeGraded tgt{ring, std::vector<int>(n, tgt_deg)};
    return GradedMap(src, tgt, e);
}

} // namespace detail

/// Hypersurface parameter used to host factorizations of Q_t: s = inf unless
/// t = inf, in which case s = 0.
inline ProjPair default_host(const ProjPair& t)
{
    return t == ProjPair::infinity() ? ProjPair::zero() : ProjPair::infinity();
}

/// The explicit 2x2 pair (Phi_t^+, Phi_t^-) factoring Q_t.
inline MFPair phi_pair(const ProjPair& t, int sign = +1, std::optional<ProjPair> host = std::nullopt)
{
    const ProjPair s = host.value_or(default_host(t));
    if (s == t) throw std::invalid_argument("phi_pair: host hypersurface must differ from t");
    const RingId ring = RingId::Ss(s);
    const Fp t0 = t.c0, t1 = t.c1;
    Poly X = Poly::x(), Y = Poly::y(), Z = Poly::z();
    std::vector<std::vector<Poly>> plus = {{t1 * (X + Y), Y + Z}, {t0 * (Z - Y), X - Y}};
    std::vector<std::vector<Poly>> minus = {{X - Y, -(Y + Z)}, {t0 * (Y - Z), t1 * (X + Y)}};
    MFPair out{ring, t, normal_form(ring, pencil(t)), GradedMap(), GradedMap()};
    if (sign >= 0) {
        out.phi = detail::square_map(ring, plus, 1, 0);
        out.psi = detail::square_map(ring, minus, 2, 1);
    } else {
        out.phi = detail::square_map(ring, minus, 1, 0);
        out.psi = detail::square_map(ring, plus, 2, 1);
    }
    return out;
}

/// The upper-triangular 2x2 pair (Psi_t^+, Psi_t^-), defined for the three
/// singular parameters only.
inline MFPair psi_pair(const ProjPair& t, int sign = +1)
{
    if (!t.is_singular_parameter())
        throw std::invalid_argument("psi_pair: defined only for t in {0, 1, inf}");
    Poly X = Poly::x(), Y = Poly::y(), Z = Poly::z();
    std::vector<std::vector<Poly>> plus, minus;
    if (t == ProjPair::zero()) {
        plus = {{X + Y, Z}, {Poly(), X - Y}};
        minus = {{X - Y, -Z}, {Poly(), X + Y}};
    } else if (t == ProjPair::one()) {
        plus = {{X - Z, Y}, {Poly(), X + Z}};
        minus = {{X + Z, -Y}, {Poly(), X - Z}};
    } else {
        plus = {{Y - Z, X}, {Poly(), Y + Z}};
        minus = {{Y + Z, -X}, {Poly(), Y - Z}};
    }
    const RingId ring = RingId::Ss(default_host(t));
    MFPair out{ring, t, normal_form(ring, pencil(t)), GradedMap(), GradedMap()};
    if (sign >= 0) {
        out.phi = detail::square_map(ring, plus, 1, 0);
        out.psi = detail::square_map(ring, minus, 2, 1);
    } else {
        out.phi = detail::square_map(ring, minus, 1, 0);
        out.psi = detail::square_map(ring, plus, 2, 1);
    }
    return out;
}

/// Linear form presenting D_t^{sign}; the two forms multiply to Q_t.
inline Poly degenerate_form(const ProjPair& t, int sign)
{
    Poly X = Poly::x(), Y = Poly::y(), Z = Poly::z();
    if (t == ProjPair::zero()) return sign >= 0 ? X - Y : X + Y;
    if (t == ProjPair::one()) return sign >= 0 ? X + Z : X - Z;
    if (t == ProjPair::infinity()) return sign >= 0 ? Y + Z : Y - Z;
    throw std::invalid_argument("degenerate_form: t must be singular");
}

/// The size-one factorization of a singular pencil member.
inline MFPair linear_pair(const ProjPair& t, int sign = +1)
{
    const RingId ring = RingId::Ss(default_host(t));
    MFPair out{ring, t, normal_form(ring, pencil(t)), GradedMap(), GradedMap()};
    out.phi = detail::square_map(ring, {{degenerate_form(t, sign)}}, 1, 0);
    out.psi = detail::square_map(ring, {{degenerate_form(t, -sign)}}, 2, 1);
    return out;
}

/// Both products reduce to f * I in the hypersurface ring.
inline bool mf_verify(const MFPair& pair)
{
    const std::size_t n = pair.size();
    const RingId& ring = pair.ring;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly fw, bw;
            for (std::size_t k = 0; k < n; ++k) {
                fw += pair.phi.entry(i, k) * pair.psi.entry(k, j);
                bw += pair.psi.entry(i, k) * pair.phi.entry(k, j);
            }
            const Poly want = i == j ? pair.f : Poly();
            if (normal_form(ring, fw) != want) return false;
            if (normal_form(ring, bw) != want) return false;
        }
    return true;
}

/// Cokernel of the factorization over R (entries reduced to R).
inline PresentedModule mf_cokernel(const MFPair& pair)
{
    const std::size_t n = pair.size();
    std::vector<std::vector<Poly>> e(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i][j] = pair.phi.entry(i, j);
    FreeGraded src{RingId::R(), pair.phi.src().gens};
    FreeGraded tgt{RingId::R(), pair.phi.tgt().gens};
    return {GradedMap(src, tgt, std::move(e))};
}

/// N_t^{sign} = coker(Phi_t^{sign} over R), generated in degree 0.
inline PresentedModule fundamental_module(const ProjPair& t, int sign = +1)
{
    return mf_cokernel(phi_pair(t, sign));
}

/// D_t^{sign} = coker(R(-1) --l--> R) for the corresponding linear form.
inline PresentedModule degenerate_module(const ProjPair& t, int sign)
{
    return mf_cokernel(linear_pair(t, sign));
}

/// Point module L_i = R / (l_i, l_{i+1}), cyclic indexing.
inline PresentedModule point_module(int i)
{
    if (i < 1 || i > 4) throw std::invalid_argument("point_module: index must be 1..4");
    FreeGraded F0{RingId::R(), {0}};
    FreeGraded F1{RingId::R(), {1, 1}};
    return {GradedMap(F1, F0, {{line(i), line(i + 1)}})};
}

/// syz^period(M) is M(-period)?
inline bool periodicity_check(const PresentedModule& M, int period, std::uint64_t seed = 0)
{
    if (period < 1) throw std::invalid_argument("periodicity_check: period must be positive");
    return iso_test(syzygy_power(minimal_presentation(M), period), twist(M, -period), seed).iso;
}

/// Uniserial module of length r in the homogeneous tube at t: N_t<r>, built
/// by iterated nontrivial extension of N_t<r-1> by N_t.
inline PresentedModule fundamental_tube(const ProjPair& t, int r)
{
    if (r < 1) throw std::invalid_argument("fundamental_tube: length must be >= 1");
    PresentedModule cur = fundamental_module(t);
    PresentedModule base = cur;
    for (int k = 2; k <= r; ++k) {
        std::vector<GradedMap> ext = ext1_basis(cur, base);
        if (ext.size() != 1)
            throw std::runtime_error("fundamental_tube: expected a unique extension class, found " +
                                     std::to_string(ext.size()));
        cur = extension_module(cur, base, ext[0]);
    }
    return cur;
}

/// Uniserial module of length r in the rank-two tube at singular t with socle
/// selected by sign: D_t<r>^{sign}.  Lengths 1 and 2 are D_t^{sign} and
/// N_t^{sign}; each further step extends by whichever of D_t^± carries the
/// unique nontrivial class.
inline PresentedModule degenerate_tube(const ProjPair& t, int r, int sign)
{
    if (!t.is_singular_parameter())
        throw std::invalid_argument("degenerate_tube: t must be singular");
    if (r < 1) throw std::invalid_argument("degenerate_tube: length must be >= 1");
    if (r == 1) return degenerate_module(t, sign);
    PresentedModule cur = r >= 2 ? fundamental_module(t, sign) : PresentedModule{};
    for (int k = 3; k <= r; ++k) {
        std::vector<GradedMap> plus = ext1_basis(cur, degenerate_module(t, +1));
        std::vector<GradedMap> minus = ext1_basis(cur, degenerate_module(t, -1));
        if (plus.size() + minus.size() != 1)
            throw std::runtime_error("degenerate_tube: expected a unique extension class, found " +
                                     std::to_string(plus.size() + minus.size()));
        if (plus.size() == 1)
            cur = extension_module(cur, degenerate_module(t, +1), plus[0]);
        else
            cur = extension_module(cur, degenerate_module(t, -1), minus[0]);
    }
    return cur;
}

} // namespace fourpoints

#endif
