// Complete-resolution windows over R for k^st and the point modules, built
// from the Koszul resolutions carrying a dg-module structure over
// Lambda(dQ_0, dQ_inf): a divided-power column of copies of the Koszul
// complex, the turn through the socle of omega, and a symmetric-power tail.
#ifndef FOURPOINTS_CRES_HPP
#define FOURPOINTS_CRES_HPP

#include <array>
#include <string>
#include <vector>

#include "fourpoints/modules.hpp"
#include "fourpoints/hom.hpp"
#include "fourpoints/mf.hpp"

namespace fourpoints {

using PolyMat = std::vector<std::vector<Poly>>;

namespace detail {

inline PolyMat pm_zero(std::size_t rows, std::size_t cols)
{
    return PolyMat(rows, std::vector<Poly>(cols));
}

inline PolyMat pm_mul(const PolyMat& a, const PolyMat& b)
{
    PolyMat c = pm_zero(a.size(), b.empty() ? 0 : b[0].size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < (c.empty() ? 0 : c[i].size()); ++j) {
            Poly s;
            for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

inline PolyMat pm_add(const PolyMat& a, const PolyMat& b)
{
    PolyMat c = a;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
    return c;
}

inline bool pm_is_zero(const PolyMat& a)
{
    for (const auto& row : a)
        for (const Poly& f : row)
            if (!f.is_zero()) return false;
    return true;
}

} // namespace detail

/// Koszul resolution (of k for index 0, of L_i for 1..4) together with the
/// action matrices of dQ_0 and dQ_inf lifting the dg-module structure.
class KoszulDG {
public:
    int which = 0;                     // 0 = k via Lambda(dx,dy,dz); i >= 1 = L_i
    std::vector<std::size_t> dims;     // exterior-degree dimensions
    std::vector<PolyMat> delta;        // delta[j]: E_j -> E_{j-1}, linear entries
    std::array<std::vector<PolyMat>, 2> theta;  // action of dQ_0, dQ_inf: E_j -> E_{j+1}

    std::size_t length() const { return dims.size() - 1; }

    /// The stated lift choices; the optional override replaces the linear
    /// forms (gamma, eps, zeta) with lambda(dQ_j) = gamma dx + eps dy + zeta dz
    /// for index 0 (used as a negative control).
    static KoszulDG make(int which,
                         std::optional<std::array<std::array<Poly, 3>, 2>> lift0_override = std::nullopt)
    {
        if (which < 0 || which > 4) throw std::invalid_argument("KoszulDG: index must be 0..4");
        KoszulDG k;
        k.which = which;
        if (which == 0) {
            k.dims = {1, 3, 3, 1};
            Poly X = Poly::x(), Y = Poly::y(), Z = Poly::z();
            k.delta = {PolyMat{}, {{X, Y, Z}},
                       {{-Y, -Z, Poly()}, {X, Poly(), -Z}, {Poly(), X, Y}},
                       {{Z}, {-Y}, {X}}};
            std::array<std::array<Poly, 3>, 2> lifts = {{{X, -Y, Poly()}, {Poly(), Y, -Z}}};
            if (lift0_override) lifts = *lift0_override;
            for (int q = 0; q < 2; ++q) {
                const Poly& g = lifts[static_cast<std::size_t>(q)][0];
                const Poly& e = lifts[static_cast<std::size_t>(q)][1];
                const Poly& z = lifts[static_cast<std::size_t>(q)][2];
                std::vector<PolyMat> th(4);
                th[0] = {{g}, {e}, {z}};
                th[1] = {{-e, g, Poly()}, {-z, Poly(), g}, {Poly(), -z, e}};
                th[2] = {{z, -e, g}};
                th[3] = detail::pm_zero(0, 1);
                k.theta[static_cast<std::size_t>(q)] = std::move(th);
            }
        } else {
            k.dims = {1, 2, 1};
            Poly la = line(which), lb = line(which + 1);
            k.delta = {PolyMat{}, {{la, lb}}, {{-lb}, {la}}};
            // dQ_0 = l1*l3 and dQ_inf = l2*l4 map to the unique multiple of an
            // available generator: coefficient on dl_i resp. dl_{i+1}
            auto action = [&](int line_with_d, const Poly& coeff) {
                // line_with_d: 0 -> dl_i slot, 1 -> dl_{i+1} slot
                std::vector<PolyMat> th(3);
                if (line_with_d == 0) {
                    th[0] = {{coeff}, {Poly()}};
                    th[1] = {{Poly(), coeff}};
                } else {
                    th[0] = {{Poly()}, {coeff}};
                    th[1] = {{-coeff, Poly()}};
                }
                th[2] = detail::pm_zero(0, 1);
                return th;
            };
            // Q_0 = l1*l3: dl_1 lives in E^1, E^4; dl_3 in E^2, E^3
            switch (which) {
                case 1: k.theta[0] = action(0, line(3)); break;   // l3 * dl_1
                case 2: k.theta[0] = action(1, line(1)); break;   // l1 * dl_3
                case 3: k.theta[0] = action(0, line(1)); break;   // l1 * dl_3
                case 4: k.theta[0] = action(1, line(3)); break;   // l3 * dl_1
            }
            // Q_inf = l2*l4: dl_2 lives in E^1, E^2; dl_4 in E^3, E^4
            switch (which) {
                case 1: k.theta[1] = action(1, line(4)); break;   // l4 * dl_2
                case 2: k.theta[1] = action(0, line(4)); break;   // l4 * dl_2
                case 3: k.theta[1] = action(1, line(2)); break;   // l2 * dl_4
                case 4: k.theta[1] = action(0, line(2)); break;   // l2 * dl_4
            }
        }
        return k;
    }

    /// theta_q^2 = 0 and the two actions anticommute, on every degree.
    bool actions_anticommute() const
    {
        for (int q = 0; q < 2; ++q)
            for (std::size_t j = 0; j + 2 <= length(); ++j)
                if (!detail::pm_is_zero(detail::pm_mul(theta[static_cast<std::size_t>(q)][j + 1],
                                                       theta[static_cast<std::size_t>(q)][j])))
                    return false;
        for (std::size_t j = 0; j + 2 <= length(); ++j) {
            PolyMat ab = detail::pm_mul(theta[0][j + 1], theta[1][j]);
            PolyMat ba = detail::pm_mul(theta[1][j + 1], theta[0][j]);
            if (!detail::pm_is_zero(detail::pm_add(ab, ba))) return false;
        }
        return true;
    }

    /// delta theta_q + theta_q delta = Q_q, the dg-module identity over S.
    bool chain_identity() const
    {
        const Poly Q[2] = {pencil(ProjPair::zero()), pencil(ProjPair::infinity())};
        for (int q = 0; q < 2; ++q)
            for (std::size_t j = 0; j <= length(); ++j) {
                PolyMat acc = detail::pm_zero(dims[j], dims[j]);
                if (j + 1 <= length())
                    acc = detail::pm_add(acc, detail::pm_mul(delta[j + 1], theta[static_cast<std::size_t>(q)][j]));
                if (j >= 1)
                    acc = detail::pm_add(acc, detail::pm_mul(theta[static_cast<std::size_t>(q)][j - 1], delta[j]));
                for (std::size_t r = 0; r < dims[j]; ++r)
                    for (std::size_t c = 0; c < dims[j]; ++c)
                        if (acc[r][c] != (r == c ? Q[q] : Poly())) return false;
            }
        return true;
    }
};

inline KoszulDG koszul_dg(int which) { return KoszulDG::make(which); }

// ---------------------------------------------------------------------------
// Window generation

/// Finite slice of the complete resolution: maps[k]: C_{n_max-k} -> C_{n_max-k-1}.
struct Window {
    int n_min = 0, n_max = 0;
    std::vector<FreeGraded> terms;   // terms[k] = C_{n_max - k}
    std::vector<GradedMap> maps;

    const FreeGraded& term(int n) const { return terms[static_cast<std::size_t>(n_max - n)]; }
    /// Map C_n -> C_{n-1}.
    const GradedMap& map_at(int n) const { return maps[static_cast<std::size_t>(n_max - n)]; }

    BettiTable betti() const
    {
        BettiTable t;
        t.imin = n_min;
        t.imax = n_max;
        for (int n = n_min; n <= n_max; ++n)
            for (int g : term(n).gens) t.add(n, g, 1);
        return t;
    }
};

namespace detail {

struct Cell {
    bool tail;
    std::size_t e;   // exterior degree
    std::size_t pw;  // divided or symmetric power degree
};

inline std::vector<Cell> cells_at(const KoszulDG& dg, int n)
{
    std::vector<Cell> out;
    for (std::size_t j = 0;; ++j) {
        const long i = n - 2 * static_cast<long>(j);
        if (i < 0) break;
        if (i <= static_cast<long>(dg.length())) out.push_back({false, static_cast<std::size_t>(i), j});
    }
    for (std::size_t j = 0;; ++j) {
        const long i = n + 3 + 2 * static_cast<long>(j);
        if (i > static_cast<long>(dg.length())) break;
        out.push_back({true, static_cast<std::size_t>(i), j});
    }
    return out;
}

inline int cell_gen_degree(const Cell& c)
{
    return c.tail ? static_cast<int>(c.e) - 4 - 2 * static_cast<int>(c.pw)
                  : static_cast<int>(c.e) + 2 * static_cast<int>(c.pw);
}

inline std::size_t cell_dim(const KoszulDG& dg, const Cell& c)
{
    return (c.pw + 1) * dg.dims[c.e];
}

/// Block of the differential from cell `from` (position n) into cell `to`
/// (position n-1); zero when the cells are not connected.
inline PolyMat cell_block(const KoszulDG& dg, const Cell& from, const Cell& to)
{
    const std::size_t rows = cell_dim(dg, to), cols = cell_dim(dg, from);
    PolyMat out = pm_zero(rows, cols);
    auto put = [&](std::size_t bi, std::size_t bj, const PolyMat& m, bool negate = false) {
        // power-index blocks of size dims[to.e] x dims[from.e]
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m[r].size(); ++c) {
                Poly v = negate ? -m[r][c] : m[r][c];
                out[bi * dg.dims[to.e] + r][bj * dg.dims[from.e] + c] += v;
            }
    };

    if (!from.tail && !to.tail) {
        if (to.e + 1 == from.e && to.pw == from.pw) {
            // Koszul part, one block per divided power monomial
            for (std::size_t a = 0; a <= from.pw; ++a) put(a, a, dg.delta[from.e]);
        } else if (to.e == from.e + 1 && to.pw + 1 == from.pw) {
            // divided-power lowering against the dQ actions; index a counts
            // the eta_0 exponent
            for (std::size_t a = 0; a <= from.pw; ++a) {
                if (a >= 1) put(a - 1, a, dg.theta[0][from.e]);   // lower eta_0
                if (from.pw - a >= 1) put(a, a, dg.theta[1][from.e]);  // lower eta_inf
            }
        }
    } else if (!from.tail && to.tail) {
        if (from.pw == 0 && to.pw == 0 && to.e == from.e + 2) {
            // the turn through the socle Omega = dQ_0 dQ_inf
            put(0, 0, pm_mul(dg.theta[0][from.e + 1], dg.theta[1][from.e]));
        }
    } else if (from.tail && to.tail) {
        if (to.e + 1 == from.e && to.pw == from.pw) {
            for (std::size_t a = 0; a <= from.pw; ++a) put(a, a, dg.delta[from.e], true);
        } else if (to.e == from.e + 1 && to.pw == from.pw + 1) {
            // symmetric-power raising; index a counts the partial_0 exponent
            for (std::size_t a = 0; a <= from.pw; ++a) {
                put(a + 1, a, dg.theta[0][from.e]);
                put(a, a, dg.theta[1][from.e]);
            }
        }
    }
    return out;
}

} // namespace detail

/// Window [from, to] of the complete resolution attached to target 0 = k,
/// 1..4 = L_i.  An explicit dg (e.g. with tampered lifts) may be supplied.
inline Window bpr_window(int target, int from, int to,
                         std::optional<KoszulDG> custom_dg = std::nullopt)
{
    if (from > to) throw std::invalid_argument("bpr_window: empty range");
    const KoszulDG dg = custom_dg.value_or(koszul_dg(target));
    const RingId R = RingId::R();

    Window w;
    w.n_min = from;
    w.n_max = to;
    std::vector<std::vector<detail::Cell>> cells;
    for (int n = to; n >= from; --n) {
        std::vector<detail::Cell> cs = detail::cells_at(dg, n);
        FreeGraded F{R, {}};
        for (const detail::Cell& c : cs)
            F.gens.insert(F.gens.end(), detail::cell_dim(dg, c), detail::cell_gen_degree(c));
        w.terms.push_back(F);
        cells.push_back(std::move(cs));
    }
    for (std::size_t k = 0; k + 1 < w.terms.size(); ++k) {
        const auto& src_cells = cells[k];
        const auto& tgt_cells = cells[k + 1];
        const FreeGraded& src = w.terms[k];
        const FreeGraded& tgt = w.terms[k + 1];
        std::vector<std::vector<Poly>> entries(tgt.count(), std::vector<Poly>(src.count()));
        std::size_t coff = 0;
        for (const detail::Cell& cf : src_cells) {
            std::size_t roff = 0;
            for (const detail::Cell& ct : tgt_cells) {
                PolyMat block = detail::cell_block(dg, cf, ct);
                for (std::size_t r = 0; r < block.size(); ++r)
                    for (std::size_t c = 0; c < block[r].size(); ++c)
                        entries[roff + r][coff + c] = normal_form(R, block[r][c]);
                roff += detail::cell_dim(dg, ct);
            }
            coff += detail::cell_dim(dg, cf);
        }
        w.maps.push_back(GradedMap(src, tgt, std::move(entries)));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Cross validation

struct CresReport {
    bool chain_checks = false;   // dg-module identities of the Koszul actions
    bool d_squared = false;      // consecutive composites vanish over R
    bool minimal = false;        // every entry in the irrelevant ideal
    bool coker_matches = false;  // coker(C_1 -> C_0) is the stabilized target
    bool betti_matches = false;  // window ranks equal the resolution Betti table
    std::string detail;

    bool pass() const { return chain_checks && d_squared && minimal && coker_matches && betti_matches; }
};

/// Validate the window for one target against independently computed data:
/// d^2 = 0, minimality, cokernel isomorphism, and cell-by-cell Betti
/// agreement on [-3, 6].
inline CresReport cross_validate(int target, std::optional<KoszulDG> custom_dg = std::nullopt,
                                 int back = 3, int forward = 6)
{
    CresReport rep;
    const KoszulDG dg = custom_dg.value_or(koszul_dg(target));
    rep.chain_checks = dg.actions_anticommute() && dg.chain_identity();
    if (!rep.chain_checks) rep.detail = "dg-module identities failed";

    Window w = bpr_window(target, -back, forward, dg);
    rep.d_squared = true;
    for (int n = forward; n - 1 > -back; --n)
        if (!compose(w.map_at(n - 1), w.map_at(n)).is_zero()) {
            rep.d_squared = false;
            rep.detail = "d^2 != 0 at position " + std::to_string(n - 1);
            break;
        }
    rep.minimal = true;
    for (const GradedMap& m : w.maps)
        if (!m.is_minimal()) {
            rep.minimal = false;
            rep.detail = "non-minimal window map";
            break;
        }

    PresentedModule target_module = target == 0 ? stabilize_k() : point_module(target);
    PresentedModule window_module{w.map_at(1)};
    rep.coker_matches = iso_test(window_module, target_module).iso;
    if (!rep.coker_matches && rep.detail.empty()) rep.detail = "cokernel at position 0 mismatched";

    BettiTable expect = complete_betti(target_module, back, forward);
    BettiTable got = w.betti();
    rep.betti_matches = true;
    for (int n = -back; n <= forward && rep.betti_matches; ++n)
        for (int j = n - 2; j <= n + 2 && rep.betti_matches; ++j)
            if (expect.get(n, j) != got.get(n, j)) {
                rep.betti_matches = false;
                rep.detail = "Betti mismatch at (" + std::to_string(n) + ", " + std::to_string(j) +
                             "): resolution " + std::to_string(expect.get(n, j)) + " vs window " +
                             std::to_string(got.get(n, j));
            }
    return rep;
}

} // namespace fourpoints

#endif
