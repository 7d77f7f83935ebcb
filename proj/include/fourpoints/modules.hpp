// Homological toolkit for presented modules: degreewise kernel generators,
// presentation minimization, minimal free resolutions with Betti tables,
// Hilbert invariants, duals, (co)syzygies and the translate tau.
#ifndef FOURPOINTS_MODULES_HPP
#define FOURPOINTS_MODULES_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourpoints/graded.hpp"

namespace fourpoints {

struct KernelResult {
    GradedMap gens;       // columns minimally generate ker(A) in the searched window
    bool stabilized = false;  // two degrees past the last generator produced nothing
    int searched_to = 0;
};

/// Minimal generators of ker(A) found degree by degree.  The search runs to
/// degree_bound when given, else to max source generator degree + 3, and is
/// always extended until two degrees past the last generator were empty.
inline KernelResult kernel_of_map(const GradedMap& A, std::optional<int> degree_bound = std::nullopt)
{
    const FreeGraded& F = A.src();
    const RingId ring = A.ring();
    KernelResult out;
    if (F.count() == 0) {
        out.gens = GradedMap::zero(FreeGraded{ring, {}}, F);
        out.stabilized = true;
        out.searched_to = 0;
        return out;
    }

    const int dmin = F.min_gen();
    int dmax = degree_bound.value_or(F.max_gen() + 3);

    std::vector<int> gen_degrees;
    std::vector<FreeColumn> gen_cols;
    int last_new = dmin - 1;

    for (int d = dmin; d <= dmax; ++d) {
        const std::size_t n = F.piece_dim(d);
        if (n == 0) continue;
        Mat K = kernel_basis(A.degree_block(d));

        Subspace known(n);
        for (std::size_t g = 0; g < gen_cols.size(); ++g) {
            const int e = d - gen_degrees[g];
            if (e <= 0) continue;
            for (const Monomial& m : ring_basis(ring, e)) {
                FreeColumn scaled(F.count());
                for (std::size_t i = 0; i < F.count(); ++i)
                    scaled[i] = normal_form(ring, Poly::term(Fp(1), m) * gen_cols[g][i]);
                known.insert(column_coords(F, scaled, d));
            }
        }
        for (std::size_t j = 0; j < K.cols(); ++j) {
            std::vector<Fp> v = K.column(j);
            if (!known.insert(v)) continue;
            gen_degrees.push_back(d);
            gen_cols.push_back(column_from_coords(F, v, d));
            last_new = d;
        }
        // keep searching until two empty degrees certify the window
        if (d == dmax && last_new > dmax - 2 && degree_bound == std::nullopt) dmax = last_new + 2;
    }

    std::vector<std::vector<Poly>> entries(F.count(), std::vector<Poly>(gen_cols.size()));
    for (std::size_t j = 0; j < gen_cols.size(); ++j)
        for (std::size_t i = 0; i < F.count(); ++i) entries[i][j] = gen_cols[j][i];
    out.gens = GradedMap(FreeGraded{ring, gen_degrees}, F, std::move(entries));
    out.searched_to = dmax;
    out.stabilized = dmax >= last_new + 2;
    return out;
}

/// Strip unit entries by row/column elimination; drops the pivot generator
/// and relation.  Zero relation columns are discarded as well.
inline GradedMap minimize_presentation(const GradedMap& A0)
{
    FreeGraded src = A0.src(), tgt = A0.tgt();
    std::vector<std::vector<Poly>> e = A0.entries();
    const RingId ring = A0.ring();

    for (;;) {
        std::size_t pi = 0, pj = 0;
        bool found = false;
        for (std::size_t i = 0; i < tgt.count() && !found; ++i)
            for (std::size_t j = 0; j < src.count() && !found; ++j)
                if (!e[i][j].is_zero() && src.gens[j] == tgt.gens[i]) {
                    pi = i; pj = j; found = true;
                }
        if (!found) break;
        const Fp u = e[pi][pj].coeff(Monomial{});
        const Fp uinv = u.inv();
        // clear the pivot row with column operations
        for (std::size_t j = 0; j < src.count(); ++j) {
            if (j == pj || e[pi][j].is_zero()) continue;
            Poly f = uinv * e[pi][j];
            for (std::size_t i = 0; i < tgt.count(); ++i)
                e[i][j] = normal_form(ring, e[i][j] - f * e[i][pj]);
        }
        // clear the pivot column with row operations
        for (std::size_t i = 0; i < tgt.count(); ++i) {
            if (i == pi || e[i][pj].is_zero()) continue;
            Poly f = uinv * e[i][pj];
            for (std::size_t j = 0; j < src.count(); ++j)
                e[i][j] = normal_form(ring, e[i][j] - f * e[pi][j]);
        }
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(pi));
        tgt.gens.erase(tgt.gens.begin() + static_cast<std::ptrdiff_t>(pi));
        for (auto& row : e) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pj));
        src.gens.erase(src.gens.begin() + static_cast<std::ptrdiff_t>(pj));
    }

    // drop zero columns
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < src.count(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < tgt.count(); ++i)
            if (!e[i][j].is_zero()) { zero = false; break; }
        if (!zero) keep.push_back(j);
    }
    if (keep.size() != src.count()) {
        std::vector<int> gens;
        std::vector<std::vector<Poly>> e2(tgt.count());
        for (std::size_t j : keep) gens.push_back(src.gens[j]);
        for (std::size_t i = 0; i < tgt.count(); ++i)
            for (std::size_t j : keep) e2[i].push_back(e[i][j]);
        src.gens = std::move(gens);
        e = std::move(e2);
    }
    return GradedMap(std::move(src), std::move(tgt), std::move(e));
}

/// Subset of columns minimally generating the same image submodule
/// (graded Nakayama, processed degree by degree).
inline GradedMap minimal_generating_columns(const GradedMap& B)
{
    const FreeGraded& F = B.tgt();
    const RingId ring = B.ring();
    std::vector<std::size_t> order(B.src().count());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return B.src().gens[a] < B.src().gens[b];
    });

    std::vector<std::size_t> kept;
    std::size_t pos = 0;
    while (pos < order.size()) {
        const int d = B.src().gens[order[pos]];
        Subspace span(F.piece_dim(d));
        for (std::size_t g : kept) {
            const int e = d - B.src().gens[g];
            if (e <= 0) continue;
            FreeColumn col = B.column(g);
            for (const Monomial& m : ring_basis(ring, e)) {
                FreeColumn scaled(F.count());
                for (std::size_t i = 0; i < F.count(); ++i)
                    scaled[i] = normal_form(ring, Poly::term(Fp(1), m) * col[i]);
                span.insert(column_coords(F, scaled, d));
            }
        }
        while (pos < order.size() && B.src().gens[order[pos]] == d) {
            const std::size_t j = order[pos];
            if (span.insert(column_coords(F, B.column(j), d))) kept.push_back(j);
            ++pos;
        }
    }

    std::sort(kept.begin(), kept.end());
    std::vector<int> gens;
    std::vector<std::vector<Poly>> e(F.count());
    for (std::size_t j : kept) gens.push_back(B.src().gens[j]);
    for (std::size_t i = 0; i < F.count(); ++i)
        for (std::size_t j : kept) e[i].push_back(B.entry(i, j));
    return GradedMap(FreeGraded{ring, gens}, F, std::move(e));
}

/// Same cokernel, no unit entries, and relations minimally generating.
inline PresentedModule minimal_presentation(const PresentedModule& M)
{
    GradedMap a = minimize_presentation(M.presentation);
    return {minimal_generating_columns(a)};
}

/// The submodule im(B) re-presented: generators = columns of B (assumed
/// minimal), relations = kernel of B.
inline PresentedModule submodule_module(const GradedMap& B, std::optional<int> bound = std::nullopt)
{
    KernelResult k = kernel_of_map(B, bound);
    if (!k.stabilized)
        throw std::runtime_error("submodule_module: kernel search not stabilized by degree " +
                                 std::to_string(k.searched_to));
    return {k.gens};
}

inline std::size_t minimal_generator_count(const PresentedModule& M)
{
    return minimal_presentation(M).f0().count();
}

inline bool has_free_summand(const PresentedModule& M)
{
    PresentedModule m = minimal_presentation(M);
    for (std::size_t i = 0; i < m.f0().count(); ++i) {
        bool zero_row = true;
        for (std::size_t j = 0; j < m.f1().count(); ++j)
            if (!m.presentation.entry(i, j).is_zero()) { zero_row = false; break; }
        if (zero_row) return true;
    }
    return m.f0().count() > 0 && m.f1().count() == 0;
}

// ---------------------------------------------------------------------------
// Betti tables

struct BettiTable {
    int imin = 0, imax = 0;
    std::map<std::pair<int, int>, long> beta;  // (homological i, internal j)

    long get(int i, int j) const
    {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
    void add(int i, int j, long v)
    {
        if (v) beta[{i, j}] += v;
    }

    bool operator==(const BettiTable& o) const
    {
        for (const auto& [k, v] : beta)
            if (v != o.get(k.first, k.second)) return false;
        for (const auto& [k, v] : o.beta)
            if (v != get(k.first, k.second)) return false;
        return true;
    }

    /// Rows are j - i, columns run left to right from imax down to imin.
    std::string formatted() const
    {
        int rlo = 0, rhi = 0;
        for (const auto& [k, v] : beta) {
            rlo = std::min(rlo, k.second - k.first);
            rhi = std::max(rhi, k.second - k.first);
        }
        std::ostringstream os;
        os << "      ";
        for (int i = imax; i >= imin; --i) os << '\t' << i;
        os << '\n';
        for (int r = rlo; r <= rhi; ++r) {
            os << r << "    ";
            for (int i = imax; i >= imin; --i) {
                long v = get(i, i + r);
                os << '\t';
                if (v) os << v; else os << '-';
            }
            os << '\n';
        }
        return os.str();
    }
};

struct Resolution {
    PresentedModule minimized;     // minimal presentation of the input
    std::vector<GradedMap> maps;   // maps[i]: F_{i+1} -> F_i, maps[0] = presentation
    BettiTable betti;

    const FreeGraded& step(std::size_t i) const
    {
        return i == 0 ? maps[0].tgt() : maps[i - 1].src();
    }
};

/// Minimal free resolution out to F_length, together with its Betti window.
inline Resolution minimal_resolution(const PresentedModule& M, int length,
                                     std::optional<int> degree_bound = std::nullopt)
{
    if (length < 0) throw std::invalid_argument("minimal_resolution: negative length");
    Resolution res;
    res.minimized = minimal_presentation(M);
    res.maps.push_back(res.minimized.presentation);
    for (int i = 1; i < length; ++i) {
        KernelResult k = kernel_of_map(res.maps.back(), degree_bound);
        if (!k.stabilized)
            throw std::runtime_error("minimal_resolution: kernel search not stabilized at step " +
                                     std::to_string(i) + " (searched to degree " +
                                     std::to_string(k.searched_to) + ")");
        res.maps.push_back(k.gens);
    }
    res.betti.imin = 0;
    res.betti.imax = length;
    for (int i = 0; i <= length; ++i) {
        if (i > 0 && static_cast<std::size_t>(i) > res.maps.size()) break;
        const FreeGraded& F = i == 0 ? res.maps[0].tgt() : res.maps[static_cast<std::size_t>(i) - 1].src();
        for (int g : F.gens) res.betti.add(i, g, 1);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Hilbert data

struct HilbertData {
    std::map<int, long> numerator;  // Laurent coefficients of Q_M
    long nu = 0;
    long e = 0;
    bool ulrich = false;

    long q(int d) const
    {
        auto it = numerator.find(d);
        return it == numerator.end() ? 0 : it->second;
    }
    std::string numerator_str() const
    {
        if (numerator.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : numerator) {
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            long m = c < 0 ? -c : c;
            if (m != 1 || d == 0) os << m;
            if (d == 1) os << "t";
            else if (d != 0) os << "t^" << (d < 0 ? "(" + std::to_string(d) + ")" : std::to_string(d));
            first = false;
        }
        return os.str();
    }
};

/// Hilbert numerator Q_M with H_M(t)(1-t) = Q_M(t), generator count and
/// multiplicity e = Q_M(1); flags the Ulrich case nu = e.
inline HilbertData hilbert_data(const PresentedModule& M, std::optional<int> window_bound = std::nullopt)
{
    PresentedModule m = minimal_presentation(M);
    HilbertData out;
    out.nu = static_cast<long>(m.f0().count());
    if (m.f0().count() == 0) return out;

    const int dmin = m.f0().min_gen();
    int top = std::max(m.f0().max_gen(), m.f1().count() ? m.f1().max_gen() : m.f0().max_gen());
    const int bound = window_bound.value_or(top + 3);

    long prev = 0;
    std::vector<long> h;
    for (int d = dmin; d <= bound; ++d) h.push_back(static_cast<long>(piece_dim(m, d)));
    if (h.size() >= 2 && h[h.size() - 1] != h[h.size() - 2])
        throw std::runtime_error("hilbert_data: Hilbert function not stabilized by degree " +
                                 std::to_string(bound));
    for (std::size_t k = 0; k < h.size(); ++k) {
        long diff = h[k] - prev;
        if (diff) out.numerator[dmin + static_cast<int>(k)] = diff;
        prev = h[k];
    }
    out.e = prev;  // = sum of numerator coefficients
    out.ulrich = (out.nu == out.e);
    return out;
}

// ---------------------------------------------------------------------------
// Twists, duals, syzygies, tau

inline PresentedModule twist(const PresentedModule& M, int n)
{
    return {M.presentation.twist(n)};
}

/// M* = Hom(M, R) presented via the kernel of the transposed presentation.
inline PresentedModule dual(const PresentedModule& M)
{
    GradedMap a = minimize_presentation(M.presentation);
    KernelResult k = kernel_of_map(a.transpose_dual());
    if (!k.stabilized) throw std::runtime_error("dual: kernel search not stabilized");
    return submodule_module(k.gens);
}

/// First syzygy: im(presentation) re-presented by its own relations.
inline PresentedModule syzygy(const PresentedModule& M)
{
    PresentedModule m = minimal_presentation(M);
    return submodule_module(m.presentation);
}

inline PresentedModule syzygy_power(PresentedModule M, int n)
{
    for (int i = 0; i < n; ++i) M = syzygy(M);
    return M;
}

/// Cosyzygy via dual-syzygy-dual; input must be MCM.
inline PresentedModule cosyzygy(const PresentedModule& M)
{
    return dual(syzygy(dual(M)));
}

/// tau = (1)[-1]: first syzygy twisted by the Gorenstein a-invariant 1.
inline PresentedModule tau_module(const PresentedModule& M)
{
    return twist(syzygy(M), 1);
}

/// Residue field k = R/(x,y,z) as a cyclic module in degree 0.
inline PresentedModule k_module()
{
    FreeGraded F0{RingId::R(), {0}};
    FreeGraded F1{RingId::R(), {1, 1, 1}};
    return {GradedMap(F1, F0, {{Poly::x(), Poly::y(), Poly::z()}})};
}

/// MCM approximation of k, computed as cosyzygy(syzygy(k)).
inline PresentedModule stabilize_k()
{
    return cosyzygy(syzygy(k_module()));
}

/// Betti numbers of homological degrees [-back, forward]: the forward part
/// from the minimal resolution, the backward part by reading generator
/// degrees of iterated cosyzygies.
inline BettiTable complete_betti(const PresentedModule& M, int back, int forward)
{
    BettiTable t = minimal_resolution(M, forward).betti;
    t.imin = -back;
    t.imax = forward;
    PresentedModule cur = M;
    for (int j = 1; j <= back; ++j) {
        cur = cosyzygy(cur);
        PresentedModule m = minimal_presentation(cur);
        for (int g : m.f0().gens) t.add(-j, g, 1);
    }
    return t;
}

} // namespace fourpoints

#endif
