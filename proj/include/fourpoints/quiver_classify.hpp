// The classification side of the quiver engine: constructors for every named
// indecomposable (preprojectives, preinjectives, tube modules), Krull-Schmidt
// decomposition by Fitting splittings, canonical identification, and the
// four-subspace normal form.
#ifndef FOURPOINTS_QUIVER_CLASSIFY_HPP
#define FOURPOINTS_QUIVER_CLASSIFY_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fourpoints/quiver.hpp"
#include "fourpoints/ring.hpp"

namespace fourpoints {

// ---------------------------------------------------------------------------
// Named indecomposables

struct IndecName {
    enum class Kind { proj, inj, reg_hom, reg_exc };
    Kind kind = Kind::proj;
    int vertex = 0;     // proj/inj: which P(i) or I(i)
    int steps = 0;      // proj: tau^{-steps} P(i); inj: tau^{steps} I(i)
    ProjPair t;         // tube parameter
    int length = 1;     // uniserial length r
    int sign = +1;      // exceptional tube socle

    static IndecName Proj(int i, int m = 0) { return {Kind::proj, i, m, ProjPair(), 1, +1}; }
    static IndecName Inj(int i, int m = 0) { return {Kind::inj, i, m, ProjPair(), 1, +1}; }
    static IndecName RegHom(const ProjPair& t, int r)
    {
        return {Kind::reg_hom, 0, 0, t, r, +1};
    }
    static IndecName RegExc(const ProjPair& t, int r, int sign)
    {
        return {Kind::reg_exc, 0, 0, t, r, sign};
    }

    bool operator==(const IndecName& o) const
    {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::proj:
            case Kind::inj: return vertex == o.vertex && steps == o.steps;
            case Kind::reg_hom: return t == o.t && length == o.length;
            case Kind::reg_exc: return t == o.t && length == o.length && sign == o.sign;
        }
        return false;
    }
    bool operator<(const IndecName& o) const
    {
        auto key = [](const IndecName& n) {
            return std::tuple<int, int, int, std::uint32_t, std::uint32_t, int, int>(
                static_cast<int>(n.kind), n.vertex, n.steps, n.t.c0.raw(), n.t.c1.raw(), n.length,
                n.sign);
        };
        return key(*this) < key(o);
    }

    std::string str() const
    {
        std::ostringstream os;
        switch (kind) {
            case Kind::proj:
                if (steps) os << "tau^-" << steps << " ";
                os << "P(" << vertex << ")";
                break;
            case Kind::inj:
                if (steps) os << "tau^" << steps << " ";
                os << "I(" << vertex << ")";
                break;
            case Kind::reg_hom:
                os << "R_{" << t.str() << "}<" << length << ">";
                break;
            case Kind::reg_exc:
                os << "S_{" << t.str() << "}<" << length << ">^" << (sign >= 0 ? "+" : "-");
                break;
        }
        return os.str();
    }
};

/// The six simple regular representations in the rank-two tubes.
inline Rep exceptional_simple(const ProjPair& t, int sign)
{
    auto with = [](int a, int b) {
        Rep r(1, {0, 0, 0, 0});
        for (int i : {a, b}) {
            r.dims[static_cast<std::size_t>(i)] = 1;
            r.maps[static_cast<std::size_t>(i) - 1] = Mat(1, 1);
            r.maps[static_cast<std::size_t>(i) - 1](0, 0) = Fp(1);
        }
        for (int i = 1; i <= 4; ++i)
            if (r.dims[static_cast<std::size_t>(i)] == 0) r.maps[static_cast<std::size_t>(i) - 1] = Mat(1, 0);
        return r;
    };
    if (t == ProjPair::zero()) return sign >= 0 ? with(1, 4) : with(2, 3);
    if (t == ProjPair::one()) return sign >= 0 ? with(2, 4) : with(1, 3);
    if (t == ProjPair::infinity()) return sign >= 0 ? with(3, 4) : with(1, 2);
    throw std::invalid_argument("exceptional_simple: t must be singular");
}

/// Four-lines representation of the fundamental family member R_t (= R_t^+
/// at the singular parameters).
inline Rep fundamental_rep(const ProjPair& t)
{
    return four_lines_rep({{{Fp(0), Fp(1)}, {Fp(1), Fp(1)}, {Fp(1), Fp(0)}, {t.c0, t.c1}}});
}

/// Length-two modules R_t^± of the rank-two tubes, in the normalization with
/// R_t^+ = R_t.
inline Rep exceptional_pair_rep(const ProjPair& t, int sign)
{
    auto lines = [](std::array<std::array<int, 2>, 4> v) {
        std::array<std::array<Fp, 2>, 4> out;
        for (int i = 0; i < 4; ++i)
            out[static_cast<std::size_t>(i)] = {Fp(v[static_cast<std::size_t>(i)][0]), Fp(v[static_cast<std::size_t>(i)][1])};
        return four_lines_rep(out);
    };
    if (t == ProjPair::zero())
        return sign >= 0 ? lines({{{0, 1}, {1, 1}, {1, 0}, {0, 1}}})
                         : lines({{{1, 1}, {0, 1}, {0, 1}, {1, 0}}});
    if (t == ProjPair::one())
        return sign >= 0 ? lines({{{0, 1}, {1, 1}, {1, 0}, {1, 1}}})
                         : lines({{{1, 1}, {0, 1}, {1, 1}, {1, 0}}});
    if (t == ProjPair::infinity())
        // the minus member carries the collision on arrows 1,2; the remaining
        // two lines must stay distinct or the configuration splits
        return sign >= 0 ? lines({{{0, 1}, {1, 1}, {1, 0}, {1, 0}}})
                         : lines({{{1, 0}, {1, 0}, {0, 1}, {1, 1}}});
    throw std::invalid_argument("exceptional_pair_rep: t must be singular");
}

/// Representation for a classification name.  Tube modules of length >= 2
/// are built along their unique nontrivial extension ladders.
inline Rep named_rep(const IndecName& name)
{
    switch (name.kind) {
        case IndecName::Kind::proj:
            return tau_inv_power(projective_rep(name.vertex), name.steps);
        case IndecName::Kind::inj:
            return tau_power(injective_rep(name.vertex), name.steps);
        case IndecName::Kind::reg_hom: {
            if (name.t.is_singular_parameter())
                throw std::invalid_argument("named_rep: homogeneous tube parameter must avoid 0, 1, inf");
            Rep base = fundamental_rep(name.t);
            Rep cur = base;
            for (int r = 2; r <= name.length; ++r) {
                std::vector<std::array<Mat, 4>> cls = ext1_rep_basis(base, cur);
                if (cls.size() != 1)
                    throw std::runtime_error("named_rep: expected a unique extension class, found " +
                                             std::to_string(cls.size()));
                cur = extension_rep(base, cur, cls[0]);
            }
            return cur;
        }
        case IndecName::Kind::reg_exc: {
            if (name.length == 1) return exceptional_simple(name.t, name.sign);
            Rep cur = exceptional_pair_rep(name.t, name.sign);
            for (int r = 3; r <= name.length; ++r) {
                // the quotient alternates between the two simples; pick the
                // one carrying the unique nontrivial class
                std::vector<std::array<Mat, 4>> plus = ext1_rep_basis(exceptional_simple(name.t, +1), cur);
                std::vector<std::array<Mat, 4>> minus = ext1_rep_basis(exceptional_simple(name.t, -1), cur);
                if (plus.size() + minus.size() != 1)
                    throw std::runtime_error("named_rep: expected a unique extension class, found " +
                                             std::to_string(plus.size() + minus.size()));
                if (!plus.empty())
                    cur = extension_rep(exceptional_simple(name.t, +1), cur, plus[0]);
                else
                    cur = extension_rep(exceptional_simple(name.t, -1), cur, minus[0]);
            }
            return cur;
        }
    }
    throw std::logic_error("named_rep: unreachable");
}

// ---------------------------------------------------------------------------
// Decomposition

namespace detail {

/// Independent columns spanning the column space.
inline Mat column_space_basis(const Mat& m)
{
    Subspace s(m.rows());
    std::vector<std::vector<Fp>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<Fp> c = m.column(j);
        if (s.insert(c)) cols.push_back(std::move(c));
    }
    return Mat::from_columns(m.rows(), cols);
}

/// Restrict M to the subrepresentation spanned by the given vertex bases.
inline Rep subrep(const Rep& M, const std::array<Mat, 5>& basis)
{
    Rep out;
    for (int v = 0; v < 5; ++v) out.dims[static_cast<std::size_t>(v)] = basis[static_cast<std::size_t>(v)].cols();
    for (int i = 0; i < 4; ++i) {
        Mat img = M.maps[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i) + 1];
        Mat arrows(out.dims[0], out.dims[static_cast<std::size_t>(i) + 1]);
        for (std::size_t c = 0; c < img.cols(); ++c) {
            auto x = solve(basis[0], img.column(c));
            if (!x.has_value()) throw std::logic_error("subrep: not closed under the arrows");
            for (std::size_t r = 0; r < arrows.rows(); ++r) arrows(r, c) = (*x)[r];
        }
        out.maps[static_cast<std::size_t>(i)] = arrows;
    }
    return out;
}

inline Mat rep_matrix_power(const Mat& m, std::size_t e)
{
    Mat acc = Mat::identity(m.rows());
    Mat base = m;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace detail

/// Split M along the Fitting decomposition of an endomorphism, if nontrivial.
inline std::optional<std::pair<Rep, Rep>> fitting_split(const Rep& M, const RepHom& theta)
{
    const std::size_t n = M.total_dim();
    std::array<Mat, 5> kerb, imb;
    std::size_t kdim = 0;
    for (int v = 0; v < 5; ++v) {
        Mat p = detail::rep_matrix_power(theta[static_cast<std::size_t>(v)], n);
        kerb[static_cast<std::size_t>(v)] = kernel_basis(p);
        imb[static_cast<std::size_t>(v)] = detail::column_space_basis(p);
        kdim += kerb[static_cast<std::size_t>(v)].cols();
    }
    if (kdim == 0 || kdim == n) return std::nullopt;
    return std::make_pair(detail::subrep(M, kerb), detail::subrep(M, imb));
}

inline Fp determinant(const Mat& A);

namespace detail {

using UPoly = std::vector<Fp>;
inline UPoly up_mul(const UPoly& a, const UPoly& b);
inline std::vector<Fp> up_roots(UPoly f, Rng& rng);

/// char poly det(uI - A) by interpolation at n+1 points.
inline UPoly char_poly_impl(const Mat& A)
{
    const std::size_t n = A.rows();
    std::vector<Fp> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        Fp u(static_cast<long long>(k));
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? u : Fp(0)) - A(i, j);
        xs.push_back(u);
        ys.push_back(determinant(m));
    }
    Mat vand(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Fp pw(1);
        for (std::size_t j = 0; j <= n; ++j) {
            vand(i, j) = pw;
            pw *= xs[i];
        }
    }
    auto c = solve(vand, ys);
    if (!c.has_value()) throw std::logic_error("char_poly: interpolation failed");
    return *c;
}

} // namespace detail

/// Indecomposable summands of M (seeded, deterministic).  Endomorphisms are
/// shifted by the roots of their characteristic polynomial before the Fitting
/// split; a summand decomposition always separates eigenvalues this way.
/// Every result piece survived the sweep over the endomorphism basis plus
/// seeded random endomorphisms.
inline std::vector<Rep> decompose_rep(const Rep& M, std::uint64_t seed = 0, int samples = 8)
{
    if (M.total_dim() == 0) return {};
    std::vector<RepHom> endos = hom_rep(M, M);
    auto combine = [&](const std::vector<Fp>& c) {
        RepHom f;
        for (int v = 0; v < 5; ++v) {
            Mat acc(M.dims[static_cast<std::size_t>(v)], M.dims[static_cast<std::size_t>(v)]);
            for (std::size_t k = 0; k < endos.size(); ++k)
                acc = acc + c[k] * endos[k][static_cast<std::size_t>(v)];
            f[static_cast<std::size_t>(v)] = acc;
        }
        return f;
    };

    auto recurse = [&](const Rep& a, const Rep& b) {
        std::vector<Rep> out = decompose_rep(a, seed + 1, samples);
        std::vector<Rep> more = decompose_rep(b, seed + 1, samples);
        out.insert(out.end(), more.begin(), more.end());
        return out;
    };

    Rng rng(seed ^ 0xdecdecull);
    auto try_split = [&](const RepHom& theta) -> std::optional<std::pair<Rep, Rep>> {
        // eigenvalues of theta, vertex by vertex
        detail::UPoly chi = {Fp(1)};
        for (int v = 0; v < 5; ++v)
            if (M.dims[static_cast<std::size_t>(v)])
                chi = detail::up_mul(chi, detail::char_poly_impl(theta[static_cast<std::size_t>(v)]));
        for (Fp lambda : detail::up_roots(chi, rng)) {
            RepHom shifted = theta;
            for (int v = 0; v < 5; ++v) {
                Mat& m = shifted[static_cast<std::size_t>(v)];
                for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
            }
            auto split = fitting_split(M, shifted);
            if (split) return split;
        }
        return std::nullopt;
    };

    for (const RepHom& theta : endos) {
        auto split = try_split(theta);
        if (split) return recurse(split->first, split->second);
    }
    for (int s = 0; s < samples; ++s) {
        std::vector<Fp> c(endos.size());
        for (Fp& x : c) x = rng.field_element();
        auto split = try_split(combine(c));
        if (split) return recurse(split->first, split->second);
    }
    return {M};
}

inline std::vector<std::pair<Rep, int>> decompose_with_multiplicities(const Rep& M,
                                                                      std::uint64_t seed = 0)
{
    std::vector<Rep> pieces = decompose_rep(M, seed);
    std::vector<std::pair<Rep, int>> grouped;
    for (const Rep& p : pieces) {
        bool found = false;
        for (auto& [rep, mult] : grouped)
            if (iso_rep(rep, p, seed).iso) {
                ++mult;
                found = true;
                break;
            }
        if (!found) grouped.emplace_back(p, 1);
    }
    return grouped;
}

// ---------------------------------------------------------------------------
// Univariate polynomial roots over F_p (for the tube-parameter recovery)

namespace detail {

using UPoly = std::vector<Fp>;  // coefficients, ascending

inline void up_trim(UPoly& f)
{
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}
inline int up_deg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

inline UPoly up_mul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, Fp(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    up_trim(c);
    return c;
}

inline UPoly up_mod(UPoly a, const UPoly& m)
{
    up_trim(a);
    while (up_deg(a) >= up_deg(m)) {
        Fp f = a.back() / m.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= f * m[i];
        up_trim(a);
    }
    return a;
}

inline UPoly up_gcd(UPoly a, UPoly b)
{
    up_trim(a);
    up_trim(b);
    while (!b.empty()) {
        UPoly r = up_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Fp inv = a.back().inv();
        for (Fp& c : a) c *= inv;
    }
    return a;
}

inline UPoly up_powmod(UPoly base, std::uint64_t e, const UPoly& m)
{
    UPoly acc = {Fp(1)};
    base = up_mod(std::move(base), m);
    while (e) {
        if (e & 1) acc = up_mod(up_mul(acc, base), m);
        base = up_mod(up_mul(base, base), m);
        e >>= 1;
    }
    return acc;
}

/// All roots in F_p of a nonzero polynomial (equal-degree splitting on the
/// linear-factor part; deterministic per seed).
inline std::vector<Fp> up_roots(UPoly f, Rng& rng)
{
    up_trim(f);
    std::vector<Fp> out;
    if (up_deg(f) < 1) return out;
    // isolate the product of distinct linear factors: gcd(f, x^p - x)
    UPoly x = {Fp(0), Fp(1)};
    UPoly xp = up_powmod(x, field_prime(), f);
    if (xp.size() < 2) xp.resize(2, Fp(0));
    xp[1] -= Fp(1);  // x^p - x mod f
    UPoly g = up_gcd(f, xp);
    if (up_deg(g) < 1) return out;

    std::vector<UPoly> stack = {g};
    while (!stack.empty()) {
        UPoly h = stack.back();
        stack.pop_back();
        if (up_deg(h) == 1) {
            out.push_back(-h[0] / h[1]);
            continue;
        }
        for (;;) {
            Fp a = rng.field_element();
            UPoly shifted = {a, Fp(1)};
            UPoly w = up_powmod(shifted, (field_prime() - 1) / 2, h);
            if (w.empty()) w = {Fp(0)};
            w[0] -= Fp(1);
            UPoly d = up_gcd(h, w);
            if (up_deg(d) >= 1 && up_deg(d) < up_deg(h)) {
                // split h = d * (h/d)
                UPoly q = h;
                // synthetic division q / d
                UPoly quot(q.size() - d.size() + 1, Fp(0));
                while (up_deg(q) >= up_deg(d)) {
                    Fp fq = q.back() / d.back();
                    std::size_t shift = q.size() - d.size();
                    quot[shift] = fq;
                    for (std::size_t i = 0; i < d.size(); ++i) q[shift + i] -= fq * d[i];
                    up_trim(q);
                }
                stack.push_back(d);
                up_trim(quot);
                stack.push_back(quot);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](Fp a, Fp b) { return a.raw() < b.raw(); });
    return out;
}

inline Fp up_eval(const UPoly& f, Fp x)
{
    Fp acc(0);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

} // namespace detail

inline Fp determinant(const Mat& A)
{
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant: square matrix required");
    Mat R = A;
    Fp det(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
        std::size_t piv = r;
        while (piv < R.rows() && R(piv, c).is_zero()) ++piv;
        if (piv == R.rows()) return Fp(0);
        if (piv != r) {
            for (std::size_t j = c; j < R.cols(); ++j) std::swap(R(r, j), R(piv, j));
            det = -det;
        }
        det *= R(r, c);
        const Fp inv = R(r, c).inv();
        for (std::size_t i = r + 1; i < R.rows(); ++i) {
            const Fp f = R(i, c) * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < R.cols(); ++j) R(i, j) -= f * R(r, j);
        }
        ++r;
    }
    return det;
}

// ---------------------------------------------------------------------------
// Identification

/// Name an indecomposable representation.  Negative defect walks tau to a
/// projective, positive defect walks tau^{-1} to an injective; defect zero is
/// regular, resolved through the exceptional simples or, in the homogeneous
/// case, by interpolating the rank-drop determinant in the tube parameter.
inline IndecName identify(const Rep& M, std::uint64_t seed = 0)
{
    if (M.total_dim() == 0) throw std::invalid_argument("identify: zero representation");
    const long d = defect(M);

    auto matches = [&](const Rep& cur, const Rep& model) {
        return cur.dims == model.dims && iso_rep(cur, model, seed).iso;
    };

    if (d < 0) {
        Rep cur = M;
        for (int m = 0; m <= 64; ++m) {
            for (int i = 0; i <= 4; ++i)
                if (matches(cur, projective_rep(i))) return IndecName::Proj(i, m);
            cur = tau_rep(cur);
            if (cur.total_dim() == 0)
                throw std::runtime_error("identify: tau-orbit of a negative-defect module died before reaching a projective");
        }
        throw std::runtime_error("identify: preprojective walk exceeded 64 steps");
    }
    if (d > 0) {
        Rep cur = M;
        for (int m = 0; m <= 64; ++m) {
            for (int i = 0; i <= 4; ++i)
                if (matches(cur, injective_rep(i))) return IndecName::Inj(i, m);
            cur = tau_inv_rep(cur);
            if (cur.total_dim() == 0)
                throw std::runtime_error("identify: tau-inverse orbit of a positive-defect module died before reaching an injective");
        }
        throw std::runtime_error("identify: preinjective walk exceeded 64 steps");
    }

    // regular: exceptional tubes are detected through their simples
    const long d0 = static_cast<long>(M.dims[0]);
    for (const ProjPair& t : singular_members())
        for (int sign : {+1, -1})
            if (hom_rep_dim(exceptional_simple(t, sign), M) > 0) {
                IndecName name = IndecName::RegExc(t, static_cast<int>(d0), sign);
                if (iso_rep(named_rep(name), M, seed).iso) return name;
                throw std::runtime_error("identify: exceptional-tube candidate " + name.str() +
                                         " failed the isomorphism check");
            }

    if (d0 % 2 != 0)
        throw std::runtime_error("identify: regular module with odd central dimension matched no exceptional tube");
    const int r = static_cast<int>(d0 / 2);

    // dim Hom(R_t, M) >= 1 is det = 0 for the square intertwiner system;
    // interpolate det in the chart t = (u, 1).  The fourth line is kept as
    // the raw vector [u, 1] so the determinant stays polynomial in u.
    const int degree = static_cast<int>(d0);
    std::vector<Fp> xs, ys;
    for (int k = 0; k <= degree; ++k) {
        Fp u(2 + k);
        Rep sample = four_lines_rep({{{Fp(0), Fp(1)}, {Fp(1), Fp(1)}, {Fp(1), Fp(0)}, {u, Fp(1)}}});
        Mat sys = detail::intertwiner_system(sample, M);
        if (sys.rows() != sys.cols())
            throw std::logic_error("identify: intertwiner system is not square on a defect-zero module");
        xs.push_back(u);
        ys.push_back(determinant(sys));
    }
    Mat vand(xs.size(), xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Fp pw(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            vand(i, j) = pw;
            pw *= xs[i];
        }
    }
    auto coeffs = solve(vand, ys);
    if (!coeffs.has_value()) throw std::logic_error("identify: interpolation failed");
    Rng rng(seed ^ 0x700712ull);
    std::vector<Fp> roots = detail::up_roots(*coeffs, rng);
    for (Fp u : roots) {
        ProjPair t(u, Fp(1));
        if (t.is_singular_parameter()) continue;
        IndecName name = IndecName::RegHom(t, r);
        if (iso_rep(named_rep(name), M, seed).iso) return name;
    }
    throw std::runtime_error("identify: defect-zero module matched no tube (classification violated?)");
}

// ---------------------------------------------------------------------------
// Four subspace normal form

struct FourLinesNormal {
    ProjPair t;  // image of the fourth line, the cross-ratio invariant
    Mat basis_change;
};

/// Basis change carrying three pairwise distinct lines of k^2 to [0:1],
/// [1:1], [1:0]; returns the image of the fourth.
inline FourLinesNormal four_lines_normalize(const std::array<std::array<Fp, 2>, 4>& lines)
{
    auto proportional = [](const std::array<Fp, 2>& a, const std::array<Fp, 2>& b) {
        return (a[0] * b[1] - a[1] * b[0]).is_zero();
    };
    for (int i = 0; i < 3; ++i) {
        if (lines[static_cast<std::size_t>(i)][0].is_zero() && lines[static_cast<std::size_t>(i)][1].is_zero())
            throw std::invalid_argument("four_lines_normalize: zero vector is not a line");
        for (int j = i + 1; j < 3; ++j)
            if (proportional(lines[static_cast<std::size_t>(i)], lines[static_cast<std::size_t>(j)]))
                throw std::invalid_argument("four_lines_normalize: first three lines must be pairwise distinct");
    }
    const auto &v1 = lines[0], &v2 = lines[1], &v3 = lines[2], &v4 = lines[3];
    // v2 = a v1 + b v3; target basis (b v3, a v1)
    Mat m(2, 2);
    m(0, 0) = v1[0];
    m(1, 0) = v1[1];
    m(0, 1) = v3[0];
    m(1, 1) = v3[1];
    auto ab = solve(m, {v2[0], v2[1]});
    if (!ab.has_value()) throw std::logic_error("four_lines_normalize: unexpected singular system");
    const Fp a = (*ab)[0], b = (*ab)[1];
    Mat p(2, 2);
    p(0, 0) = b * v3[0];
    p(1, 0) = b * v3[1];
    p(0, 1) = a * v1[0];
    p(1, 1) = a * v1[1];
    Mat g = inverse(p).value();
    std::vector<Fp> w = g.apply({v4[0], v4[1]});
    if (w[0].is_zero() && w[1].is_zero())
        throw std::invalid_argument("four_lines_normalize: zero vector is not a line");
    return {ProjPair(w[0], w[1]), g};
}

} // namespace fourpoints

#endif
