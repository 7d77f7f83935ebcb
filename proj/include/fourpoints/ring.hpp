// The ambient ring S = k[x,y,z], the pencil of conics Q_t = t0*(y^2-z^2) +
// t1*(x^2-y^2) through the four points [±1:±1:±1], the hypersurface rings
// S/(Q_s), and the coordinate ring R = S/(Q_0, Q_inf) with canonical normal
// forms and graded-piece bases.
#ifndef FOURPOINTS_RING_HPP
#define FOURPOINTS_RING_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourpoints/mat.hpp"
#include "fourpoints/poly.hpp"

namespace fourpoints {

/// Point of P^1 scaled so the first nonzero coordinate is 1; usable as a key.
struct ProjPair {
    Fp c0, c1;

    ProjPair() : c0(Fp(0)), c1(Fp(1)) {}
    ProjPair(Fp t0, Fp t1)
    {
        if (t0.is_zero() && t1.is_zero())
            throw std::invalid_argument("ProjPair: (0,0) is not a point of P^1");
        if (!t0.is_zero()) {
            c0 = Fp(1);
            c1 = t1 / t0;
        } else {
            c0 = Fp(0);
            c1 = Fp(1);
        }
    }
    ProjPair(long long t0, long long t1) : ProjPair(Fp(t0), Fp(t1)) {}

    static ProjPair zero() { return ProjPair(0, 1); }      // Q_0
    static ProjPair one() { return ProjPair(1, 1); }       // Q_1
    static ProjPair infinity() { return ProjPair(1, 0); }  // Q_inf

    bool operator==(const ProjPair& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const ProjPair& o) const { return !(*this == o); }
    bool operator<(const ProjPair& o) const
    {
        if (c0.raw() != o.c0.raw()) return c0.raw() < o.c0.raw();
        return c1.raw() < o.c1.raw();
    }

    bool is_singular_parameter() const
    {
        return *this == zero() || *this == one() || *this == infinity();
    }

    std::string str() const
    {
        if (*this == infinity()) return "inf";
        if (c0.is_zero()) return "0";
        return c1 == Fp(1) && c0 == Fp(1) ? "1" : "1:" + std::to_string(c1.raw());
    }
};

/// The pencil member Q_t = t0*Q_inf + t1*Q_0, homogeneous of degree 2.
inline Poly pencil(const ProjPair& t)
{
    Poly q_inf = Poly::term(Fp(1), {0, 2, 0}) - Poly::term(Fp(1), {0, 0, 2});
    Poly q_0 = Poly::term(Fp(1), {2, 0, 0}) - Poly::term(Fp(1), {0, 2, 0});
    return t.c0 * q_inf + t.c1 * q_0;
}

inline Poly pencil_raw(Fp t0, Fp t1)
{
    Poly q_inf = Poly::term(Fp(1), {0, 2, 0}) - Poly::term(Fp(1), {0, 0, 2});
    Poly q_0 = Poly::term(Fp(1), {2, 0, 0}) - Poly::term(Fp(1), {0, 2, 0});
    return t0 * q_inf + t1 * q_0;
}

/// Symmetric Gram matrix of a quadratic form (char != 2).
inline Mat gram_matrix(const Poly& q)
{
    if (q.homogeneous_degree() != 2) throw std::invalid_argument("gram_matrix: need a quadratic form");
    Mat g(3, 3);
    const Fp half = Fp(2).inv();
    g(0, 0) = q.coeff({2, 0, 0});
    g(1, 1) = q.coeff({0, 2, 0});
    g(2, 2) = q.coeff({0, 0, 2});
    g(0, 1) = g(1, 0) = half * q.coeff({1, 1, 0});
    g(0, 2) = g(2, 0) = half * q.coeff({1, 0, 1});
    g(1, 2) = g(2, 1) = half * q.coeff({0, 1, 1});
    return g;
}

/// Parameters of the three singular pencil members, each certified by a
/// Gram-rank drop.
inline std::vector<ProjPair> singular_members()
{
    std::vector<ProjPair> out = {ProjPair::zero(), ProjPair::one(), ProjPair::infinity()};
    for (const ProjPair& t : out)
        if (rank(gram_matrix(pencil(t))) == 3)
            throw std::logic_error("singular_members: Gram matrix unexpectedly nonsingular");
    return out;
}

class RingId {
public:
    enum class Kind { ambient, hypersurface, quotient };

    static RingId S() { return RingId(Kind::ambient, ProjPair()); }
    static RingId Ss(const ProjPair& s) { return RingId(Kind::hypersurface, s); }
    static RingId R() { return RingId(Kind::quotient, ProjPair()); }

    Kind kind() const { return kind_; }
    const ProjPair& parameter() const
    {
        if (kind_ != Kind::hypersurface) throw std::logic_error("RingId: no pencil parameter");
        return s_;
    }

    bool operator==(const RingId& o) const
    {
        if (kind_ != o.kind_) return false;
        return kind_ != Kind::hypersurface || s_ == o.s_;
    }
    bool operator!=(const RingId& o) const { return !(*this == o); }

    std::string str() const
    {
        switch (kind_) {
            case Kind::ambient: return "S";
            case Kind::quotient: return "R";
            case Kind::hypersurface: return "S/(Q_" + s_.str() + ")";
        }
        return "?";
    }

    /// a-invariant; the canonical module of R is R(1).
    int gorenstein_a() const
    {
        switch (kind_) {
            case Kind::ambient: return -3;
            case Kind::hypersurface: return -1;
            case Kind::quotient: return 1;
        }
        return 0;
    }

private:
    RingId(Kind k, ProjPair s) : kind_(k), s_(s) {}
    Kind kind_;
    ProjPair s_;
};

namespace detail {

inline bool monomial_is_normal(const RingId& ring, const Monomial& m)
{
    switch (ring.kind()) {
        case RingId::Kind::ambient:
            return true;
        case RingId::Kind::quotient:
            return m.b <= 1 && m.c <= 1;
        case RingId::Kind::hypersurface:
            // rewrite rule eliminates x^2 when Q_s contains it, else y^2
            return ring.parameter().c1.is_zero() ? m.b <= 1 : m.a <= 1;
    }
    return true;
}

} // namespace detail

/// Canonical representative modulo the ring's defining ideal.  Idempotent;
/// the result is supported on the ring's monomial basis.
inline Poly normal_form(const RingId& ring, const Poly& f)
{
    switch (ring.kind()) {
        case RingId::Kind::ambient:
            return f;
        case RingId::Kind::quotient: {
            // y^2 -> x^2 and z^2 -> x^2 until y,z exponents are <= 1
            Poly out;
            for (const auto& [m, v] : f.terms())
                out.add_term({m.a + 2 * (m.b / 2) + 2 * (m.c / 2), m.b % 2, m.c % 2}, v);
            return out;
        }
        case RingId::Kind::hypersurface: {
            const ProjPair s = ring.parameter();
            Poly out;
            if (s.c1.is_zero()) {
                // Q_s = Q_inf = y^2 - z^2: rewrite y^2 -> z^2
                for (const auto& [m, v] : f.terms())
                    out.add_term({m.a, m.b % 2, m.c + 2 * (m.b / 2)}, v);
                return out;
            }
            // s1*x^2 + (s0-s1)*y^2 - s0*z^2 = 0: rewrite x^2
            const Fp alpha = (s.c1 - s.c0) / s.c1;  // coefficient of y^2
            const Fp beta = s.c0 / s.c1;            // coefficient of z^2
            for (const auto& [m, v] : f.terms()) {
                const int q = m.a / 2;
                // (x^2)^q = (alpha y^2 + beta z^2)^q, expanded binomially
                Fp binom(1);
                for (int k = 0; k <= q; ++k) {
                    Fp coeff = v * binom;
                    Fp ak = fp_pow(alpha, static_cast<std::uint64_t>(k));
                    Fp bk = fp_pow(beta, static_cast<std::uint64_t>(q - k));
                    out.add_term({m.a % 2, m.b + 2 * k, m.c + 2 * (q - k)}, coeff * ak * bk);
                    binom = binom * Fp(q - k) / Fp(k + 1);
                }
            }
            return out;
        }
    }
    return f;
}

/// Normal-form monomials of degree d in lex-descending order.
inline std::vector<Monomial> ring_basis(const RingId& ring, int d)
{
    if (d < 0) throw std::invalid_argument("ring_basis: negative degree");
    std::vector<Monomial> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
            Monomial m{a, b, d - a - b};
            if (detail::monomial_is_normal(ring, m)) out.push_back(m);
        }
    return out;
}

inline std::size_t ring_dim(const RingId& ring, int d)
{
    return d < 0 ? 0 : ring_basis(ring, d).size();
}

/// Coefficient vector of a normal-form poly on ring_basis(ring, d).
inline std::vector<Fp> coeff_vector(const RingId& ring, const Poly& f, int d)
{
    std::vector<Monomial> basis = ring_basis(ring, d);
    std::vector<Fp> v(basis.size(), Fp(0));
    std::size_t used = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        v[i] = f.coeff(basis[i]);
        if (!v[i].is_zero()) ++used;
    }
    if (used != f.terms().size())
        throw std::invalid_argument("coeff_vector: polynomial not supported on the degree-" +
                                    std::to_string(d) + " basis of " + ring.str());
    return v;
}

/// Matrix of multiplication by homogeneous f from the degree-d basis to the
/// degree-(d+deg f) basis.
inline Mat mult_matrix(const RingId& ring, const Poly& f, int d)
{
    auto e = f.homogeneous_degree();
    if (!f.is_zero() && !e.has_value()) throw std::invalid_argument("mult_matrix: inhomogeneous multiplier");
    const int fd = f.is_zero() ? 0 : *e;
    std::vector<Monomial> src = ring_basis(ring, d);
    std::vector<Monomial> tgt = ring_basis(ring, d + fd);
    Mat m(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        Poly prod = normal_form(ring, f * Poly::term(Fp(1), src[j]));
        std::vector<Fp> col = coeff_vector(ring, prod, d + fd);
        for (std::size_t i = 0; i < tgt.size(); ++i) m(i, j) = col[i];
    }
    return m;
}

/// The four lines l1 = x-y, l2 = y-z, l3 = x+y, l4 = y+z with Q_0 = l1*l3,
/// Q_inf = l2*l4; indices are cyclic.
inline std::array<Poly, 4> lines()
{
    Poly X = Poly::x(), Y = Poly::y(), Z = Poly::z();
    return {X - Y, Y - Z, X + Y, Y + Z};
}

inline const Poly& line(int i)  // 1-based cyclic index
{
    static const std::array<Poly, 4> ls = lines();
    return ls[static_cast<std::size_t>(((i - 1) % 4 + 4) % 4)];
}

/// p_i = common zero of (l_i, l_{i+1}), scaled into {±1} coordinates with
/// leading coordinate +1.
inline std::array<std::array<Fp, 3>, 4> points()
{
    std::array<std::array<Fp, 3>, 4> pts;
    for (int i = 1; i <= 4; ++i) {
        const Poly& u = line(i);
        const Poly& v = line(i + 1);
        Mat a(2, 3);
        for (int j = 0; j < 3; ++j) {
            Monomial var{j == 0, j == 1, j == 2};
            a(0, j) = u.coeff(var);
            a(1, j) = v.coeff(var);
        }
        Mat k = kernel_basis(a);
        if (k.cols() != 1) throw std::logic_error("points: lines do not meet in a single point");
        std::vector<Fp> p = k.column(0);
        Fp lead(0);
        for (const Fp& c : p)
            if (!c.is_zero()) { lead = c; break; }
        for (Fp& c : p) c = c / lead;
        pts[static_cast<std::size_t>(i - 1)] = {p[0], p[1], p[2]};
    }
    return pts;
}

} // namespace fourpoints

#endif
