// Multivariate polynomials in x, y, z over F_p with the fixed monomial order
// lex x > y > z.  Terms iterate from the lex-largest monomial down, so all
// printed output is byte-stable.
#ifndef FOURPOINTS_POLY_HPP
#define FOURPOINTS_POLY_HPP

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourpoints/gf.hpp"

namespace fourpoints {

struct Monomial {
    int a = 0, b = 0, c = 0;  // exponents of x, y, z

    int degree() const { return a + b + c; }

    friend bool operator==(const Monomial& m, const Monomial& n)
    {
        return m.a == n.a && m.b == n.b && m.c == n.c;
    }

    Monomial operator*(const Monomial& n) const { return {a + n.a, b + n.b, c + n.c}; }

    std::string str() const
    {
        if (a == 0 && b == 0 && c == 0) return "1";
        std::string s;
        auto app = [&s](char v, int e) {
            if (e == 0) return;
            s += v;
            if (e > 1) s += '^' + std::to_string(e);
        };
        app('x', a);
        app('y', b);
        app('z', c);
        return s;
    }
};

/// Lex with x > y > z; "greater" monomials iterate first.
struct MonomialLexGreater {
    bool operator()(const Monomial& m, const Monomial& n) const
    {
        if (m.a != n.a) return m.a > n.a;
        if (m.b != n.b) return m.b > n.b;
        return m.c > n.c;
    }
};

class Poly {
public:
    using TermMap = std::map<Monomial, Fp, MonomialLexGreater>;

    Poly() = default;
    Poly(long long constant)
    {
        Fp v(constant);
        if (!v.is_zero()) terms_[Monomial{}] = v;
    }
    static Poly term(Fp coeff, Monomial m)
    {
        Poly f;
        if (!coeff.is_zero()) f.terms_[m] = coeff;
        return f;
    }
    static Poly x() { return term(Fp(1), {1, 0, 0}); }
    static Poly y() { return term(Fp(1), {0, 1, 0}); }
    static Poly z() { return term(Fp(1), {0, 0, 1}); }
    static Poly variable(int i)
    {
        switch (i) {
            case 0: return x();
            case 1: return y();
            case 2: return z();
        }
        throw std::invalid_argument("Poly::variable: index out of range");
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Fp coeff(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Fp(0) : it->second;
    }

    void add_term(const Monomial& m, Fp v)
    {
        if (v.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& f, const Poly& g)
    {
        Poly h = f;
        for (const auto& [m, v] : g.terms_) h.add_term(m, v);
        return h;
    }
    friend Poly operator-(const Poly& f, const Poly& g)
    {
        Poly h = f;
        for (const auto& [m, v] : g.terms_) h.add_term(m, -v);
        return h;
    }
    Poly operator-() const
    {
        Poly h;
        for (const auto& [m, v] : terms_) h.terms_[m] = -v;
        return h;
    }
    friend Poly operator*(const Poly& f, const Poly& g)
    {
        Poly h;
        for (const auto& [m, v] : f.terms_)
            for (const auto& [n, w] : g.terms_) h.add_term(m * n, v * w);
        return h;
    }
    friend Poly operator*(Fp s, const Poly& f)
    {
        Poly h;
        if (s.is_zero()) return h;
        for (const auto& [m, v] : f.terms_) h.terms_[m] = s * v;
        return h;
    }
    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    friend bool operator==(const Poly& f, const Poly& g)
    {
        if (f.terms_.size() != g.terms_.size()) return false;
        auto it = f.terms_.begin();
        auto jt = g.terms_.begin();
        for (; it != f.terms_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || it->second != jt->second) return false;
        return true;
    }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    /// Homogeneous degree, or nullopt for 0 or inhomogeneous input.
    std::optional<int> homogeneous_degree() const
    {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, v] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }
    bool is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

    Fp evaluate(const std::array<Fp, 3>& pt) const
    {
        Fp s(0);
        for (const auto& [m, v] : terms_) {
            Fp t = v;
            for (int i = 0; i < m.a; ++i) t *= pt[0];
            for (int i = 0; i < m.b; ++i) t *= pt[1];
            for (int i = 0; i < m.c; ++i) t *= pt[2];
            s += t;
        }
        return s;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, v] : terms_) {
            long long c = v.lifted();
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            long long mag = c < 0 ? -c : c;
            if (mag != 1 || m.degree() == 0) os << mag;
            if (m.degree() > 0) os << m.str();
            first = false;
        }
        return os.str();
    }

private:
    TermMap terms_;
};

} // namespace fourpoints

#endif
