// Exact arithmetic in the prime field F_p.  The characteristic is a global,
// set-once configuration; the default is the Mersenne prime 2^31 - 1.
#ifndef FOURPOINTS_GF_HPP
#define FOURPOINTS_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fourpoints {

namespace detail {
inline std::uint64_t& prime_slot()
{
    static std::uint64_t p = 2147483647ull;
    return p;
}
inline bool& prime_locked_slot()
{
    static bool locked = false;
    return locked;
}

inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
} // namespace detail

/// Characteristic currently in force.
inline std::uint64_t field_prime() { return detail::prime_slot(); }

/// Install the field characteristic.  Must be an odd prime below 2^31 and
/// must be called before any Fp value is created (the first arithmetic
/// operation locks the configuration).
inline void set_field_prime(std::uint64_t p)
{
    if (detail::prime_locked_slot() && p != detail::prime_slot())
        throw std::logic_error("set_field_prime: field already in use");
    if (p < 3 || p >= (1ull << 31) || p % 2 == 0 || !detail::is_prime_u64(p))
        throw std::invalid_argument("set_field_prime: need an odd prime < 2^31, got " + std::to_string(p));
    detail::prime_slot() = p;
}

/// Element of F_p, stored as the canonical residue in [0, p).
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long long x)
    {
        detail::prime_locked_slot() = true;
        const long long p = static_cast<long long>(field_prime());
        long long r = x % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b)
    {
        std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
        const std::uint64_t p = field_prime();
        if (s >= p) s -= p;
        return from_raw(static_cast<std::uint32_t>(s));
    }
    friend Fp operator-(Fp a, Fp b)
    {
        const std::uint64_t p = field_prime();
        std::uint64_t s = static_cast<std::uint64_t>(a.v_) + p - b.v_;
        if (s >= p) s -= p;
        return from_raw(static_cast<std::uint32_t>(s));
    }
    friend Fp operator*(Fp a, Fp b)
    {
        const std::uint64_t p = field_prime();
        return from_raw(static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.v_) * b.v_) % p));
    }
    Fp operator-() const
    {
        return v_ == 0 ? *this : from_raw(static_cast<std::uint32_t>(field_prime() - v_));
    }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    /// Multiplicative inverse via extended Euclid; the zero element has none.
    Fp inv() const
    {
        if (v_ == 0) throw std::domain_error("Fp::inv: zero is not invertible");
        const std::int64_t p = static_cast<std::int64_t>(field_prime());
        std::int64_t a = v_, b = p, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (x0 < 0) x0 += p;
        return from_raw(static_cast<std::uint32_t>(x0));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    static Fp from_raw(std::uint32_t r)
    {
        detail::prime_locked_slot() = true;
        Fp x; x.v_ = r; return x;
    }

    /// Signed representative of least magnitude, for printing.
    long long lifted() const
    {
        const long long p = static_cast<long long>(field_prime());
        long long x = v_;
        return x > p / 2 ? x - p : x;
    }

private:
    std::uint32_t v_;
};

inline Fp fp_pow(Fp a, std::uint64_t e)
{
    Fp r(1);
    while (e) {
        if (e & 1) r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

} // namespace fourpoints

#endif
