// Deterministic seeded generator (splitmix64).  All randomized routines take
// an explicit Rng so results are reproducible from (argv, seed).
#ifndef FOURPOINTS_RNG_HPP
#define FOURPOINTS_RNG_HPP

#include <cstdint>

#include "fourpoints/gf.hpp"

namespace fourpoints {

class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed + 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    Fp field_element() { return Fp::from_raw(static_cast<std::uint32_t>(below(field_prime()))); }

    Fp nonzero_field_element()
    {
        for (;;) {
            Fp x = field_element();
            if (!x.is_zero()) return x;
        }
    }

    /// Small signed scalar, handy for human-checkable examples.
    Fp small_element(long long bound = 5)
    {
        return Fp(static_cast<long long>(below(2 * bound + 1)) - bound);
    }

    /// Child generator with decorrelated stream.
    Rng split() { return Rng(next() ^ 0xd1342543de82ef95ull); }

private:
    std::uint64_t state_;
};

} // namespace fourpoints

#endif
