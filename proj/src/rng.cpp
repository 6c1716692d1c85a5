#include "stabilis/rng.hpp"

#include <stdexcept>

namespace stabilis {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t Rng::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Rng::uniform(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform(0)");
    if (n == 1) return 0;
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    for (;;) {
        std::uint64_t v = next();
        if (v < limit) return v % n;
    }
}

Rng Rng::derive(std::uint64_t stream) const {
    std::uint64_t x = seed_;
    std::uint64_t a = splitmix64(x);
    x = a ^ (stream * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull);
    return Rng(splitmix64(x));
}

std::size_t Rng::sample_cdf(const std::vector<Rational>& cum) {
    if (cum.empty()) throw std::invalid_argument("empty cdf");
    // Refine a uniform u in [0,1) one 64-bit chunk at a time until the
    // dyadic interval [a/2^k, (a+1)/2^k) sits between two thresholds.
    mpz_class a = 0;
    unsigned k = 0;
    for (;;) {
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, k);
        Rational lo(a, pow2);
        Rational hi(a + 1, pow2);
        std::size_t i = 0;
        while (i < cum.size() - 1 && cum[i] <= lo) ++i;
        if (hi <= cum[i] || k > 4096) return i;
        a <<= 64;
        mpz_class chunk(static_cast<unsigned long>(next() >> 32));
        chunk <<= 32;
        chunk += static_cast<unsigned long>(next() & 0xffffffffull);
        a += chunk;
        k += 64;
    }
}

bool Rng::bernoulli(const Rational& p) {
    if (p.sgn() <= 0) { next(); return false; }
    if (p >= Rational(1)) { next(); return true; }
    return sample_cdf({p, Rational(1)}) == 0;
}

}  // namespace stabilis
