#ifndef GRIDFREQ_RNG_HPP
#define GRIDFREQ_RNG_HPP

#include <cmath>
#include <cstdint>

namespace gridfreq {

/// splitmix64 step; used for seeding and for deriving child seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic child seed for replicate k of a master seed. Used so that
/// parallel ensembles are reproducible regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    std::uint64_t s = master ^ (0x6a09e667f3bcc909ULL + k * 0x9e3779b97f4a7c15ULL);
    (void)splitmix64(s);
    return splitmix64(s);
}

/// xoshiro256** with splitmix64 seeding and a portable Box-Muller normal.
/// std::normal_distribution is deliberately avoided: its algorithm is
/// unspecified, which would break bit-reproducibility across standard
/// libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
        have_cached_ = false;
        cached_ = 0.0;
    }

    std::uint64_t next_u64() {
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

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1] (never zero; safe under log()).
    double uniform_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via the trigonometric Box-Muller transform. The pair
    /// is computed from exactly two uniforms and the second value cached, so
    /// the draw count per call is deterministic.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    bool have_cached_;
    double cached_;
};

} // namespace gridfreq

#endif // GRIDFREQ_RNG_HPP
