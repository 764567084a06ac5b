#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

#include "hew/errors.hpp"

namespace hew {

/// Arbitrary-precision signed integer. Paillier ciphertexts at lambda=128 live
/// mod pk^2 (~512 bits), so machine words are not an option anywhere in the
/// arithmetic core.
using BigInt = mpz_class;

/// Seedable deterministic generator. Identical seed => identical sample
/// stream. Not cryptographically secure; this workbench is a pedagogical
/// artifact and says so in the README.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    /// Uniform residue in [0, q). Requires q > 1.
    BigInt uniform_below(const BigInt& q);

    /// Uniform residue in [-q/2, q/2). Requires q > 1.
    BigInt uniform_centered(const BigInt& q);

    /// Uniform integer with exactly `bits` bits (top bit set).
    BigInt uniform_bits(unsigned bits);

    /// Rounded continuous Gaussian with std-dev sigma >= 0, resampled until
    /// the magnitude is at most 6*sigma. sigma = 0 returns 0.
    long gaussian(double sigma);

  private:
    gmp_randclass big_;
    std::mt19937_64 small_;
};

/// z mod q with result in [0, q). Throws ParamError for q <= 1.
BigInt reduce_nonneg(const BigInt& z, const BigInt& q);

/// z mod q with result in [-q/2, q/2). Throws ParamError for q <= 1.
BigInt reduce_centered(const BigInt& z, const BigInt& q);

/// a^b mod n by square-and-multiply. Requires n > 1 and b >= 0.
BigInt mod_pow(const BigInt& a, const BigInt& b, const BigInt& n);

/// Multiplicative inverse of a mod n via extended Euclid.
/// Throws NotInvertibleError when gcd(a, n) != 1.
BigInt mod_inv(const BigInt& a, const BigInt& n);

/// Miller-Rabin with `rounds` random bases (plus base-2 always).
bool is_probable_prime(const BigInt& n, int rounds, Rng& rng);

/// Random prime with exactly `bits` bits, Miller-Rabin checked with 40 rounds.
/// Requires bits >= 2.
BigInt gen_prime(unsigned bits, Rng& rng);

}  // namespace hew
