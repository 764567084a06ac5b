#include "hew/modarith.hpp"

#include <cmath>
#include <cstdlib>

namespace hew {

namespace {

void require_modulus(const BigInt& q) {
    if (q <= 1) {
        throw ParamError("modulus must be greater than 1");
    }
}

}  // namespace

Rng::Rng(std::uint64_t seed) : big_(gmp_randinit_mt), small_(seed) {
    big_.seed(static_cast<unsigned long>(seed));
}

BigInt Rng::uniform_below(const BigInt& q) {
    require_modulus(q);
    return big_.get_z_range(q);
}

BigInt Rng::uniform_centered(const BigInt& q) {
    require_modulus(q);
    return reduce_centered(big_.get_z_range(q), q);
}

BigInt Rng::uniform_bits(unsigned bits) {
    if (bits == 0) {
        return 0;
    }
    BigInt top = BigInt(1) << (bits - 1);
    return top + big_.get_z_range(top);
}

long Rng::gaussian(double sigma) {
    if (sigma <= 0.0) {
        return 0;
    }
    std::normal_distribution<double> dist(0.0, sigma);
    for (;;) {
        double g = dist(small_);
        if (std::abs(g) <= 6.0 * sigma) {
            return std::lround(g);
        }
    }
}

BigInt reduce_nonneg(const BigInt& z, const BigInt& q) {
    require_modulus(q);
    BigInt r;
    mpz_mod(r.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t());  // always nonnegative
    return r;
}

BigInt reduce_centered(const BigInt& z, const BigInt& q) {
    BigInt r = reduce_nonneg(z, q);
    if (2 * r >= q) {
        r -= q;
    }
    return r;
}

BigInt mod_pow(const BigInt& a, const BigInt& b, const BigInt& n) {
    require_modulus(n);
    if (b < 0) {
        throw ParamError("mod_pow requires a nonnegative exponent");
    }
    BigInt base = reduce_nonneg(a, n);
    BigInt result = 1;
    // square-and-multiply over the bits of b, least significant first
    for (std::size_t i = 0, nbits = mpz_sizeinbase(b.get_mpz_t(), 2); i < nbits; ++i) {
        if (mpz_tstbit(b.get_mpz_t(), i)) {
            result = result * base % n;
        }
        base = base * base % n;
    }
    if (b == 0) {
        result = reduce_nonneg(1, n);
    }
    return result;
}

BigInt mod_inv(const BigInt& a, const BigInt& n) {
    require_modulus(n);
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) {
        throw NotInvertibleError("element has no inverse: gcd(a, n) != 1");
    }
    return inv;
}

bool is_probable_prime(const BigInt& n, int rounds, Rng& rng) {
    if (n < 2) {
        return false;
    }
    if (n == 2 || n == 3) {
        return true;
    }
    if (mpz_even_p(n.get_mpz_t())) {
        return false;
    }
    // n - 1 = 2^r * d with d odd
    BigInt d = n - 1;
    unsigned long r = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++r;
    }
    auto witness = [&](const BigInt& a) {
        BigInt x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) {
            return false;
        }
        for (unsigned long i = 0; i + 1 < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                return false;
            }
        }
        return true;  // a witnesses compositeness
    };
    if (witness(2)) {
        return false;
    }
    for (int i = 0; i < rounds; ++i) {
        BigInt a = 2 + rng.uniform_below(n - 3);
        if (witness(a)) {
            return false;
        }
    }
    return true;
}

BigInt gen_prime(unsigned bits, Rng& rng) {
    if (bits < 2) {
        throw ParamError("gen_prime requires bits >= 2");
    }
    for (;;) {
        BigInt candidate = rng.uniform_bits(bits);
        mpz_setbit(candidate.get_mpz_t(), 0);  // odd (3 is the only 2-bit candidate left)
        if (is_probable_prime(candidate, 40, rng)) {
            return candidate;
        }
    }
}

}  // namespace hew
