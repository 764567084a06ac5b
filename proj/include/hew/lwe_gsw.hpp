#pragma once

#include <span>
#include <vector>

#include "hew/modarith.hpp"

namespace hew::lwe {

struct Params {
    int n = 0;          ///< secret dimension N
    BigInt q;           ///< ciphertext modulus
    BigInt base;        ///< decomposition base B
    int digits = 0;     ///< d = ceil(log_B q)
    double sigma = 0.0; ///< noise std-dev

    double fresh_noise_bound() const { return 6.0 * sigma; }
};

/// Validates parameters and derives the digit count d.
Params setup(int n, const BigInt& q, const BigInt& base, double sigma);

/// N uniform centered residues.
using SecretKey = std::vector<BigInt>;

struct Ciphertext {
    BigInt b;
    std::vector<BigInt> a;
    /// Diagnostic running bound on |e|; not part of the mathematical object.
    double error_bound = 0.0;
};

/// (N+1)*d x (N+1) matrix of centered residues. Row slot*d + j carries the
/// gadget entry B^j in column `slot`, masked by a fresh LWE encryption of 0
/// laid out as (b, a^T).
struct GswCiphertext {
    std::vector<std::vector<BigInt>> rows;
    double noise_bound = 0.0;     ///< per-row bound on |e_i|
    double magnitude_hint = 0.0;  ///< |z| recorded at encryption (diagnostic)
};

SecretKey keygen(const Params& params, Rng& rng);

/// LWE(z) = (b, a^T) + (z, 0^T) mod q with b = -a.sk + e.
Ciphertext enc(const BigInt& z, const SecretKey& sk, const Params& params, Rng& rng);

/// Dec(ct) = b + a.sk mod q, centered; returns z + e.
BigInt dec(const Ciphertext& ct, const SecretKey& sk, const Params& params);

/// round(Dec(ct) / delta): exact recovery of z from LWE(delta*z) whenever
/// delta*z is in the centered range and delta > 2|e|.
BigInt dec_scaled(const Ciphertext& ct, const SecretKey& sk, const Params& params,
                  const BigInt& delta);

/// Component-wise sum mod q; error bounds add.
Ciphertext add(const Ciphertext& ct1, const Ciphertext& ct2, const Params& params);

/// Component-wise multiplication by a public integer; error scales by |c|.
Ciphertext smul(const Ciphertext& ct, const BigInt& c, const Params& params);

/// Unsigned base-B digits (little-endian, d per entry) of the nonnegative
/// representatives. Recomposition against g = (1, B, ..., B^{d-1}) returns
/// the nonnegative representative mod q.
std::vector<BigInt> gadget_decompose(std::span<const BigInt> v, const Params& params);

/// C = Z + z*G with G = I_{N+1} (x) g^T and Z rows fresh encryptions of 0.
GswCiphertext gsw_enc(const BigInt& z, const SecretKey& sk, const Params& params, Rng& rng);

/// GSW x LWE -> LWE: gadget_decompose((b, a^T)) * C.
Ciphertext external_product(const GswCiphertext& gsw, const Ciphertext& ct,
                            const Params& params);

/// GSW x GSW -> GSW: each row of gsw2 is gadget-decomposed and multiplied
/// into gsw1's matrix.
GswCiphertext gsw_mul(const GswCiphertext& gsw1, const GswCiphertext& gsw2,
                      const Params& params);

/// Matrix sum mod q.
GswCiphertext gsw_add(const GswCiphertext& gsw1, const GswCiphertext& gsw2,
                      const Params& params);

}  // namespace hew::lwe
