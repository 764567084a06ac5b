#pragma once

#include <string>

#include "hew/modarith.hpp"

namespace hew::paillier {

struct Keys {
    BigInt pk;  ///< p1 * p2
    BigInt sk;  ///< (p1 - 1) * (p2 - 1)
    unsigned lambda = 0;
};

struct Ciphertext {
    BigInt value;  ///< residue in [0, pk^2)
};

/// Select two distinct primes of bit length lambda. The demo default is
/// lambda = 128; 1024 would be needed for real security.
Keys keygen(unsigned lambda, Rng& rng);

/// Enc_pk(z) = (pk+1)^z * r^pk mod pk^2 with r uniform and coprime to pk.
/// Requires 0 <= z < pk.
Ciphertext enc(const BigInt& z, const BigInt& pk, Rng& rng);

/// Dec_sk(ct) = ((ct^sk mod pk^2) - 1)/pk * sk^-1 mod pk. Exact: Paillier is
/// noiseless.
BigInt dec(const Ciphertext& ct, const Keys& keys);

/// ct(z1 + z2 mod pk) = ct1 * ct2 mod pk^2.
Ciphertext add(const Ciphertext& ct1, const Ciphertext& ct2, const BigInt& pk);

/// ct(c * z mod pk) = ct^c mod pk^2 for a public factor c; negative factors
/// must arrive already reduced into Z_pk.
Ciphertext smul(const Ciphertext& ct, const BigInt& c, const BigInt& pk);

/// Plain-text key file: two decimal integers, pk then sk, one per line.
void save_keys(const Keys& keys, const std::string& path);
Keys load_keys(const std::string& path);

}  // namespace hew::paillier
