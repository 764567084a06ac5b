#include "hew/paillier.hpp"

#include <fstream>

namespace hew::paillier {

Keys keygen(unsigned lambda, Rng& rng) {
    if (lambda < 4) {
        throw ParamError("paillier keygen requires lambda >= 4");
    }
    BigInt p1 = gen_prime(lambda, rng);
    BigInt p2 = gen_prime(lambda, rng);
    while (p2 == p1) {
        p2 = gen_prime(lambda, rng);
    }
    return Keys{p1 * p2, (p1 - 1) * (p2 - 1), lambda};
}

Ciphertext enc(const BigInt& z, const BigInt& pk, Rng& rng) {
    if (z < 0 || z >= pk) {
        throw MessageRangeError("paillier message must lie in [0, pk)");
    }
    BigInt pk2 = pk * pk;
    BigInt r;
    do {
        r = 1 + rng.uniform_below(pk - 1);
    } while (gcd(r, pk) != 1);
    BigInt ct = mod_pow(pk + 1, z, pk2) * mod_pow(r, pk, pk2) % pk2;
    return Ciphertext{ct};
}

BigInt dec(const Ciphertext& ct, const Keys& keys) {
    BigInt pk2 = keys.pk * keys.pk;
    if (ct.value < 0 || ct.value >= pk2) {
        throw MessageRangeError("ciphertext outside [0, pk^2): key mismatch?");
    }
    BigInt t = (mod_pow(ct.value, keys.sk, pk2) - 1) / keys.pk;
    return t * mod_inv(keys.sk, keys.pk) % keys.pk;
}

Ciphertext add(const Ciphertext& ct1, const Ciphertext& ct2, const BigInt& pk) {
    BigInt pk2 = pk * pk;
    if (ct1.value >= pk2 || ct2.value >= pk2) {
        throw MessageRangeError("ciphertext outside [0, pk^2): key mismatch?");
    }
    return Ciphertext{ct1.value * ct2.value % pk2};
}

Ciphertext smul(const Ciphertext& ct, const BigInt& c, const BigInt& pk) {
    return Ciphertext{mod_pow(ct.value, reduce_nonneg(c, pk), pk * pk)};
}

void save_keys(const Keys& keys, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open key file for writing: " + path);
    }
    out << keys.pk.get_str(10) << '\n' << keys.sk.get_str(10) << '\n';
}

Keys load_keys(const std::string& path) {
    std::ifstream in(path);
    std::string pk_str, sk_str;
    if (!in || !(in >> pk_str >> sk_str)) {
        throw Error("cannot read key file: " + path);
    }
    Keys keys;
    keys.pk = BigInt(pk_str, 10);
    keys.sk = BigInt(sk_str, 10);
    keys.lambda = static_cast<unsigned>(mpz_sizeinbase(keys.pk.get_mpz_t(), 2) / 2);
    return keys;
}

}  // namespace hew::paillier
