#include "hew/lwe_gsw.hpp"

#include <cmath>

namespace hew::lwe {

namespace {

void check_dims(const Ciphertext& ct, const Params& params) {
    if (static_cast<int>(ct.a.size()) != params.n) {
        throw ParamError("LWE ciphertext dimension does not match parameters");
    }
}

void check_gsw(const GswCiphertext& gsw, const Params& params) {
    std::size_t rows = static_cast<std::size_t>(params.n + 1) * params.digits;
    if (gsw.rows.size() != rows) {
        throw ParamError("GSW ciphertext shape does not match parameters");
    }
}

}  // namespace

Params setup(int n, const BigInt& q, const BigInt& base, double sigma) {
    if (n < 1) {
        throw ParamError("secret dimension must be positive");
    }
    if (q <= 1) {
        throw ParamError("modulus must be greater than 1");
    }
    if (base < 2) {
        throw ParamError("decomposition base must be at least 2");
    }
    if (sigma < 0.0) {
        throw ParamError("noise std-dev must be nonnegative");
    }
    int d = 0;
    BigInt power = 1;
    while (power < q) {
        power *= base;
        ++d;
    }
    return Params{n, q, base, d, sigma};
}

SecretKey keygen(const Params& params, Rng& rng) {
    SecretKey sk(params.n);
    for (auto& entry : sk) {
        entry = rng.uniform_centered(params.q);
    }
    return sk;
}

Ciphertext enc(const BigInt& z, const SecretKey& sk, const Params& params, Rng& rng) {
    if (2 * z < -params.q || 2 * z >= params.q) {
        throw MessageRangeError("LWE message outside centered Z_q");
    }
    Ciphertext ct;
    ct.a.resize(params.n);
    BigInt mask = 0;
    for (int i = 0; i < params.n; ++i) {
        ct.a[i] = rng.uniform_centered(params.q);
        mask += ct.a[i] * sk[i];
    }
    long e = rng.gaussian(params.sigma);
    ct.b = reduce_centered(-mask + e + z, params.q);
    ct.error_bound = params.fresh_noise_bound();
    return ct;
}

BigInt dec(const Ciphertext& ct, const SecretKey& sk, const Params& params) {
    check_dims(ct, params);
    BigInt acc = ct.b;
    for (int i = 0; i < params.n; ++i) {
        acc += ct.a[i] * sk[i];
    }
    return reduce_centered(acc, params.q);
}

BigInt dec_scaled(const Ciphertext& ct, const SecretKey& sk, const Params& params,
                  const BigInt& delta) {
    if (delta < 1) {
        throw ParamError("delta must be at least 1");
    }
    BigInt noisy = dec(ct, sk, params);
    // round(noisy / delta) with ties toward +inf, matching round(z/q) in the
    // centered reduction
    BigInt num = 2 * noisy + delta;
    BigInt q2 = 2 * delta;
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q2.get_mpz_t());
    return out;
}

Ciphertext add(const Ciphertext& ct1, const Ciphertext& ct2, const Params& params) {
    check_dims(ct1, params);
    check_dims(ct2, params);
    Ciphertext out;
    out.b = reduce_centered(ct1.b + ct2.b, params.q);
    out.a.resize(params.n);
    for (int i = 0; i < params.n; ++i) {
        out.a[i] = reduce_centered(ct1.a[i] + ct2.a[i], params.q);
    }
    out.error_bound = ct1.error_bound + ct2.error_bound;
    return out;
}

Ciphertext smul(const Ciphertext& ct, const BigInt& c, const Params& params) {
    check_dims(ct, params);
    Ciphertext out;
    out.b = reduce_centered(ct.b * c, params.q);
    out.a.resize(params.n);
    for (int i = 0; i < params.n; ++i) {
        out.a[i] = reduce_centered(ct.a[i] * c, params.q);
    }
    out.error_bound = ct.error_bound * std::abs(c.get_d());
    return out;
}

std::vector<BigInt> gadget_decompose(std::span<const BigInt> v, const Params& params) {
    std::vector<BigInt> digits;
    digits.reserve(v.size() * params.digits);
    for (const BigInt& entry : v) {
        BigInt rem = reduce_nonneg(entry, params.q);
        for (int j = 0; j < params.digits; ++j) {
            BigInt digit;
            mpz_fdiv_qr(rem.get_mpz_t(), digit.get_mpz_t(), rem.get_mpz_t(),
                        params.base.get_mpz_t());
            digits.push_back(digit);
        }
    }
    return digits;
}

GswCiphertext gsw_enc(const BigInt& z, const SecretKey& sk, const Params& params,
                      Rng& rng) {
    if (2 * z < -params.q || 2 * z >= params.q) {
        throw MessageRangeError("GSW message outside centered Z_q");
    }
    GswCiphertext gsw;
    std::size_t rows = static_cast<std::size_t>(params.n + 1) * params.digits;
    gsw.rows.reserve(rows);
    for (int slot = 0; slot <= params.n; ++slot) {
        BigInt power = 1;
        for (int j = 0; j < params.digits; ++j) {
            Ciphertext zero = enc(0, sk, params, rng);
            std::vector<BigInt> row(params.n + 1);
            row[0] = zero.b;
            for (int i = 0; i < params.n; ++i) {
                row[i + 1] = zero.a[i];
            }
            row[slot] = reduce_centered(row[slot] + z * power, params.q);
            gsw.rows.push_back(std::move(row));
            power *= params.base;
        }
    }
    gsw.noise_bound = params.fresh_noise_bound();
    gsw.magnitude_hint = std::abs(z.get_d());
    return gsw;
}

Ciphertext external_product(const GswCiphertext& gsw, const Ciphertext& ct,
                            const Params& params) {
    check_dims(ct, params);
    check_gsw(gsw, params);
    std::vector<BigInt> vec(params.n + 1);
    vec[0] = ct.b;
    for (int i = 0; i < params.n; ++i) {
        vec[i + 1] = ct.a[i];
    }
    std::vector<BigInt> digits = gadget_decompose(vec, params);
    std::vector<BigInt> acc(params.n + 1, BigInt(0));
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) {
            continue;
        }
        for (int col = 0; col <= params.n; ++col) {
            acc[col] += digits[i] * gsw.rows[i][col];
        }
    }
    Ciphertext out;
    out.b = reduce_centered(acc[0], params.q);
    out.a.resize(params.n);
    for (int i = 0; i < params.n; ++i) {
        out.a[i] = reduce_centered(acc[i + 1], params.q);
    }
    double base = params.base.get_d();
    out.error_bound = gsw.magnitude_hint * ct.error_bound +
                      static_cast<double>(digits.size()) * (base - 1.0) * gsw.noise_bound;
    return out;
}

GswCiphertext gsw_mul(const GswCiphertext& gsw1, const GswCiphertext& gsw2,
                      const Params& params) {
    check_gsw(gsw1, params);
    check_gsw(gsw2, params);
    GswCiphertext out;
    out.rows.reserve(gsw2.rows.size());
    double base = params.base.get_d();
    double rows_total = static_cast<double>(gsw1.rows.size());
    for (const auto& row : gsw2.rows) {
        std::vector<BigInt> digits = gadget_decompose(row, params);
        std::vector<BigInt> acc(params.n + 1, BigInt(0));
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (digits[i] == 0) {
                continue;
            }
            for (int col = 0; col <= params.n; ++col) {
                acc[col] += digits[i] * gsw1.rows[i][col];
            }
        }
        for (auto& entry : acc) {
            entry = reduce_centered(entry, params.q);
        }
        out.rows.push_back(std::move(acc));
    }
    out.noise_bound = gsw1.magnitude_hint * gsw2.noise_bound +
                      rows_total * (base - 1.0) * gsw1.noise_bound;
    out.magnitude_hint = gsw1.magnitude_hint * gsw2.magnitude_hint;
    return out;
}

GswCiphertext gsw_add(const GswCiphertext& gsw1, const GswCiphertext& gsw2,
                      const Params& params) {
    check_gsw(gsw1, params);
    check_gsw(gsw2, params);
    GswCiphertext out;
    out.rows.reserve(gsw1.rows.size());
    for (std::size_t r = 0; r < gsw1.rows.size(); ++r) {
        std::vector<BigInt> row(params.n + 1);
        for (int col = 0; col <= params.n; ++col) {
            row[col] = reduce_centered(gsw1.rows[r][col] + gsw2.rows[r][col], params.q);
        }
        out.rows.push_back(std::move(row));
    }
    out.noise_bound = gsw1.noise_bound + gsw2.noise_bound;
    out.magnitude_hint = gsw1.magnitude_hint + gsw2.magnitude_hint;
    return out;
}

}  // namespace hew::lwe
