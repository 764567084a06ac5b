#include "hew/rlwe_ckks.hpp"

#include <cmath>
#include <utility>

namespace hew::ckks {

namespace {

void check_same_ring(const RingElement& a, const RingElement& b) {
    if (a.coeffs.size() != b.coeffs.size() || a.q != b.q) {
        throw ParamError("ring elements have mismatched degree or modulus");
    }
}

bool scales_match(double s1, double s2) {
    return std::abs(s1 - s2) <= 1e-9 * std::max(std::abs(s1), std::abs(s2));
}

RingElement sample_uniform_ring(const Params& params, Rng& rng) {
    RingElement out{std::vector<BigInt>(params.n), params.q};
    for (auto& c : out.coeffs) {
        c = rng.uniform_centered(params.q);
    }
    return out;
}

RingElement sample_noise_ring(const Params& params, Rng& rng) {
    RingElement out{std::vector<BigInt>(params.n), params.q};
    for (auto& c : out.coeffs) {
        c = rng.gaussian(params.sigma);
    }
    return out;
}

}  // namespace

Params setup(int n, const BigInt& q, double scale, int levels, double sigma) {
    if (n < 1 || (n & (n - 1)) != 0) {
        throw ParamError("ring degree must be a power of two");
    }
    if (q <= 1) {
        throw ParamError("modulus must be greater than 1");
    }
    if (scale < 1.0) {
        throw ParamError("scale must satisfy s >= 1");
    }
    if (levels < 0) {
        throw ParamError("level budget must be nonnegative");
    }
    if (sigma < 0.0) {
        throw ParamError("noise std-dev must be nonnegative");
    }
    Params params{n, q, scale, levels, sigma};
    BigInt power = 1;
    while (power < q) {
        power *= params.ks_base;
        ++params.ks_digits;
    }
    return params;
}

KeyPair keygen(const Params& params, Rng& rng) {
    RingElement sk{std::vector<BigInt>(params.n), params.q};
    for (auto& c : sk.coeffs) {
        c = static_cast<long>(rng.uniform_below(3).get_ui()) - 1;  // ternary
    }
    RingElement sk2 = ring_mul(sk, sk);
    EvalKey evk;
    evk.rows.reserve(params.ks_digits);
    BigInt power = 1;
    for (int i = 0; i < params.ks_digits; ++i) {
        RingElement a = sample_uniform_ring(params, rng);
        RingElement e = sample_noise_ring(params, rng);
        RingElement payload{std::vector<BigInt>(params.n), params.q};
        for (int j = 0; j < params.n; ++j) {
            payload.coeffs[j] = reduce_centered(power * sk2.coeffs[j], params.q);
        }
        // b = -a*sk + e + ks_base^i * sk^2
        RingElement b = ring_add(ring_sub(e, ring_mul(a, sk)), payload);
        evk.rows.emplace_back(std::move(b), std::move(a));
        power *= params.ks_base;
    }
    return KeyPair{std::move(sk), std::move(evk)};
}

RingElement ring_zero(const Params& params) {
    return RingElement{std::vector<BigInt>(params.n, BigInt(0)), params.q};
}

RingElement ring_constant(const BigInt& c, const Params& params) {
    RingElement out = ring_zero(params);
    out.coeffs[0] = reduce_centered(c, params.q);
    return out;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    check_same_ring(a, b);
    RingElement out{std::vector<BigInt>(a.coeffs.size()), a.q};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        out.coeffs[i] = reduce_centered(a.coeffs[i] + b.coeffs[i], a.q);
    }
    return out;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
    return ring_add(a, ring_neg(b));
}

RingElement ring_neg(const RingElement& a) {
    RingElement out{std::vector<BigInt>(a.coeffs.size()), a.q};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        out.coeffs[i] = reduce_centered(-a.coeffs[i], a.q);
    }
    return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    check_same_ring(a, b);
    std::size_t n = a.coeffs.size();
    std::vector<BigInt> acc(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            BigInt prod = a.coeffs[i] * b.coeffs[j];
            std::size_t k = i + j;
            if (k < n) {
                acc[k] += prod;
            } else {
                acc[k - n] -= prod;  // X^N == -1
            }
        }
    }
    RingElement out{std::vector<BigInt>(n), a.q};
    for (std::size_t i = 0; i < n; ++i) {
        out.coeffs[i] = reduce_centered(acc[i], a.q);
    }
    return out;
}

RingElement ecd_scalar(double x, double s, const Params& params) {
    if (s < 1.0) {
        throw ParamError("scale must satisfy s >= 1");
    }
    double r = std::nearbyint(s * x);  // ties to even
    BigInt z;
    mpz_set_d(z.get_mpz_t(), r);
    return ring_constant(z, params);
}

double dcd_scalar(const RingElement& p, double scale) {
    if (p.coeffs.empty()) {
        throw ParamError("empty ring element");
    }
    return p.coeffs[0].get_d() / scale;
}

Ciphertext enc(const RingElement& z, double scale, const RingElement& sk,
               const Params& params, Rng& rng) {
    check_same_ring(z, sk);
    RingElement a = sample_uniform_ring(params, rng);
    RingElement e = sample_noise_ring(params, rng);
    RingElement b = ring_add(ring_sub(e, ring_mul(a, sk)), z);
    return Ciphertext{std::move(b), std::move(a), params.levels, scale};
}

RingElement dec(const Ciphertext& ct, const RingElement& sk) {
    return ring_add(ct.c0, ring_mul(ct.c1, sk));
}

Ciphertext add(const Ciphertext& ct1, const Ciphertext& ct2) {
    if (!scales_match(ct1.scale, ct2.scale)) {
        throw ParamError("ciphertext scales differ; align before adding");
    }
    return Ciphertext{ring_add(ct1.c0, ct2.c0), ring_add(ct1.c1, ct2.c1),
                      std::min(ct1.level, ct2.level), ct1.scale};
}

Ciphertext sub(const Ciphertext& ct1, const Ciphertext& ct2) {
    if (!scales_match(ct1.scale, ct2.scale)) {
        throw ParamError("ciphertext scales differ; align before subtracting");
    }
    return Ciphertext{ring_sub(ct1.c0, ct2.c0), ring_sub(ct1.c1, ct2.c1),
                      std::min(ct1.level, ct2.level), ct1.scale};
}

Ciphertext mul_plain(const Ciphertext& ct, const RingElement& p, double p_scale) {
    return Ciphertext{ring_mul(ct.c0, p), ring_mul(ct.c1, p), ct.level,
                      ct.scale * p_scale};
}

Ciphertext mul(const Ciphertext& ct1, const Ciphertext& ct2, const EvalKey& evk,
               const Params& params) {
    if (ct1.level < 1 || ct2.level < 1) {
        throw DepthBudgetError("multiplication budget exhausted (level 0)");
    }
    RingElement d0 = ring_mul(ct1.c0, ct2.c0);
    RingElement d1 = ring_add(ring_mul(ct1.c1, ct2.c0), ring_mul(ct2.c1, ct1.c0));
    RingElement d2 = ring_mul(ct1.c1, ct2.c1);

    // relinearize: d2 * sk^2 is replaced via the gadget rows of the evk
    std::vector<BigInt> rem(params.n);
    for (int j = 0; j < params.n; ++j) {
        rem[j] = reduce_nonneg(d2.coeffs[j], params.q);
    }
    for (int i = 0; i < params.ks_digits; ++i) {
        RingElement digit{std::vector<BigInt>(params.n), params.q};
        bool nonzero = false;
        for (int j = 0; j < params.n; ++j) {
            mpz_fdiv_qr(rem[j].get_mpz_t(), digit.coeffs[j].get_mpz_t(),
                        rem[j].get_mpz_t(), params.ks_base.get_mpz_t());
            nonzero = nonzero || digit.coeffs[j] != 0;
        }
        if (!nonzero) {
            continue;
        }
        d0 = ring_add(d0, ring_mul(digit, evk.rows[i].first));
        d1 = ring_add(d1, ring_mul(digit, evk.rows[i].second));
    }
    return Ciphertext{std::move(d0), std::move(d1),
                      std::min(ct1.level, ct2.level) - 1, ct1.scale * ct2.scale};
}

Ciphertext pow(const Ciphertext& ct, unsigned k, const EvalKey& evk, const Params& params) {
    if (k < 1) {
        throw ParamError("exponent must be at least 1");
    }
    // square-and-multiply, most significant bit first
    Ciphertext result = ct;
    int top = 31;
    while (top > 0 && ((k >> top) & 1u) == 0) {
        --top;
    }
    for (int bit = top - 1; bit >= 0; --bit) {
        result = mul(result, result, evk, params);
        if ((k >> bit) & 1u) {
            result = mul(result, ct, evk, params);
        }
    }
    return result;
}

Ciphertext eval_demo_poly(const Ciphertext& ct_x, const Ciphertext& ct_y,
                          const EvalKey& evk, const Params& params) {
    double s = params.scale;
    Ciphertext x4 = pow(ct_x, 4, evk, params);                       // scale s^4
    Ciphertext y2 = pow(ct_y, 2, evk, params);                       // scale s^2
    Ciphertext t = mul(y2, sub(ct_x, ct_y), evk, params);            // scale s^3
    t = mul_plain(t, ecd_scalar(1.0, s, params), s);                 // align to s^4
    Ciphertext y_aligned = mul_plain(ct_y, ecd_scalar(1.0, s * s * s, params), s * s * s);
    return add(add(x4, t), y_aligned);
}

}  // namespace hew::ckks
