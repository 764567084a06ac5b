#pragma once

#include <vector>

#include "hew/modarith.hpp"

namespace hew::ckks {

/// Element of R_q = Z_q[X]/(X^N + 1), coefficients centered, X^0 first.
struct RingElement {
    std::vector<BigInt> coeffs;
    BigInt q;
};

struct Params {
    int n = 0;           ///< ring degree N (power of two)
    BigInt q;            ///< ciphertext modulus
    double scale = 1.0;  ///< default encoding scale s
    int levels = 0;      ///< multiplication budget L
    double sigma = 0.0;  ///< noise std-dev
    BigInt ks_base = 10; ///< relinearization gadget base
    int ks_digits = 0;   ///< ceil(log_{ks_base} q)
};

Params setup(int n, const BigInt& q, double scale, int levels, double sigma);

/// Each row i is an RLWE pair (b_i, a_i) with b_i + a_i*sk = ks_base^i * sk^2 + e_i.
struct EvalKey {
    std::vector<std::pair<RingElement, RingElement>> rows;
};

struct KeyPair {
    RingElement sk;  ///< ternary coefficients in {-1, 0, 1}
    EvalKey evk;
};

KeyPair keygen(const Params& params, Rng& rng);

RingElement ring_zero(const Params& params);
RingElement ring_constant(const BigInt& c, const Params& params);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);

/// Schoolbook negacyclic product: X^N == -1, coefficients reduced centered.
RingElement ring_mul(const RingElement& a, const RingElement& b);

/// Scalar encoding: round(s*x) (ties to even) in the X^0 slot, zeros elsewhere.
RingElement ecd_scalar(double x, double s, const Params& params);

/// Reads the X^0 coefficient and divides by the accumulated scale.
double dcd_scalar(const RingElement& p, double scale);

struct Ciphertext {
    RingElement c0;  ///< b component
    RingElement c1;  ///< a component
    int level = 0;   ///< remaining multiplication budget
    double scale = 1.0;
};

/// ct(z) = (b, a) + (z, 0) with b = -a*sk + e; fresh level is L.
Ciphertext enc(const RingElement& z, double scale, const RingElement& sk,
               const Params& params, Rng& rng);

/// Dec(ct) = c0 + c1*sk = z + e.
RingElement dec(const Ciphertext& ct, const RingElement& sk);

/// Component-wise sum; requires equal scales (no automatic rescaling exists
/// here); level = min of the inputs.
Ciphertext add(const Ciphertext& ct1, const Ciphertext& ct2);
Ciphertext sub(const Ciphertext& ct1, const Ciphertext& ct2);

/// Multiplication by a plaintext ring element carrying scale p_scale; no
/// level is consumed.
Ciphertext mul_plain(const Ciphertext& ct, const RingElement& p, double p_scale);

/// Tensor + relinearize: consumes one level, multiplies scales.
/// Throws DepthBudgetError when either input is at level 0.
Ciphertext mul(const Ciphertext& ct1, const Ciphertext& ct2, const EvalKey& evk,
               const Params& params);

/// ct^k via square-and-multiply over `mul`; k >= 1.
Ciphertext pow(const Ciphertext& ct, unsigned k, const EvalKey& evk, const Params& params);

/// x^4 + y^2*(x - y) + y, multiplicative depth 2. Inputs must be fresh
/// encryptions at the params' default scale. Lower-degree terms are aligned
/// to the x^4 scale with plaintext-one factors.
Ciphertext eval_demo_poly(const Ciphertext& ct_x, const Ciphertext& ct_y,
                          const EvalKey& evk, const Params& params);

}  // namespace hew::ckks
