#include "hew/encoding.hpp"

#include <cmath>

namespace hew {

BigInt round_scaled(double x, double s) {
    // nearbyint honours the default rounding mode, round-to-nearest-even
    double r = std::nearbyint(s * x);
    BigInt z;
    mpz_set_d(z.get_mpz_t(), r);
    return z;
}

FixedPointCode ecd(double x, double s, const BigInt& q, Repr repr) {
    if (s < 1.0) {
        throw ParamError("scaling factor must satisfy s >= 1");
    }
    BigInt z = round_scaled(x, s);
    BigInt value = (repr == Repr::nonneg) ? reduce_nonneg(z, q) : reduce_centered(z, q);
    return FixedPointCode{value, s, q, repr};
}

double dcd(const FixedPointCode& code) {
    return decode_residue(code.value, code.scale, code.modulus, code.repr);
}

double decode_residue(const BigInt& value, double s, const BigInt& q, Repr repr) {
    BigInt z = value;
    if (repr == Repr::nonneg && 2 * z >= q) {
        z -= q;
    }
    return z.get_d() / s;
}

std::vector<std::vector<BigInt>> encode_gain_matrix(
    const std::vector<std::vector<double>>& gains, double s, const BigInt& q, Repr repr) {
    std::vector<std::vector<BigInt>> out;
    out.reserve(gains.size());
    for (const auto& row : gains) {
        std::vector<BigInt> enc_row;
        enc_row.reserve(row.size());
        for (double g : row) {
            enc_row.push_back(ecd(g, s, q, repr).value);
        }
        out.push_back(std::move(enc_row));
    }
    return out;
}

BoundVerdict bound_check(const BigInt& max_abs_integer, const BigInt& q) {
    return (2 * max_abs_integer < q) ? BoundVerdict::ok : BoundVerdict::overflow_risk;
}

}  // namespace hew
