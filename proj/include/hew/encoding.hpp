#pragma once

#include <vector>

#include "hew/modarith.hpp"

namespace hew {

/// Representative convention for residues mod q.
enum class Repr {
    nonneg,    ///< Z_q = {0, ..., q-1}
    centered,  ///< [-q/2, q/2) intersected with Z
};

/// Generalized fixed-point code: z = round(s*x) mod q together with its
/// public scaling factor and representative convention.
struct FixedPointCode {
    BigInt value;
    double scale = 1.0;
    BigInt modulus;
    Repr repr = Repr::nonneg;
};

/// round(s*x) with ties to even, as an exact integer. The tie-break matters:
/// half-away-from-zero would decode the doubled benchmark message to 2.470
/// instead of 2.468.
BigInt round_scaled(double x, double s);

/// Fixed-point encode: round(s*x) mod q under the chosen representative.
/// Requires s >= 1 and q > 1.
FixedPointCode ecd(double x, double s, const BigInt& q, Repr repr = Repr::nonneg);

/// Decode: partial inverse of the modulo reduction, then rescale by 1/scale.
double dcd(const FixedPointCode& code);

/// Decode a bare residue known to carry scale s under `repr` mod q.
double decode_residue(const BigInt& value, double s, const BigInt& q, Repr repr);

/// Element-wise ecd of a real matrix; returns the residues only.
std::vector<std::vector<BigInt>> encode_gain_matrix(
    const std::vector<std::vector<double>>& gains, double s, const BigInt& q,
    Repr repr = Repr::centered);

enum class BoundVerdict { ok, overflow_risk };

/// Pre-flight overflow analysis: encoded integers of magnitude up to
/// `max_abs_integer` survive decoding iff they stay strictly below q/2.
/// Homomorphic evaluation cannot observe a wrap at runtime, so this is the
/// only guard.
BoundVerdict bound_check(const BigInt& max_abs_integer, const BigInt& q);

}  // namespace hew
