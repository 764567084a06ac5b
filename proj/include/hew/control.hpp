#pragma once

#include <any>
#include <memory>
#include <utility>
#include <vector>

#include "hew/encoding.hpp"
#include "hew/lwe_gsw.hpp"
#include "hew/paillier.hpp"
#include "hew/rlwe_ckks.hpp"

namespace hew::control {

/// Opaque ciphertext handle; the concrete type depends on the backend.
using Ct = std::any;

/// Capability contract shared by the three cryptosystems. Messages are signed
/// integers (centered view); each backend maps them into its own message
/// space. `scale_pow` is bookkeeping for backends that track an accumulated
/// scale (CKKS): the message carries a nominal scale of s^scale_pow.
class Backend {
  public:
    virtual ~Backend() = default;

    virtual const char* name() const = 0;
    virtual bool supports_cipher_mul() const = 0;

    /// Modulus bounding the usable message range (pk for Paillier, q else).
    virtual BigInt message_modulus() const = 0;

    virtual Ct enc_signal(const BigInt& z, int scale_pow) = 0;
    virtual BigInt dec_to_integer(const Ct& ct) = 0;

    virtual Ct add(const Ct& ct1, const Ct& ct2) = 0;
    virtual Ct mul_plain(const Ct& ct, const BigInt& c, int scale_pow) = 0;

    /// Encrypts a gain for ciphertext-ciphertext multiplication (GSW matrix /
    /// CKKS ciphertext). Throws CapabilityError on Paillier.
    virtual Ct enc_gain(const BigInt& z, int scale_pow) = 0;
    virtual Ct mul_cipher(const Ct& gain, const Ct& signal) = 0;
};

struct PaillierConfig {
    unsigned lambda = 128;
};
struct GswConfig {
    int n = 4;
    BigInt q;       // default 10^20
    BigInt base = 10;
    double sigma = 3.2;
};
struct CkksConfig {
    int n = 4;
    BigInt q;       // default 10^15
    double scale = 1000.0;
    int levels = 2;
    double sigma = 0.1;
};

std::unique_ptr<Backend> make_paillier_backend(const PaillierConfig& cfg, std::uint64_t seed);
std::unique_ptr<Backend> make_gsw_backend(const GswConfig& cfg, std::uint64_t seed);
std::unique_ptr<Backend> make_ckks_backend(const CkksConfig& cfg, std::uint64_t seed);

struct StateFeedbackSpec {
    std::vector<std::vector<double>> gains;  ///< K, m x n
    double s = 1000.0;
};

struct PiSpec {
    double kp = 0.0;
    double ki = 0.0;
    double dt = 1.0;
    double s = 1000.0;
};

/// Partially encrypted state feedback: u_i = sum_j encK[i][j] (.) ct_x[j].
/// encK holds the signed integers round(s*K); decode divisor is s^2.
std::vector<Ct> sf_eval_partial(Backend& backend,
                                const std::vector<std::vector<BigInt>>& enc_gains,
                                const std::vector<Ct>& ct_x);

/// Fully encrypted state feedback: u_i = sum_j ct_K[i][j] (x) ct_x[j].
std::vector<Ct> sf_eval_full(Backend& backend,
                             const std::vector<std::vector<Ct>>& ct_gains,
                             const std::vector<Ct>& ct_x);

/// Integer PI gains: round(s*Ki), round(s^2*Kp), round(s*dt).
struct PiGainsPlain {
    BigInt zki;
    BigInt zkp;
    BigInt zdt;
};

/// The same gains encrypted once at setup for the fully encrypted mode.
struct PiGainsCipher {
    Ct ki;
    Ct kp;
    Ct dt;
};

PiGainsPlain encode_pi_gains(const PiSpec& spec);
PiGainsCipher encrypt_pi_gains(Backend& backend, const PiGainsPlain& gains);

/// One partially encrypted PI step; returns (ct_u, ct_z_next). ct_z encrypts
/// the integer recursion state (scale s^2), ct_y encrypts round(s*y(k)); the
/// control action decodes with divisor s^3.
std::pair<Ct, Ct> pi_step_partial(Backend& backend, const Ct& ct_z, const Ct& ct_y,
                                  const PiGainsPlain& gains);

/// One fully encrypted PI step with pre-encrypted gains.
std::pair<Ct, Ct> pi_step_full(Backend& backend, const Ct& ct_z, const Ct& ct_y,
                               const PiGainsCipher& gains);

/// Actuator-side rescaling: divides by s^depth (2 for state feedback, 3 for PI).
double decode_control(const BigInt& value, double s, int depth);

/// Exact real-arithmetic oracles.
std::vector<double> plaintext_sf(const std::vector<std::vector<double>>& gains,
                                 const std::vector<double>& x);
std::pair<double, double> plaintext_pi(const PiSpec& spec, double xc, double y);

}  // namespace hew::control
