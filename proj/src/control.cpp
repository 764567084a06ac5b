#include "hew/control.hpp"

#include <cmath>

namespace hew::control {

namespace {

BigInt pow10(int exp) {
    BigInt q = 1;
    for (int i = 0; i < exp; ++i) {
        q *= 10;
    }
    return q;
}

class PaillierBackend final : public Backend {
  public:
    PaillierBackend(const PaillierConfig& cfg, std::uint64_t seed) : rng_(seed) {
        keys_ = paillier::keygen(cfg.lambda, rng_);
    }

    const char* name() const override { return "paillier"; }
    bool supports_cipher_mul() const override { return false; }
    BigInt message_modulus() const override { return keys_.pk; }

    Ct enc_signal(const BigInt& z, int) override {
        return paillier::enc(reduce_nonneg(z, keys_.pk), keys_.pk, rng_);
    }

    BigInt dec_to_integer(const Ct& ct) override {
        auto& c = std::any_cast<const paillier::Ciphertext&>(ct);
        return reduce_centered(paillier::dec(c, keys_), keys_.pk);
    }

    Ct add(const Ct& ct1, const Ct& ct2) override {
        return paillier::add(std::any_cast<const paillier::Ciphertext&>(ct1),
                             std::any_cast<const paillier::Ciphertext&>(ct2), keys_.pk);
    }

    Ct mul_plain(const Ct& ct, const BigInt& c, int) override {
        return paillier::smul(std::any_cast<const paillier::Ciphertext&>(ct), c,
                              keys_.pk);
    }

    Ct enc_gain(const BigInt&, int) override {
        throw CapabilityError("paillier does not support ciphertext-ciphertext multiplication");
    }

    Ct mul_cipher(const Ct&, const Ct&) override {
        throw CapabilityError("paillier does not support ciphertext-ciphertext multiplication");
    }

  private:
    Rng rng_;
    paillier::Keys keys_;
};

class GswBackend final : public Backend {
  public:
    GswBackend(const GswConfig& cfg, std::uint64_t seed) : rng_(seed) {
        BigInt q = cfg.q != 0 ? cfg.q : pow10(20);
        params_ = lwe::setup(cfg.n, q, cfg.base, cfg.sigma);
        sk_ = lwe::keygen(params_, rng_);
    }

    const char* name() const override { return "gsw"; }
    bool supports_cipher_mul() const override { return true; }
    BigInt message_modulus() const override { return params_.q; }

    Ct enc_signal(const BigInt& z, int) override {
        return lwe::enc(reduce_centered(z, params_.q), sk_, params_, rng_);
    }

    BigInt dec_to_integer(const Ct& ct) override {
        return lwe::dec(std::any_cast<const lwe::Ciphertext&>(ct), sk_, params_);
    }

    Ct add(const Ct& ct1, const Ct& ct2) override {
        return lwe::add(std::any_cast<const lwe::Ciphertext&>(ct1),
                        std::any_cast<const lwe::Ciphertext&>(ct2), params_);
    }

    Ct mul_plain(const Ct& ct, const BigInt& c, int) override {
        return lwe::smul(std::any_cast<const lwe::Ciphertext&>(ct), c, params_);
    }

    Ct enc_gain(const BigInt& z, int) override {
        return lwe::gsw_enc(reduce_centered(z, params_.q), sk_, params_, rng_);
    }

    Ct mul_cipher(const Ct& gain, const Ct& signal) override {
        return lwe::external_product(std::any_cast<const lwe::GswCiphertext&>(gain),
                                     std::any_cast<const lwe::Ciphertext&>(signal),
                                     params_);
    }

  private:
    Rng rng_;
    lwe::Params params_;
    lwe::SecretKey sk_;
};

class CkksBackend final : public Backend {
  public:
    CkksBackend(const CkksConfig& cfg, std::uint64_t seed) : rng_(seed) {
        BigInt q = cfg.q != 0 ? cfg.q : pow10(15);
        params_ = ckks::setup(cfg.n, q, cfg.scale, cfg.levels, cfg.sigma);
        keys_ = ckks::keygen(params_, rng_);
    }

    const char* name() const override { return "ckks"; }
    bool supports_cipher_mul() const override { return true; }
    BigInt message_modulus() const override { return params_.q; }

    Ct enc_signal(const BigInt& z, int scale_pow) override {
        return ckks::enc(ckks::ring_constant(z, params_), nominal_scale(scale_pow),
                         keys_.sk, params_, rng_);
    }

    BigInt dec_to_integer(const Ct& ct) override {
        auto& c = std::any_cast<const ckks::Ciphertext&>(ct);
        return ckks::dec(c, keys_.sk).coeffs[0];
    }

    Ct add(const Ct& ct1, const Ct& ct2) override {
        return ckks::add(std::any_cast<const ckks::Ciphertext&>(ct1),
                         std::any_cast<const ckks::Ciphertext&>(ct2));
    }

    Ct mul_plain(const Ct& ct, const BigInt& c, int scale_pow) override {
        return ckks::mul_plain(std::any_cast<const ckks::Ciphertext&>(ct),
                               ckks::ring_constant(c, params_),
                               nominal_scale(scale_pow));
    }

    Ct enc_gain(const BigInt& z, int scale_pow) override {
        return enc_signal(z, scale_pow);
    }

    Ct mul_cipher(const Ct& gain, const Ct& signal) override {
        return ckks::mul(std::any_cast<const ckks::Ciphertext&>(gain),
                         std::any_cast<const ckks::Ciphertext&>(signal), keys_.evk,
                         params_);
    }

  private:
    double nominal_scale(int scale_pow) const {
        return std::pow(params_.scale, scale_pow);
    }

    Rng rng_;
    ckks::Params params_;
    ckks::KeyPair keys_;
};

}  // namespace

std::unique_ptr<Backend> make_paillier_backend(const PaillierConfig& cfg,
                                               std::uint64_t seed) {
    return std::make_unique<PaillierBackend>(cfg, seed);
}

std::unique_ptr<Backend> make_gsw_backend(const GswConfig& cfg, std::uint64_t seed) {
    return std::make_unique<GswBackend>(cfg, seed);
}

std::unique_ptr<Backend> make_ckks_backend(const CkksConfig& cfg, std::uint64_t seed) {
    return std::make_unique<CkksBackend>(cfg, seed);
}

std::vector<Ct> sf_eval_partial(Backend& backend,
                                const std::vector<std::vector<BigInt>>& enc_gains,
                                const std::vector<Ct>& ct_x) {
    std::vector<Ct> out;
    out.reserve(enc_gains.size());
    for (const auto& row : enc_gains) {
        if (row.size() != ct_x.size()) {
            throw ConfigError("gain row dimension does not match the state vector");
        }
        Ct acc = backend.mul_plain(ct_x[0], row[0], 1);
        for (std::size_t j = 1; j < row.size(); ++j) {
            acc = backend.add(acc, backend.mul_plain(ct_x[j], row[j], 1));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Ct> sf_eval_full(Backend& backend,
                             const std::vector<std::vector<Ct>>& ct_gains,
                             const std::vector<Ct>& ct_x) {
    if (!backend.supports_cipher_mul()) {
        throw CapabilityError("backend cannot evaluate fully encrypted feedback");
    }
    std::vector<Ct> out;
    out.reserve(ct_gains.size());
    for (const auto& row : ct_gains) {
        if (row.size() != ct_x.size()) {
            throw ConfigError("gain row dimension does not match the state vector");
        }
        Ct acc = backend.mul_cipher(row[0], ct_x[0]);
        for (std::size_t j = 1; j < row.size(); ++j) {
            acc = backend.add(acc, backend.mul_cipher(row[j], ct_x[j]));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

PiGainsPlain encode_pi_gains(const PiSpec& spec) {
    return PiGainsPlain{round_scaled(spec.ki, spec.s),
                        round_scaled(spec.kp, spec.s * spec.s),
                        round_scaled(spec.dt, spec.s)};
}

PiGainsCipher encrypt_pi_gains(Backend& backend, const PiGainsPlain& gains) {
    return PiGainsCipher{backend.enc_gain(gains.zki, 1), backend.enc_gain(gains.zkp, 2),
                         backend.enc_gain(gains.zdt, 1)};
}

std::pair<Ct, Ct> pi_step_partial(Backend& backend, const Ct& ct_z, const Ct& ct_y,
                                  const PiGainsPlain& gains) {
    Ct ct_u = backend.add(backend.mul_plain(ct_z, gains.zki, 1),
                          backend.mul_plain(ct_y, gains.zkp, 2));
    Ct ct_z_next = backend.add(ct_z, backend.mul_plain(ct_y, gains.zdt, 1));
    return {std::move(ct_u), std::move(ct_z_next)};
}

std::pair<Ct, Ct> pi_step_full(Backend& backend, const Ct& ct_z, const Ct& ct_y,
                               const PiGainsCipher& gains) {
    if (!backend.supports_cipher_mul()) {
        throw CapabilityError("backend cannot evaluate fully encrypted PI control");
    }
    Ct ct_u = backend.add(backend.mul_cipher(gains.ki, ct_z),
                          backend.mul_cipher(gains.kp, ct_y));
    Ct ct_z_next = backend.add(ct_z, backend.mul_cipher(gains.dt, ct_y));
    return {std::move(ct_u), std::move(ct_z_next)};
}

double decode_control(const BigInt& value, double s, int depth) {
    return value.get_d() / std::pow(s, depth);
}

std::vector<double> plaintext_sf(const std::vector<std::vector<double>>& gains,
                                 const std::vector<double>& x) {
    std::vector<double> u;
    u.reserve(gains.size());
    for (const auto& row : gains) {
        if (row.size() != x.size()) {
            throw ConfigError("gain row dimension does not match the state vector");
        }
        double acc = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            acc += row[j] * x[j];
        }
        u.push_back(acc);
    }
    return u;
}

std::pair<double, double> plaintext_pi(const PiSpec& spec, double xc, double y) {
    double u = spec.ki * xc + spec.kp * y;
    double xc_next = xc + spec.dt * y;
    return {u, xc_next};
}

}  // namespace hew::control
