// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails. Tolerances are
// fixed here on purpose — do not loosen them to make a run green.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hew/control.hpp"
#include "hew/encoding.hpp"
#include "hew/lwe_gsw.hpp"
#include "hew/modarith.hpp"
#include "hew/paillier.hpp"
#include "hew/rlwe_ckks.hpp"
#include "hew/simulate.hpp"

namespace {

using namespace hew;

BigInt pow10(int e) {
    BigInt q = 1;
    for (int i = 0; i < e; ++i) {
        q *= 10;
    }
    return q;
}

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// 1. Paillier addition and plaintext multiplication are exact.
Check paillier_homomorphisms_exact() {
    Check c;
    Rng rng(101);
    auto run = [&](unsigned lambda, int trials) {
        auto keys = paillier::keygen(lambda, rng);
        for (int i = 0; i < trials; ++i) {
            BigInt z1 = rng.uniform_below(keys.pk);
            BigInt z2 = rng.uniform_below(keys.pk);
            auto sum = paillier::add(paillier::enc(z1, keys.pk, rng),
                                     paillier::enc(z2, keys.pk, rng), keys.pk);
            c.require(paillier::dec(sum, keys) == (z1 + z2) % keys.pk,
                      "addition mismatch at lambda=" + std::to_string(lambda));
            auto prod = paillier::smul(paillier::enc(z1, keys.pk, rng), z2, keys.pk);
            c.require(paillier::dec(prod, keys) == z1 * z2 % keys.pk,
                      "scalar multiplication mismatch at lambda=" + std::to_string(lambda));
        }
    };
    run(32, 200);
    run(128, 10);
    return c;
}

// 2. Doubling enc(ecd(1.2345, s=10^3)) decodes to 2.468 (round-half-to-even
// sends 1234.4999... to 1234; a half-away-from-zero rounder would give 2.470,
// hence the 2/s band).
Check paillier_listing() {
    Check c;
    Rng rng(102);
    auto keys = paillier::keygen(64, rng);
    BigInt z = ecd(1.2345, 1000, keys.pk, Repr::nonneg).value;
    auto sum = paillier::add(paillier::enc(z, keys.pk, rng),
                             paillier::enc(z, keys.pk, rng), keys.pk);
    double ans = decode_residue(paillier::dec(sum, keys), 1000, keys.pk, Repr::nonneg);
    char buf[64];
    std::snprintf(buf, sizeof buf, "decoded %.4f", ans);
    c.detail = buf;
    c.require(std::abs(ans - 2.468) <= 0.002, c.detail);
    return c;
}

// 3. GSW(4.5678) x LWE(1.2345) decodes at s^2 to 5.6369 +- 0.05, 20 seeds.
Check gsw_listing() {
    Check c;
    auto params = lwe::setup(4, pow10(20), 10, 3.2);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Rng rng(seed);
        auto sk = lwe::keygen(params, rng);
        BigInt zx = round_scaled(1.2345, 1000.0);
        BigInt zk = round_scaled(4.5678, 1000.0);
        auto ct = lwe::enc(zx, sk, params, rng);
        auto gsw = lwe::gsw_enc(zk, sk, params, rng);
        auto prod = lwe::external_product(gsw, ct, params);
        BigInt res = reduce_centered(lwe::dec(prod, sk, params), params.q);
        double ans = res.get_d() / 1e6;
        char buf[64];
        std::snprintf(buf, sizeof buf, "seed %llu decoded %.4f",
                      static_cast<unsigned long long>(seed), ans);
        c.require(std::abs(ans - 5.6369) <= 0.05, buf);
    }
    return c;
}

// 4. delta-scaled decryption is exact on fresh ciphertexts, 1000 trials.
Check lwe_scaled_exact() {
    Check c;
    auto params = lwe::setup(4, pow10(20), 10, 3.2);
    Rng rng(104);
    auto sk = lwe::keygen(params, rng);
    BigInt delta = 1000;
    BigInt range = params.q / (2 * delta);
    for (int i = 0; i < 1000; ++i) {
        BigInt z = rng.uniform_centered(range);
        auto ct = lwe::enc(delta * z, sk, params, rng);
        c.require(lwe::dec_scaled(ct, sk, params, delta) == z,
                  "scaled decryption mismatch at trial " + std::to_string(i));
    }
    return c;
}

// 5. x^4 + y^2 (x - y) + y at depth budget L=2; depth 3 must error.
Check ckks_depth_contract() {
    Check c;
    auto params = ckks::setup(4, pow10(15), 1000.0, 2, 0.1);
    Rng rng(105);
    auto keys = ckks::keygen(params, rng);
    auto enc_val = [&](double v) {
        return ckks::enc(ckks::ecd_scalar(v, params.scale, params), params.scale,
                         keys.sk, params, rng);
    };
    auto ct = ckks::eval_demo_poly(enc_val(1.2345), enc_val(4.5678), keys.evk, params);
    double ans = ckks::dcd_scalar(ckks::dec(ct, keys.sk), ct.scale);
    double expected = std::pow(1.2345, 4) +
                      4.5678 * 4.5678 * (1.2345 - 4.5678) + 4.5678;
    char buf[96];
    std::snprintf(buf, sizeof buf, "decoded %.4f, oracle %.4f", ans, expected);
    c.require(std::abs(ans - expected) <= 0.01 * std::abs(expected), buf);

    bool threw = false;
    try {
        auto x2 = ckks::mul(enc_val(1.5), enc_val(1.5), keys.evk, params);
        auto x4 = ckks::mul(x2, x2, keys.evk, params);
        ckks::mul(x4, x4, keys.evk, params);  // depth 3
    } catch (const DepthBudgetError&) {
        threw = true;
    }
    c.require(threw, "depth-3 request did not raise a depth-budget error");
    return c;
}

// 6. Closed-loop state feedback across the three backend configurations.
Check closed_loop_sf() {
    Check c;
    struct Row {
        sim::Scheme scheme;
        sim::Mode mode;
    };
    for (Row row : {Row{sim::Scheme::paillier, sim::Mode::partial},
                    Row{sim::Scheme::gsw, sim::Mode::full},
                    Row{sim::Scheme::ckks, sim::Mode::full}}) {
        sim::ExperimentConfig cfg;
        cfg.scheme = row.scheme;
        cfg.mode = row.mode;
        cfg.controller = sim::Controller::sf;
        cfg.horizon = 50;
        auto log = sim::simulate(cfg);
        auto summary = sim::compare(log);
        std::string tag = sim::to_string(row.scheme);
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "%s: u(0)=%.4f max_dev_y=%.4g |x(50)|=%.4g", tag.c_str(),
                      log.u_enc[0], summary.max_dev_y, summary.final_state_norm);
        c.require(std::abs(log.u_enc[0] - (-1.3)) <= 0.01, buf);
        c.require(summary.max_dev_y <= 0.05, buf);
        c.require(summary.final_state_norm <= 0.1, buf);
    }
    return c;
}

// 7. Closed-loop PI: benchmark first step, convergence, CKKS depth survival,
// and 200-step boundedness of the controller state.
Check closed_loop_pi() {
    Check c;
    struct Row {
        sim::Scheme scheme;
        sim::Mode mode;
    };
    for (Row row : {Row{sim::Scheme::paillier, sim::Mode::partial},
                    Row{sim::Scheme::gsw, sim::Mode::full},
                    Row{sim::Scheme::ckks, sim::Mode::full}}) {
        sim::ExperimentConfig cfg;
        cfg.scheme = row.scheme;
        cfg.mode = row.mode;
        cfg.controller = sim::Controller::pi;
        cfg.horizon = 50;
        auto log = sim::simulate(cfg);  // CKKS at L=2: no depth error may escape
        std::string tag = sim::to_string(row.scheme);
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s: u(0)=%.4f |y(50)|=%.4g", tag.c_str(),
                      log.u_enc[0], std::abs(log.y.back()));
        c.require(std::abs(log.u_enc[0] - (-7.8)) <= 0.01, buf);
        c.require(std::abs(log.y.back()) <= 0.1, buf);
    }
    // long-run boundedness on the exact backend
    sim::ExperimentConfig cfg;
    cfg.scheme = sim::Scheme::paillier;
    cfg.controller = sim::Controller::pi;
    cfg.horizon = 200;
    auto log = sim::simulate(cfg);
    control::PaillierConfig pk_cfg;
    auto backend = control::make_paillier_backend(pk_cfg, 1);
    for (std::size_t k = 0; k < log.controller_state.size(); ++k) {
        c.require(bound_check(log.controller_state[k], backend->message_modulus()) ==
                      BoundVerdict::ok,
                  "controller state out of bounds at step " + std::to_string(k));
    }
    return c;
}

// 8. Scaling sweep s in {10, 100, 1000}: convergence, monotone max_dev_u,
// and pointwise output agreement across scales within 0.05.
Check scaling_sweep() {
    Check c;
    std::vector<sim::TrajectoryLog> logs;
    std::vector<sim::Summary> summaries;
    for (int e : {1, 2, 3}) {
        sim::ExperimentConfig cfg;
        cfg.scheme = sim::Scheme::paillier;
        cfg.controller = sim::Controller::sf;
        cfg.scale_exp = e;
        cfg.horizon = 50;
        logs.push_back(sim::simulate(cfg));
        summaries.push_back(sim::compare(logs.back()));
        c.require(summaries.back().final_state_norm <= 0.1,
                  "no convergence at s=10^" + std::to_string(e));
    }
    c.require(summaries[0].max_dev_u >= summaries[1].max_dev_u &&
                  summaries[1].max_dev_u >= summaries[2].max_dev_u,
              "max_dev_u not non-increasing in s");
    double worst = 0.0;
    for (std::size_t k = 0; k < logs[0].y.size(); ++k) {
        for (std::size_t i = 0; i < logs.size(); ++i) {
            for (std::size_t j = i + 1; j < logs.size(); ++j) {
                worst = std::max(worst, std::abs(logs[i].y[k] - logs[j].y[k]));
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "pointwise output gap across scales: %.4f", worst);
    c.require(worst <= 0.05, buf);
    return c;
}

// 9. Quantization bound on a grid plus the constructed-overflow error.
Check quantization_bound() {
    Check c;
    BigInt q = pow10(9);
    for (double s : {10.0, 100.0, 1000.0}) {
        for (int i = 0; i < 10000; ++i) {
            double x = -40.0 + 80.0 * static_cast<double>(i) / 9999.0;
            for (Repr repr : {Repr::nonneg, Repr::centered}) {
                double back = dcd(ecd(x, s, q, repr));
                c.require(std::abs(back - x) <= 0.5 / s + 1e-12,
                          "grid point out of tolerance at s=" + std::to_string(s));
            }
        }
    }
    BigInt small_q = 100;
    double back = dcd(ecd(60.0, 1.0, small_q, Repr::nonneg));
    c.require(std::abs(back - 60.0) == 100.0, "overflow error is not exactly q/s");
    return c;
}

// 10. Negacyclic ring_mul against a fold-with-sign convolution oracle.
Check ring_mul_oracle() {
    Check c;
    Rng rng(110);
    for (int n : {4, 8}) {
        auto params = ckks::setup(n, pow10(15), 1000.0, 2, 0.1);
        for (int trial = 0; trial < 100; ++trial) {
            ckks::RingElement a{std::vector<BigInt>(n), params.q};
            ckks::RingElement b{std::vector<BigInt>(n), params.q};
            for (int j = 0; j < n; ++j) {
                a.coeffs[j] = rng.uniform_centered(pow10(6));
                b.coeffs[j] = rng.uniform_centered(pow10(6));
            }
            std::vector<BigInt> full(2 * n - 1, BigInt(0));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    full[i + j] += a.coeffs[i] * b.coeffs[j];
                }
            }
            auto prod = ckks::ring_mul(a, b);
            for (int k = 0; k < n; ++k) {
                BigInt expect = full[k];
                if (k + n <= 2 * n - 2) {
                    expect -= full[k + n];
                }
                c.require(prod.coeffs[k] == reduce_centered(expect, params.q),
                          "coefficient mismatch at N=" + std::to_string(n));
            }
        }
    }
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria{
        {"Paillier homomorphisms exact", paillier_homomorphisms_exact},
        {"Paillier listing decodes to 2.468", paillier_listing},
        {"GSW listing decodes to 5.6369 +- 0.05 over 20 seeds", gsw_listing},
        {"delta-scaled LWE decryption exact", lwe_scaled_exact},
        {"CKKS depth contract at L=2", ckks_depth_contract},
        {"closed-loop state feedback on three backends", closed_loop_sf},
        {"closed-loop PI on three backends", closed_loop_pi},
        {"scaling sweep convergence and agreement", scaling_sweep},
        {"fixed-point quantization bound", quantization_bound},
        {"ring multiplication matches convolution oracle", ring_mul_oracle},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check result;
        try {
            result = criteria[i].run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  criterion %zu: %s%s%s\n", result.ok ? "PASS" : "FAIL",
                    i + 1, criteria[i].title,
                    result.detail.empty() ? "" : " -- ", result.detail.c_str());
        std::fflush(stdout);
        if (!result.ok) {
            ++failures;
        }
    }
    if (failures != 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    }
    return failures == 0 ? 0 : 1;
}
