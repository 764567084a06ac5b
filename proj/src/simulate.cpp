#include "hew/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hew::sim {

namespace {

using control::Ct;

BigInt pow10_int(int exp) {
    BigInt q = 1;
    for (int i = 0; i < exp; ++i) {
        q *= 10;
    }
    return q;
}

std::unique_ptr<control::Backend> make_backend(const ExperimentConfig& cfg) {
    switch (cfg.scheme) {
        case Scheme::paillier:
            return control::make_paillier_backend({cfg.lambda}, cfg.seed);
        case Scheme::gsw: {
            control::GswConfig g;
            g.n = cfg.dim;
            g.q = pow10_int(cfg.modulus_exp > 0 ? cfg.modulus_exp : 20);
            g.base = cfg.base;
            g.sigma = cfg.sigma >= 0.0 ? cfg.sigma : 3.2;
            return control::make_gsw_backend(g, cfg.seed);
        }
        case Scheme::ckks: {
            control::CkksConfig c;
            c.n = cfg.dim;
            c.q = pow10_int(cfg.modulus_exp > 0 ? cfg.modulus_exp : 15);
            c.scale = cfg.scale();
            c.levels = cfg.level;
            c.sigma = cfg.sigma >= 0.0 ? cfg.sigma : 0.1;
            return control::make_ckks_backend(c, cfg.seed);
        }
    }
    throw ConfigError("unknown scheme");
}

// Worst-case encoded magnitudes against q/2, using a state magnitude cap of
// 10^3. A wrap during homomorphic evaluation is silent, so this runs before
// any step is taken.
void preflight(const ExperimentConfig& cfg, control::Backend& backend) {
    const double state_cap = 1e3;
    double s = cfg.scale();
    BigInt worst;
    if (cfg.controller == Controller::sf) {
        auto gains = benchmark_sf_gains();
        double gmax = 0.0;
        for (const auto& row : gains) {
            for (double g : row) {
                gmax = std::max(gmax, std::abs(g));
            }
        }
        double bound = static_cast<double>(gains[0].size()) *
                       std::nearbyint(s * gmax) * s * state_cap;
        mpz_set_d(worst.get_mpz_t(), std::ceil(bound));
    } else {
        auto spec = benchmark_pi_spec(s);
        double zki = std::abs(std::nearbyint(s * spec.ki));
        double zkp = std::abs(std::nearbyint(s * s * spec.kp));
        double bound = zki * (s * s * state_cap) + zkp * (s * state_cap);
        mpz_set_d(worst.get_mpz_t(), std::ceil(bound));
    }
    if (bound_check(worst, backend.message_modulus()) != BoundVerdict::ok) {
        throw OverflowRiskError("worst-case encoded magnitude exceeds q/2; refusing to simulate");
    }
}

std::vector<Ct> encrypt_state(control::Backend& backend, const std::vector<double>& x,
                              double s) {
    std::vector<Ct> out;
    out.reserve(x.size());
    for (double xi : x) {
        out.push_back(backend.enc_signal(round_scaled(xi, s), 1));
    }
    return out;
}

}  // namespace

PlantModel benchmark_plant() {
    return PlantModel{
        {{-0.27, 0.24, 0.08}, {-0.20, -0.35, -0.17}, {0.22, -0.02, 0.36}},
        {-0.05, 0.11, 0.41},
        {0.0, 0.0, 1.56},
        {10.0, 10.0, 10.0},
    };
}

std::vector<std::vector<double>> benchmark_sf_gains() {
    return {{-0.07, 0.06, -0.12}};
}

control::PiSpec benchmark_pi_spec(double s) {
    return control::PiSpec{-0.5, -0.75, 1.0, s};
}

double ExperimentConfig::scale() const {
    return std::pow(10.0, scale_exp);
}

void ExperimentConfig::validate() const {
    if (scheme == Scheme::paillier && mode == Mode::full) {
        throw ConfigError("paillier cannot run fully encrypted (no ciphertext multiplication)");
    }
    if (scheme == Scheme::ckks && controller == Controller::pi && level < 2) {
        throw ConfigError("PI control on ckks requires level >= 2");
    }
    if (scheme == Scheme::ckks && mode == Mode::full && level < 1) {
        throw ConfigError("fully encrypted evaluation on ckks requires level >= 1");
    }
    if (scale_exp < 0) {
        throw ConfigError("scale exponent must be nonnegative");
    }
    if (horizon < 0) {
        throw ConfigError("horizon must be nonnegative");
    }
    if (lambda < 4) {
        throw ConfigError("lambda must be at least 4");
    }
    if (dim < 1) {
        throw ConfigError("dimension must be positive");
    }
    if (base < 2) {
        throw ConfigError("decomposition base must be at least 2");
    }
    if (modulus_exp < 0) {
        throw ConfigError("modulus exponent must be nonnegative");
    }
    if (level < 0) {
        throw ConfigError("level must be nonnegative");
    }
}

std::pair<std::vector<double>, double> plant_step(const PlantModel& model,
                                                  const std::vector<double>& x,
                                                  double u) {
    std::size_t n = model.a.size();
    if (x.size() != n || model.b.size() != n || model.c.size() != n) {
        throw ConfigError("plant dimensions are inconsistent");
    }
    std::vector<double> x_next(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (model.a[i].size() != n) {
            throw ConfigError("plant dimensions are inconsistent");
        }
        for (std::size_t j = 0; j < n; ++j) {
            x_next[i] += model.a[i][j] * x[j];
        }
        x_next[i] += model.b[i] * u;
    }
    double y = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        y += model.c[j] * x[j];
    }
    return {std::move(x_next), y};
}

TrajectoryLog simulate(const ExperimentConfig& config) {
    config.validate();
    auto backend = make_backend(config);
    preflight(config, *backend);

    const PlantModel plant = benchmark_plant();
    const double s = config.scale();
    TrajectoryLog log;
    std::vector<double> x_enc = plant.x0;  // encrypted-loop plant copy
    std::vector<double> x_pl = plant.x0;   // plaintext twin
    log.x.push_back(x_enc);

    if (config.controller == Controller::sf) {
        const auto gains = benchmark_sf_gains();
        const auto enc_gains =
            encode_gain_matrix(gains, s, backend->message_modulus(), Repr::centered);
        std::vector<std::vector<Ct>> ct_gains;
        if (config.mode == Mode::full) {
            for (const auto& row : enc_gains) {
                std::vector<Ct> ct_row;
                ct_row.reserve(row.size());
                for (const auto& g : row) {
                    ct_row.push_back(backend->enc_gain(g, 1));
                }
                ct_gains.push_back(std::move(ct_row));
            }
        }
        for (int k = 0; k < config.horizon; ++k) {
            // sensor: encode + encrypt the fresh state
            std::vector<Ct> ct_x = encrypt_state(*backend, x_enc, s);
            // cloud: evaluate the feedback law
            std::vector<Ct> ct_u = config.mode == Mode::full
                                       ? control::sf_eval_full(*backend, ct_gains, ct_x)
                                       : control::sf_eval_partial(*backend, enc_gains, ct_x);
            // actuator: decrypt, decode, rescale
            double u_enc =
                control::decode_control(backend->dec_to_integer(ct_u[0]), s, 2);
            double u_plain = control::plaintext_sf(gains, x_pl)[0];

            auto [xn, y] = plant_step(plant, x_enc, u_enc);
            auto [xn_pl, y_pl] = plant_step(plant, x_pl, u_plain);
            log.u_enc.push_back(u_enc);
            log.u_plain.push_back(u_plain);
            log.y.push_back(y);
            log.y_plain.push_back(y_pl);
            log.dev.push_back(std::abs(u_enc - u_plain));
            x_enc = std::move(xn);
            x_pl = std::move(xn_pl);
            log.x.push_back(x_enc);
        }
    } else {
        const auto spec = benchmark_pi_spec(s);
        const auto gains = control::encode_pi_gains(spec);
        control::PiGainsCipher ct_gains;
        if (config.mode == Mode::full) {
            ct_gains = control::encrypt_pi_gains(*backend, gains);
        }
        Ct ct_z = backend->enc_signal(0, 2);  // z(0) = round(s^2 * xc(0)) = 0
        double xc_pl = 0.0;
        for (int k = 0; k < config.horizon; ++k) {
            double y = 0.0;
            for (std::size_t j = 0; j < x_enc.size(); ++j) {
                y += plant.c[j] * x_enc[j];
            }
            Ct ct_y = backend->enc_signal(round_scaled(y, s), 1);
            auto [ct_u, ct_z_next] =
                config.mode == Mode::full
                    ? control::pi_step_full(*backend, ct_z, ct_y, ct_gains)
                    : control::pi_step_partial(*backend, ct_z, ct_y, gains);
            double u_enc =
                control::decode_control(backend->dec_to_integer(ct_u), s, 3);
            ct_z = std::move(ct_z_next);
            log.controller_state.push_back(backend->dec_to_integer(ct_z));

            double y_pl = 0.0;
            for (std::size_t j = 0; j < x_pl.size(); ++j) {
                y_pl += plant.c[j] * x_pl[j];
            }
            auto [u_plain, xc_next] = control::plaintext_pi(spec, xc_pl, y_pl);
            xc_pl = xc_next;

            auto [xn, y_unused] = plant_step(plant, x_enc, u_enc);
            auto [xn_pl, y_pl_unused] = plant_step(plant, x_pl, u_plain);
            log.u_enc.push_back(u_enc);
            log.u_plain.push_back(u_plain);
            log.y.push_back(y);
            log.y_plain.push_back(y_pl);
            log.dev.push_back(std::abs(u_enc - u_plain));
            x_enc = std::move(xn);
            x_pl = std::move(xn_pl);
            log.x.push_back(x_enc);
        }
    }
    return log;
}

Summary compare(const TrajectoryLog& log) {
    Summary summary;
    for (std::size_t k = 0; k < log.u_enc.size(); ++k) {
        summary.max_dev_u = std::max(summary.max_dev_u, log.dev[k]);
        summary.max_dev_y = std::max(summary.max_dev_y, std::abs(log.y[k] - log.y_plain[k]));
    }
    for (double xi : log.x.back()) {
        summary.final_state_norm = std::max(summary.final_state_norm, std::abs(xi));
    }
    return summary;
}

std::vector<Summary> sweep_scaling(const ExperimentConfig& config,
                                   const std::vector<int>& exps) {
    std::vector<Summary> out;
    out.reserve(exps.size());
    for (int e : exps) {
        ExperimentConfig cfg = config;
        cfg.scale_exp = e;
        out.push_back(compare(simulate(cfg)));
    }
    return out;
}

namespace {

std::string fmt12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string format_csv(const TrajectoryLog& log) {
    std::ostringstream out;
    out << "k,u_enc,u_plain,x1,x2,x3,y,dev\n";
    for (std::size_t k = 0; k < log.u_enc.size(); ++k) {
        out << k << ',' << fmt12(log.u_enc[k]) << ',' << fmt12(log.u_plain[k]);
        for (double xi : log.x[k]) {
            out << ',' << fmt12(xi);
        }
        out << ',' << fmt12(log.y[k]) << ',' << fmt12(log.dev[k]) << '\n';
    }
    return out.str();
}

void write_csv(const TrajectoryLog& log, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open output file: " + path);
    }
    out << format_csv(log);
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::paillier: return "paillier";
        case Scheme::gsw: return "gsw";
        case Scheme::ckks: return "ckks";
    }
    return "?";
}

std::string to_string(Controller c) {
    return c == Controller::sf ? "sf" : "pi";
}

std::string to_string(Mode m) {
    return m == Mode::partial ? "partial" : "full";
}

ExperimentConfig parse_cli(const std::vector<std::string>& args) {
    ExperimentConfig cfg;
    auto next = [&](std::size_t& i) -> const std::string& {
        if (i + 1 >= args.size()) {
            throw ConfigError("missing value for " + args[i]);
        }
        return args[++i];
    };
    auto to_int = [](const std::string& flag, const std::string& v) {
        try {
            std::size_t pos = 0;
            int out = std::stoi(v, &pos);
            if (pos != v.size()) {
                throw std::invalid_argument(v);
            }
            return out;
        } catch (const std::exception&) {
            throw ConfigError("invalid integer for " + flag + ": " + v);
        }
    };
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& flag = args[i];
        if (flag == "--scheme") {
            const std::string& v = next(i);
            if (v == "paillier") {
                cfg.scheme = Scheme::paillier;
            } else if (v == "gsw") {
                cfg.scheme = Scheme::gsw;
            } else if (v == "ckks") {
                cfg.scheme = Scheme::ckks;
            } else {
                throw ConfigError("unknown scheme: " + v);
            }
        } else if (flag == "--controller") {
            const std::string& v = next(i);
            if (v == "sf") {
                cfg.controller = Controller::sf;
            } else if (v == "pi") {
                cfg.controller = Controller::pi;
            } else {
                throw ConfigError("unknown controller: " + v);
            }
        } else if (flag == "--mode") {
            const std::string& v = next(i);
            if (v == "partial") {
                cfg.mode = Mode::partial;
            } else if (v == "full") {
                cfg.mode = Mode::full;
            } else {
                throw ConfigError("unknown mode: " + v);
            }
        } else if (flag == "--scale-exp") {
            cfg.scale_exp = to_int(flag, next(i));
        } else if (flag == "--horizon") {
            cfg.horizon = to_int(flag, next(i));
        } else if (flag == "--seed") {
            cfg.seed = static_cast<std::uint64_t>(std::stoull(next(i)));
        } else if (flag == "--out") {
            cfg.out_path = next(i);
        } else if (flag == "--lambda") {
            cfg.lambda = static_cast<unsigned>(to_int(flag, next(i)));
        } else if (flag == "--dim") {
            cfg.dim = to_int(flag, next(i));
        } else if (flag == "--modulus-exp") {
            cfg.modulus_exp = to_int(flag, next(i));
        } else if (flag == "--base") {
            cfg.base = to_int(flag, next(i));
        } else if (flag == "--sigma") {
            try {
                cfg.sigma = std::stod(next(i));
            } catch (const std::exception&) {
                throw ConfigError("invalid value for --sigma");
            }
        } else if (flag == "--level") {
            cfg.level = to_int(flag, next(i));
        } else {
            throw ConfigError("unknown flag: " + flag);
        }
    }
    cfg.validate();
    return cfg;
}

}  // namespace hew::sim
