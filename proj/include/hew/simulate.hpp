#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hew/control.hpp"

namespace hew::sim {

/// Benchmark plant x(k+1) = A x(k) + B u(k), y(k) = C x(k); defaults are the
/// discretized oscillator used throughout, with x0 = (10, 10, 10).
struct PlantModel {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::vector<double> c;
    std::vector<double> x0;
};

PlantModel benchmark_plant();

/// Gains for the benchmark: K = (-0.07, 0.06, -0.12), Kp = -0.5, Ki = -0.75.
std::vector<std::vector<double>> benchmark_sf_gains();
control::PiSpec benchmark_pi_spec(double s);

enum class Scheme { paillier, gsw, ckks };
enum class Controller { sf, pi };
enum class Mode { partial, full };

struct ExperimentConfig {
    Scheme scheme = Scheme::paillier;
    Controller controller = Controller::sf;
    Mode mode = Mode::partial;
    int scale_exp = 3;  ///< s = 10^scale_exp
    int horizon = 50;
    std::uint64_t seed = 1;
    // scheme parameters
    unsigned lambda = 128;        // paillier
    int dim = 4;                  // gsw/ckks N
    int modulus_exp = 0;          // q = 10^modulus_exp; 0 = scheme default (20 / 15)
    int base = 10;                // gsw decomposition base
    double sigma = -1.0;          // < 0 = scheme default (3.2 gsw, 0.1 ckks)
    int level = 2;                // ckks L
    std::string out_path;         // CSV destination; empty = no file

    double scale() const;
    void validate() const;  ///< throws ConfigError on contract violations
};

/// Per-step record of the encrypted loop and its plaintext twin.
struct TrajectoryLog {
    std::vector<double> u_enc;
    std::vector<double> u_plain;
    std::vector<std::vector<double>> x;  ///< encrypted-loop states, horizon+1 entries
    std::vector<double> y;               ///< encrypted-loop outputs, one per step
    std::vector<double> y_plain;
    std::vector<double> dev;             ///< |u_enc - u_plain|
    std::vector<BigInt> controller_state;  ///< decrypted PI state z(k) (empty for SF)
};

/// One plant update. Plant arithmetic is plain real arithmetic; only the
/// controller path is ever encrypted.
std::pair<std::vector<double>, double> plant_step(const PlantModel& model,
                                                  const std::vector<double>& x,
                                                  double u);

/// Runs the encrypted loop and an exact plaintext twin side by side from the
/// same x0 (two independent plant copies). Performs the overflow pre-flight
/// before stepping.
TrajectoryLog simulate(const ExperimentConfig& config);

struct Summary {
    double max_dev_u = 0.0;
    double max_dev_y = 0.0;
    double final_state_norm = 0.0;  ///< infinity norm of x(horizon)
};

Summary compare(const TrajectoryLog& log);

/// simulate + compare for s = 10^e, e in exps.
std::vector<Summary> sweep_scaling(const ExperimentConfig& config,
                                   const std::vector<int>& exps = {1, 2, 3});

/// CSV with header k,u_enc,u_plain,x1,x2,x3,y,dev; 12 significant digits.
void write_csv(const TrajectoryLog& log, const std::string& path);
std::string format_csv(const TrajectoryLog& log);

/// Parses the CLI flag set; throws ConfigError on unknown values.
ExperimentConfig parse_cli(const std::vector<std::string>& args);

std::string to_string(Scheme s);
std::string to_string(Controller c);
std::string to_string(Mode m);

}  // namespace hew::sim
