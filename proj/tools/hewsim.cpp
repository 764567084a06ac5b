#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hew/simulate.hpp"

namespace {

void usage() {
    std::cout <<
        "hewsim - closed-loop benchmark of encrypted linear controllers\n"
        "\n"
        "  --scheme {paillier|gsw|ckks}   cryptosystem (default paillier)\n"
        "  --controller {sf|pi}           controller type (default sf)\n"
        "  --mode {partial|full}          gains plaintext or encrypted (default partial)\n"
        "  --scale-exp E                  fixed-point scale s = 10^E (default 3)\n"
        "  --horizon K                    simulation steps (default 50)\n"
        "  --seed S                       RNG seed (default 1)\n"
        "  --out FILE                     write the trajectory CSV to FILE\n"
        "  --lambda L                     paillier prime bit length (default 128)\n"
        "  --dim N                        lwe/ring dimension (default 4)\n"
        "  --modulus-exp E                ciphertext modulus q = 10^E (defaults 20/15)\n"
        "  --base B                       gsw decomposition base (default 10)\n"
        "  --sigma S                      noise std-dev (defaults 3.2 gsw, 0.1 ckks)\n"
        "  --level L                      ckks multiplication budget (default 2)\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    for (const auto& a : args) {
        if (a == "-h" || a == "--help") {
            usage();
            return 0;
        }
    }
    try {
        hew::sim::ExperimentConfig cfg = hew::sim::parse_cli(args);
        hew::sim::TrajectoryLog log = hew::sim::simulate(cfg);
        hew::sim::Summary summary = hew::sim::compare(log);
        if (!cfg.out_path.empty()) {
            hew::sim::write_csv(log, cfg.out_path);
        }
        std::printf("scheme=%s controller=%s mode=%s s=10^%d horizon=%d seed=%llu\n",
                    hew::sim::to_string(cfg.scheme).c_str(),
                    hew::sim::to_string(cfg.controller).c_str(),
                    hew::sim::to_string(cfg.mode).c_str(), cfg.scale_exp, cfg.horizon,
                    static_cast<unsigned long long>(cfg.seed));
        std::printf("max_dev_u=%.6g max_dev_y=%.6g final_state_norm=%.6g\n",
                    summary.max_dev_u, summary.max_dev_y, summary.final_state_norm);
        return 0;
    } catch (const hew::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const hew::DepthBudgetError& e) {
        std::cerr << "depth budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const hew::OverflowRiskError& e) {
        std::cerr << "overflow risk: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
