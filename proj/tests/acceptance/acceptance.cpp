// Acceptance suite: every release-gating result as one pass/fail criterion.
// Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cavsim/cavity.hpp"
#include "cavsim/circuit.hpp"
#include "cavsim/cli.hpp"
#include "cavsim/entangle.hpp"
#include "cavsim/experiments.hpp"
#include "cavsim/measure.hpp"
#include "cavsim/tomography.hpp"

using namespace cavsim;

namespace {

const double kPi = std::acos(-1.0);
int g_failures = 0;

void criterion(int id, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::printf("[PASS] criterion %d: %s\n", id, name.c_str());
    } catch (const std::exception& e) {
        std::printf("[FAIL] criterion %d: %s: %s\n", id, name.c_str(), e.what());
        ++g_failures;
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::runtime_error(message);
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

TwoQubitState family_state(double theta) {
    CircuitParams p;
    p.theta_p = kPi;
    p.theta = theta;
    p.phi = -kPi;
    p.lambda = kPi;
    return evolution_block(prepare_initial(p), p);
}

TwoQubitState random_state(Xoshiro256ss& rng) {
    std::array<Complex, 4> amps;
    double n = 0.0;
    for (auto& a : amps) {
        const double u1 = 1.0 - rng.next_double();
        const double u2 = rng.next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        a = Complex{r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
        n += std::norm(a);
    }
    n = std::sqrt(n);
    for (auto& a : amps) a /= n;
    return TwoQubitState{amps};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot read back " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 1. Ideal probabilities from the closed form.
void ideal_probabilities() {
    const double r = 1.0 / std::sqrt(2.0);
    for (double theta : {kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0, kPi}) {
        const IdealProbs p = analytic_probabilities(r, r, theta);
        const double c = std::cos(theta / 2.0);
        const double s = std::sin(theta / 2.0);
        require(std::abs(p.p00 - 0.5) <= 1e-12, fmt("p00 off at theta=%.6f", theta));
        require(std::abs(p.p10 - 0.5 * c * c) <= 1e-12, fmt("p10 off at theta=%.6f", theta));
        require(std::abs(p.p01 - 0.5 * s * s) <= 1e-12, fmt("p01 off at theta=%.6f", theta));
    }
    const IdealProbs p = analytic_probabilities(r, r, kPi / 2.0);
    require(std::abs(p.p00 - 0.5) <= 1e-12 && std::abs(p.p10 - 0.25) <= 1e-12 &&
                std::abs(p.p01 - 0.25) <= 1e-12,
            "theta = pi/2 must give (0.5, 0.25, 0.25)");
}

// 2. Empirical probabilities close in on the ideal ones as shots grow.
void shot_convergence() {
    CircuitParams params;
    params.theta_p = kPi / 2.0;
    params.theta = kPi / 2.0;
    params.phi = -kPi / 2.0;
    params.lambda = kPi / 2.0;
    params.delta = kPi / 2.0;
    const auto ideal = born_probabilities(evolution_block(prepare_initial(params), params));

    double mad_1024 = 0.0;
    double mad_8192 = 0.0;
    int within = 0;
    const int seeds = 200;
    for (int s = 0; s < seeds; ++s) {
        const auto emp_small =
            empirical_probs(sample_counts(ideal, 1024, static_cast<std::uint64_t>(s)));
        const auto emp_large =
            empirical_probs(sample_counts(ideal, 8192, static_cast<std::uint64_t>(10000 + s)));
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            mad_1024 += std::abs(emp_small[static_cast<size_t>(i)] - ideal[static_cast<size_t>(i)]);
            const double dev = std::abs(emp_large[static_cast<size_t>(i)] - ideal[static_cast<size_t>(i)]);
            mad_8192 += dev;
            ok = ok && dev <= 0.02;
        }
        within += ok ? 1 : 0;
    }
    mad_1024 /= 4.0 * seeds;
    mad_8192 /= 4.0 * seeds;
    require(mad_8192 < mad_1024,
            fmt("MAD must shrink with shots: MAD(8192)=%.5f >= MAD(1024)=%.5f", mad_8192, mad_1024));
    require(within >= 198, fmt("only %.0f%% of seeds within 0.02 at 8192 shots", within / 2.0));
}

// 3. Perfect state transfer plus exact tomography.
void perfect_transfer() {
    CircuitParams params;
    params.theta_p = kPi / 2.0;
    params.phi_p = kPi / 2.0;
    params.theta = kPi;
    params.phi = -kPi / 2.0;
    params.lambda = kPi / 2.0;
    params.delta = 99.0 * kPi / 2.0;
    const auto out = evolution_block(prepare_initial(params), params);

    const double r = 1.0 / std::sqrt(2.0);
    const TwoQubitState target{{Complex{r, 0.0}, Complex{0.0, r}, 0.0, 0.0}};
    const double ov = std::abs(overlap(target, out));
    require(ov >= 1.0 - 1e-12, fmt("overlap with (|00>+i|01>)/sqrt(2) is %.15f", ov));

    const TransferResult exact = run_transfer(25, kExactShots, 0);
    require(std::abs(exact.fid - 1.0) <= 1e-9,
            fmt("exact tomography fidelity %.12f != 1", exact.fid));
    require(std::abs(exact.delta - 99.0 * kPi / 2.0) <= 1e-12, "delta must be 99*pi/2 at k=25");
}

// 4. Gate emulation equals the cavity dynamics up to a global phase.
void circuit_cavity_equivalence() {
    Xoshiro256ss rng(404);
    constexpr int kGrid = 20;
    constexpr int kStates = 10;
    std::vector<std::pair<double, double>> inputs;
    for (int s = 0; s < kStates; ++s) {
        inputs.emplace_back(rng.next_double() * kPi, rng.next_double() * 2.0 * kPi);
    }

    for (int i = 0; i < kGrid; ++i) {
        const double omega_over_j = 10.0 * i / (kGrid - 1);
        for (int j = 0; j < kGrid; ++j) {
            const double jt = kPi * j / (kGrid - 1);
            CircuitParams params = map_cavity_to_gates(omega_over_j, jt);
            for (const auto& [theta_p, eta] : inputs) {
                params.theta_p = theta_p;
                params.phi_p = eta;
                const auto circuit_out = evolution_block(prepare_initial(params), params);

                const OnePhotonState in{std::cos(theta_p / 2.0),
                                        std::exp(Complex{0.0, eta}) * std::sin(theta_p / 2.0),
                                        0.0};
                const auto cav = evolve(in, CavityParams{omega_over_j, omega_over_j, 1.0}, jt);
                const TwoQubitState cavity_out{{cav.amp_vac, cav.amp_c2, cav.amp_c1, 0.0}};

                const double ov = std::abs(overlap(circuit_out, cavity_out));
                require(ov >= 1.0 - 1e-10,
                        fmt("overlap %.15f at omega/J=%.3f", ov, omega_over_j));
            }
        }
    }
}

// 5. Concurrence curve against both the closed form and the Wootters oracle.
void concurrence_curve() {
    for (int i = 0; i <= 32; ++i) {
        const double theta = kPi * i / 32.0;
        const auto psi = family_state(theta);
        const auto probs = born_probabilities(psi);
        const double c = concurrence_from_probs(probs[kIdx10], probs[kIdx01]);
        require(std::abs(c - std::sin(theta)) <= 1e-12,
                fmt("concurrence %.15f != sin(theta) at theta=%.6f", c, theta));

        DensityMatrix rho = DensityMatrix::from_state(psi);
        const double w = concurrence_general(rho);
        require(std::abs(w - c) <= 1e-10,
                fmt("Wootters value %.15f disagrees at theta=%.6f", w, theta));
    }
    const auto peak = born_probabilities(family_state(kPi / 2.0));
    require(std::abs(concurrence_from_probs(peak[kIdx10], peak[kIdx01]) - 1.0) <= 1e-12,
            "maximum concurrence at theta = pi/2 must be 1");
}

// 6. CHSH curve, dual routes, violation window and the Tsirelson bound.
void chsh_curve() {
    const double tsirelson = 2.0 * std::sqrt(2.0);
    for (int i = 0; i <= 32; ++i) {
        const double theta = kPi * i / 32.0;
        const auto psi = family_state(theta);
        const double from_op = chsh_expectation(psi);
        require(std::abs(from_op - tsirelson * std::sin(theta)) <= 1e-10,
                fmt("<B> %.15f != 2*sqrt(2)*sin(theta) at theta=%.6f", from_op, theta));
        const auto probs = born_probabilities(psi);
        const double from_probs = chsh_from_probs(probs[kIdx10], probs[kIdx01]);
        require(std::abs(from_op - from_probs) <= 1e-10,
                fmt("operator and probability routes differ at theta=%.6f", theta));
    }
    require(std::abs(chsh_expectation(family_state(kPi / 2.0)) - tsirelson) <= 1e-10,
            "maximum <B> at theta = pi/2 must be 2*sqrt(2)");

    for (int i = 0; i <= 314; ++i) {
        const double theta = 0.01 * i;
        const bool violating = chsh_expectation(family_state(theta)) > 2.0;
        const bool inside = theta > kPi / 4.0 && theta < 3.0 * kPi / 4.0;
        require(violating == inside, fmt("violation window wrong at theta=%.2f", theta));
    }

    Xoshiro256ss rng(606);
    for (int rep = 0; rep < 10000; ++rep) {
        const double b = std::abs(chsh_expectation(random_state(rng)));
        require(b <= tsirelson + 1e-9, fmt("Tsirelson bound broken: %.12f", b));
    }
}

// 7. Statistical tomography keeps the fidelity high.
void tomography_statistics() {
    int good = 0;
    for (int s = 0; s < 100; ++s) {
        const TransferResult r = run_transfer(25, 8192, static_cast<std::uint64_t>(s) * 100);
        good += (r.fid >= 0.95) ? 1 : 0;
    }
    require(good >= 95, fmt("fidelity >= 0.95 in only %.0f of 100 runs", good));
}

// 8. CLI runs are reproducible byte for byte.
void cli_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cavsim_acceptance";
    fs::create_directories(dir);

    const auto run_twice = [&dir](const std::vector<std::string>& base, const char* stem) {
        for (const char* suffix : {"_a", "_b"}) {
            auto args = base;
            args.push_back("--out");
            args.push_back((dir / (stem + std::string(suffix))).string());
            require(run_cli(args) == 0, std::string("command failed: ") + stem);
        }
        require(slurp((dir / (stem + std::string("_a"))).string()) ==
                    slurp((dir / (stem + std::string("_b"))).string()),
                std::string(stem) + " outputs differ between identical runs");
    };

    run_twice({"--command", "sweep", "--shots", "8192", "--seed", "7"}, "sweep");
    run_twice({"--command", "transfer", "--shots", "8192", "--seed", "7"}, "transfer");
    run_twice({"--command", "chsh", "--shots", "4096", "--seed", "9"}, "chsh");
    run_twice({"--command", "concurrence", "--shots", "4096", "--seed", "9"}, "concurrence");
    run_twice({"--command", "equivalence", "--seed", "11"}, "equivalence");

    std::error_code ec;
    fs::remove_all(dir, ec);
}

}  // namespace

int main() {
    criterion(1, "ideal detection probabilities match the closed form", ideal_probabilities);
    criterion(2, "empirical probabilities converge with the shot count", shot_convergence);
    criterion(3, "perfect state transfer with exact tomography fidelity 1", perfect_transfer);
    criterion(4, "gate circuit reproduces the cavity dynamics on the parameter grid",
              circuit_cavity_equivalence);
    criterion(5, "concurrence follows sin(theta) and matches the Wootters oracle",
              concurrence_curve);
    criterion(6, "CHSH value follows 2*sqrt(2)*sin(theta) within the Tsirelson bound", chsh_curve);
    criterion(7, "8192-shot tomography reaches fidelity 0.95 in at least 95 of 100 runs",
              tomography_statistics);
    criterion(8, "identical CLI flags produce byte-identical outputs", cli_determinism);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
