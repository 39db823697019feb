#include "cavsim/experiments.hpp"

#include <cmath>
#include <cstdio>

#include "cavsim/cavity.hpp"

namespace cavsim {

namespace {

const double kPi = std::acos(-1.0);

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt(std::int64_t x) { return std::to_string(x); }

/// Probability-sweep configuration: equal superposition in, delta slaved to theta.
CircuitParams sweep_params(double theta) {
    CircuitParams p;
    p.theta_p = kPi / 2.0;
    p.theta = theta;
    p.phi = -kPi / 2.0;
    p.lambda = kPi / 2.0;
    p.delta = theta;
    return p;
}

/// Entanglement-family configuration: |10> in, phi = -pi, lambda = pi.
CircuitParams entangle_params(double theta) {
    CircuitParams p;
    p.theta_p = kPi;
    p.theta = theta;
    p.phi = -kPi;
    p.lambda = kPi;
    return p;
}

std::array<double, 4> outcome_probs(const TwoQubitState& state, std::int64_t shots,
                                    std::uint64_t seed) {
    const auto exact = born_probabilities(state);
    if (shots == kExactShots) return exact;
    return empirical_probs(sample_counts(exact, shots, seed));
}

TwoQubitState transfer_target_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return TwoQubitState{{Complex{r, 0.0}, Complex{0.0, r}, 0.0, 0.0}};
}

TwoQubitState one_photon_to_two_qubit(const OnePhotonState& s) {
    return TwoQubitState{{s.amp_vac, s.amp_c2, s.amp_c1, 0.0}};
}

}  // namespace

std::vector<SweepRow> run_sweep(const std::vector<double>& thetas, std::int64_t shots,
                                std::uint64_t seed) {
    std::vector<SweepRow> rows;
    rows.reserve(thetas.size());
    for (size_t i = 0; i < thetas.size(); ++i) {
        const double theta = thetas[i];
        const CircuitParams params = sweep_params(theta);
        const TwoQubitState out = evolution_block(prepare_initial(params), params);
        const auto emp = outcome_probs(out, shots, seed + i);
        const double r = 1.0 / std::sqrt(2.0);
        const IdealProbs ideal = analytic_probabilities(r, r, theta);
        rows.push_back(SweepRow{theta, shots, emp[kIdx00], emp[kIdx10], emp[kIdx01], ideal.p00,
                                ideal.p10, ideal.p01});
    }
    return rows;
}

std::vector<CurveRow> run_concurrence(const std::vector<double>& thetas, std::int64_t shots,
                                      std::uint64_t seed) {
    std::vector<CurveRow> rows;
    rows.reserve(thetas.size());
    for (size_t i = 0; i < thetas.size(); ++i) {
        const double theta = thetas[i];
        const CircuitParams params = entangle_params(theta);
        const TwoQubitState out = evolution_block(prepare_initial(params), params);
        const auto p = outcome_probs(out, shots, seed + i);
        rows.push_back(
            CurveRow{theta, concurrence_from_probs(p[kIdx10], p[kIdx01]), std::sin(theta)});
    }
    return rows;
}

std::vector<CurveRow> run_chsh(const std::vector<double>& thetas, std::int64_t shots,
                               std::uint64_t seed) {
    std::vector<CurveRow> rows;
    rows.reserve(thetas.size());
    for (size_t i = 0; i < thetas.size(); ++i) {
        const double theta = thetas[i];
        const CircuitParams params = entangle_params(theta);
        const TwoQubitState out = evolution_block(prepare_initial(params), params);
        const auto p = outcome_probs(out, shots, seed + i);
        rows.push_back(CurveRow{theta, chsh_from_probs(p[kIdx10], p[kIdx01]),
                                2.0 * std::sqrt(2.0) * std::sin(theta)});
    }
    return rows;
}

std::map<BasisSetting, Counts> measure_all_settings(const TwoQubitState& psi, std::int64_t shots,
                                                    std::uint64_t base_seed) {
    std::map<BasisSetting, Counts> counts;
    const auto plan = measurement_plan();
    for (size_t i = 0; i < plan.size(); ++i) {
        const auto probs = born_probabilities(basis_change(psi, plan[i]));
        counts[plan[i]] = sample_counts(probs, shots, base_seed + i);
    }
    return counts;
}

std::map<BasisSetting, std::array<double, 4>> exact_setting_probs(const TwoQubitState& psi) {
    std::map<BasisSetting, std::array<double, 4>> probs;
    for (const BasisSetting& setting : measurement_plan()) {
        probs[setting] = born_probabilities(basis_change(psi, setting));
    }
    return probs;
}

TransferResult run_transfer(int k, std::int64_t shots, std::uint64_t seed) {
    const TransferCondition cond = transfer_condition(k);

    CircuitParams params;
    params.theta_p = kPi / 2.0;
    params.phi_p = kPi / 2.0;
    params.theta = kPi;
    params.phi = -kPi / 2.0;
    params.lambda = kPi / 2.0;
    params.delta = cond.omega_over_j * cond.jt;

    const TwoQubitState out = evolution_block(prepare_initial(params), params);

    const StokesVector stokes = (shots == kExactShots)
                                    ? stokes_from_probs(exact_setting_probs(out))
                                    : stokes_from_counts(measure_all_settings(out, shots, seed));
    const DensityMatrix rho_raw = reconstruct_density(stokes);
    const DensityMatrix rho = project_physical(rho_raw);

    const TwoQubitState target = transfer_target_state();
    const DensityMatrix rho_target = DensityMatrix::from_state(target);

    // Pre-projection diagnostic: for a pure target the Uhlmann fidelity
    // reduces to sqrt(<psi_T|rho|psi_T>), which stays defined for the raw
    // (possibly slightly unphysical) reconstruction.
    const auto rho_raw_target = matvec(rho_raw.mat, target.amps());
    Complex expect = 0.0;
    for (int i = 0; i < 4; ++i) expect += std::conj(target.amp(i)) * rho_raw_target[static_cast<size_t>(i)];
    const double fid_raw = std::sqrt(std::max(expect.real(), 0.0));

    return TransferResult{k,   params.delta,            shots,
                          seed, rho_target,             rho,
                          fidelity(rho_target, rho),    fid_raw};
}

std::vector<EquivalenceRow> run_equivalence(std::uint64_t seed) {
    constexpr int kGrid = 20;
    constexpr int kStates = 10;

    Xoshiro256ss rng(seed);
    std::vector<std::pair<double, double>> initial;  // (theta', eta)
    initial.reserve(kStates);
    for (int s = 0; s < kStates; ++s) {
        initial.emplace_back(rng.next_double() * kPi, rng.next_double() * 2.0 * kPi);
    }

    std::vector<EquivalenceRow> rows;
    rows.reserve(kGrid * kGrid);
    for (int i = 0; i < kGrid; ++i) {
        const double omega_over_j = 10.0 * i / (kGrid - 1);
        for (int j = 0; j < kGrid; ++j) {
            const double jt = kPi * j / (kGrid - 1);

            CircuitParams params = map_cavity_to_gates(omega_over_j, jt);
            const CavityParams cavity{omega_over_j, omega_over_j, 1.0};

            double min_overlap = 1.0;
            for (const auto& [theta_p, eta] : initial) {
                params.theta_p = theta_p;
                params.phi_p = eta;
                const TwoQubitState circuit_out =
                    evolution_block(prepare_initial(params), params);

                const OnePhotonState in{std::cos(theta_p / 2.0),
                                        std::exp(Complex{0.0, eta}) * std::sin(theta_p / 2.0),
                                        0.0};
                const TwoQubitState cavity_out = one_photon_to_two_qubit(evolve(in, cavity, jt));

                min_overlap = std::min(min_overlap, std::abs(overlap(circuit_out, cavity_out)));
            }
            rows.push_back(
                EquivalenceRow{omega_over_j, jt, min_overlap, min_overlap >= 1.0 - 1e-10});
        }
    }
    return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "theta,shots,p00_emp,p10_emp,p01_emp,p00_ideal,p10_ideal,p01_ideal\n";
    for (const SweepRow& r : rows) {
        out += fmt(r.theta) + "," + fmt(r.shots) + "," + fmt(r.p00_emp) + "," + fmt(r.p10_emp) +
               "," + fmt(r.p01_emp) + "," + fmt(r.p00_ideal) + "," + fmt(r.p10_ideal) + "," +
               fmt(r.p01_ideal) + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<CurveRow>& rows, const std::string& value_name,
                   bool with_chsh_bounds) {
    std::string out = "theta," + value_name + "_emp," + value_name + "_ideal";
    if (with_chsh_bounds) out += ",bound_classical,bound_tsirelson";
    out += "\n";
    const std::string bounds = "," + fmt(2.0) + "," + fmt(2.0 * std::sqrt(2.0));
    for (const CurveRow& r : rows) {
        out += fmt(r.theta) + "," + fmt(r.value_emp) + "," + fmt(r.value_ideal);
        if (with_chsh_bounds) out += bounds;
        out += "\n";
    }
    return out;
}

std::string to_csv(const std::vector<EquivalenceRow>& rows) {
    std::string out = "omega_over_j,jt,min_overlap,pass\n";
    for (const EquivalenceRow& r : rows) {
        out += fmt(r.omega_over_j) + "," + fmt(r.jt) + "," + fmt(r.min_overlap) + "," +
               (r.pass ? "1" : "0") + "\n";
    }
    return out;
}

std::string to_json(const std::vector<SweepRow>& rows) {
    std::string out = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        if (i) out += ",";
        out += "{\"theta\":" + fmt(r.theta) + ",\"shots\":" + fmt(r.shots) +
               ",\"p00_emp\":" + fmt(r.p00_emp) + ",\"p10_emp\":" + fmt(r.p10_emp) +
               ",\"p01_emp\":" + fmt(r.p01_emp) + ",\"p00_ideal\":" + fmt(r.p00_ideal) +
               ",\"p10_ideal\":" + fmt(r.p10_ideal) + ",\"p01_ideal\":" + fmt(r.p01_ideal) + "}";
    }
    return out + "]\n";
}

std::string to_json(const std::vector<CurveRow>& rows, const std::string& value_name,
                    bool with_chsh_bounds) {
    std::string out = "[";
    const std::string bounds = ",\"bound_classical\":" + fmt(2.0) +
                               ",\"bound_tsirelson\":" + fmt(2.0 * std::sqrt(2.0));
    for (size_t i = 0; i < rows.size(); ++i) {
        const CurveRow& r = rows[i];
        if (i) out += ",";
        out += "{\"theta\":" + fmt(r.theta) + ",\"" + value_name + "_emp\":" + fmt(r.value_emp) +
               ",\"" + value_name + "_ideal\":" + fmt(r.value_ideal);
        if (with_chsh_bounds) out += bounds;
        out += "}";
    }
    return out + "]\n";
}

std::string to_json(const std::vector<EquivalenceRow>& rows) {
    std::string out = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const EquivalenceRow& r = rows[i];
        if (i) out += ",";
        out += "{\"omega_over_j\":" + fmt(r.omega_over_j) + ",\"jt\":" + fmt(r.jt) +
               ",\"min_overlap\":" + fmt(r.min_overlap) +
               ",\"pass\":" + (r.pass ? std::string("true") : std::string("false")) + "}";
    }
    return out + "]\n";
}

std::string to_json(const TransferResult& result) {
    return "{\"command\":\"transfer\",\"k\":" + std::to_string(result.k) +
           ",\"delta\":" + fmt(result.delta) + ",\"shots\":" + fmt(result.shots) +
           ",\"seed\":" + std::to_string(result.seed) + ",\"fidelity\":" + fmt(result.fid) +
           ",\"fidelity_raw\":" + fmt(result.fid_raw) +
           ",\"rho_target\":" + to_json(result.rho_target) + ",\"rho\":" + to_json(result.rho) +
           "}\n";
}

}  // namespace cavsim
