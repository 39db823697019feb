#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cavsim/entangle.hpp"
#include "cavsim/tomography.hpp"

namespace cavsim {

/// shots == 0 means the infinite-shot limit: exact probabilities bypass the
/// sampler and the empirical columns equal the ideal ones.
inline constexpr std::int64_t kExactShots = 0;

struct SweepRow {
    double theta;
    std::int64_t shots;
    double p00_emp, p10_emp, p01_emp;
    double p00_ideal, p10_ideal, p01_ideal;
};

/// Detection probabilities versus theta for the equal-superposition input
/// (theta' = pi/2) with delta = theta. Point i samples with seed + i.
std::vector<SweepRow> run_sweep(const std::vector<double>& thetas, std::int64_t shots,
                                std::uint64_t seed);

struct CurveRow {
    double theta;
    double value_emp;
    double value_ideal;
};

/// Concurrence versus theta for the |10> input with phi = -pi, lambda = pi.
std::vector<CurveRow> run_concurrence(const std::vector<double>& thetas, std::int64_t shots,
                                      std::uint64_t seed);

/// Bell value versus theta on the same family.
std::vector<CurveRow> run_chsh(const std::vector<double>& thetas, std::int64_t shots,
                               std::uint64_t seed);

struct TransferResult {
    int k;
    double delta;
    std::int64_t shots;
    std::uint64_t seed;
    DensityMatrix rho_target;
    DensityMatrix rho;        // reconstructed, projected physical
    double fid;               // Uhlmann fidelity against rho_target
    double fid_raw;           // pre-projection overlap sqrt(<psi_T|rho_raw|psi_T>)
};

/// Full state-transfer experiment: prepare (|0> + i|1>)/sqrt(2) on the first
/// qubit, run the transfer gates at the k-th condition, tomograph the output
/// over the nine settings (setting i samples with seed + i) and reconstruct.
TransferResult run_transfer(int k, std::int64_t shots, std::uint64_t seed);

struct EquivalenceRow {
    double omega_over_j;
    double jt;
    double min_overlap;  // over the random initial states
    bool pass;           // min_overlap >= 1 - 1e-10
};

/// Gate emulation versus exact cavity dynamics on a 20x20 grid over
/// omega/J in [0, 10], Jt in [0, pi], for 10 seed-derived initial states.
std::vector<EquivalenceRow> run_equivalence(std::uint64_t seed);

/// Measures the state in all nine tomography settings. Setting i (plan order)
/// samples with base_seed + i.
std::map<BasisSetting, Counts> measure_all_settings(const TwoQubitState& psi, std::int64_t shots,
                                                    std::uint64_t base_seed);

/// Exact per-setting outcome probabilities (the shots -> infinity limit).
std::map<BasisSetting, std::array<double, 4>> exact_setting_probs(const TwoQubitState& psi);

/// CSV with a header row; floats carry 17 significant digits.
std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_csv(const std::vector<CurveRow>& rows, const std::string& value_name,
                   bool with_chsh_bounds);
std::string to_csv(const std::vector<EquivalenceRow>& rows);

/// Same tables as JSON arrays of row objects.
std::string to_json(const std::vector<SweepRow>& rows);
std::string to_json(const std::vector<CurveRow>& rows, const std::string& value_name,
                    bool with_chsh_bounds);
std::string to_json(const std::vector<EquivalenceRow>& rows);

std::string to_json(const TransferResult& result);

}  // namespace cavsim
