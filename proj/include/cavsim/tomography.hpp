#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cavsim/circuit.hpp"
#include "cavsim/measure.hpp"

namespace cavsim {

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

ComplexMatrix pauli_matrix(Pauli p);

/// The 16 two-qubit Pauli expectation values T_jk = <sigma_j x sigma_k>,
/// indexed (j, k) over {I, X, Y, Z}^2 with T_II fixed at 1.
struct StokesVector {
    std::array<double, 16> t{};

    StokesVector() { t[0] = 1.0; }

    static int index(Pauli j, Pauli k) {
        return 4 * static_cast<int>(j) + static_cast<int>(k);
    }

    double& operator()(Pauli j, Pauli k) { return t[static_cast<size_t>(index(j, k))]; }
    double operator()(Pauli j, Pauli k) const { return t[static_cast<size_t>(index(j, k))]; }
};

/// 4x4 Hermitian unit-trace matrix.
struct DensityMatrix {
    ComplexMatrix mat{4};

    /// |psi><psi|.
    static DensityMatrix from_state(const TwoQubitState& psi);
};

/// The nine {X,Y,Z} x {X,Y,Z} settings, row-major in (basis_q1, basis_q0).
std::vector<BasisSetting> measurement_plan();

/// Stokes estimation from per-setting outcome probabilities. Two-qubit terms
/// come from the matching setting; single-qubit terms are averaged over the
/// three settings sharing that qubit's basis. Throws naming any missing setting.
StokesVector stokes_from_probs(const std::map<BasisSetting, std::array<double, 4>>& probs);

/// Same estimator fed with empirical frequencies from counts.
StokesVector stokes_from_counts(const std::map<BasisSetting, Counts>& counts);

/// T_jk directly from the state vector (the infinite-shot limit).
StokesVector stokes_exact(const TwoQubitState& state);

/// rho = (1/4) sum_jk T_jk sigma_j x sigma_k. Hermitian and unit trace by
/// construction; physicality is not enforced here.
DensityMatrix reconstruct_density(const StokesVector& s);

/// Clamps negative eigenvalues to zero and renormalizes the trace. Idempotent;
/// leaves physical matrices unchanged.
DensityMatrix project_physical(const DensityMatrix& rho);

/// Uhlmann fidelity Tr sqrt(sqrt(rho_t) rho sqrt(rho_t)). Both inputs must be
/// physical (run project_physical on reconstructed matrices first).
double fidelity(const DensityMatrix& rho_t, const DensityMatrix& rho);

/// {"dim":4,"re":[[...]],"im":[[...]]} with 17 significant digits.
std::string to_json(const DensityMatrix& rho);

/// Keyed 16-entry object, "II" through "ZZ".
std::string to_json(const StokesVector& s);

}  // namespace cavsim
