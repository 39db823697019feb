#pragma once

#include "cavsim/linalg.hpp"

namespace cavsim {

/// Coupled-cavity parameters. Frequencies are in units of the coupling, so the
/// natural CLI-facing knobs are the ratios omega/J and the product J*t.
struct CavityParams {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double coupling_j = 1.0;  // must be > 0
};

/// Single-excitation state over the basis {|00>, |10>, |01>}:
/// vacuum, photon in cavity 1, photon in cavity 2.
struct OnePhotonState {
    Complex amp_vac = 1.0;
    Complex amp_c1 = 0.0;
    Complex amp_c2 = 0.0;

    double norm() const;
};

struct TransferCondition {
    double omega_over_j;
    double jt;
};

/// 3x3 single-excitation Hamiltonian: diag(0, omega1, omega2) with J coupling
/// the two one-photon levels.
ComplexMatrix hamiltonian(const CavityParams& p);

/// exp(-iHt). Closed form when omega1 == omega2 (to 1e-12), else via the
/// eigendecomposition path.
ComplexMatrix evolution_unitary(const CavityParams& p, double t);

/// Eigendecomposition route V exp(-i diag(w) t) V^dagger, valid for any params.
/// Exposed so the closed form can be cross-checked against it.
ComplexMatrix evolution_unitary_eig(const CavityParams& p, double t);

/// U(t) applied to a normalized state. Throws on unnormalized input.
OnePhotonState evolve(const OnePhotonState& state, const CavityParams& p, double t);

/// Parameters realizing perfect transfer: omega/J = 4k-1 at Jt = pi/2. k >= 1.
TransferCondition transfer_condition(int k);

/// |<target|U(t)|in>|^2 where the target carries the cavity-1 amplitude on
/// cavity 2 and vice versa (the transferred state).
double transfer_fidelity(const CavityParams& p, double t, const OnePhotonState& state);

}  // namespace cavsim
