#include "cavsim/cavity.hpp"

#include <cmath>
#include <stdexcept>

namespace cavsim {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_params(const CavityParams& p) {
    if (!(p.coupling_j > 0.0) || !std::isfinite(p.coupling_j)) {
        throw std::invalid_argument("CavityParams: coupling_j must be positive and finite");
    }
    if (!std::isfinite(p.omega1) || !std::isfinite(p.omega2)) {
        throw std::invalid_argument("CavityParams: frequencies must be finite");
    }
}

}  // namespace

double OnePhotonState::norm() const {
    return std::sqrt(std::norm(amp_vac) + std::norm(amp_c1) + std::norm(amp_c2));
}

ComplexMatrix hamiltonian(const CavityParams& p) {
    check_params(p);
    ComplexMatrix h(3);
    h(1, 1) = p.omega1;
    h(2, 2) = p.omega2;
    h(1, 2) = p.coupling_j;
    h(2, 1) = p.coupling_j;
    return h;
}

ComplexMatrix evolution_unitary_eig(const CavityParams& p, double t) {
    const EigResult eig = hermitian_eig(hamiltonian(p));
    const ComplexMatrix& v = eig.eigenvectors;
    ComplexMatrix u(3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Complex sum = 0.0;
            for (int k = 0; k < 3; ++k) {
                sum += v(r, k) * std::exp(-kI * eig.eigenvalues[k] * t) * std::conj(v(c, k));
            }
            u(r, c) = sum;
        }
    return u;
}

ComplexMatrix evolution_unitary(const CavityParams& p, double t) {
    check_params(p);
    if (!std::isfinite(t)) throw std::invalid_argument("evolution_unitary: t must be finite");
    if (std::abs(p.omega1 - p.omega2) >= 1e-12) return evolution_unitary_eig(p, t);

    const double omega = p.omega1;
    const Complex ph = std::exp(-kI * omega * t);
    const double c = std::cos(p.coupling_j * t);
    const double s = std::sin(p.coupling_j * t);
    ComplexMatrix u(3);
    u(0, 0) = 1.0;
    u(1, 1) = ph * c;
    u(1, 2) = -kI * ph * s;
    u(2, 1) = -kI * ph * s;
    u(2, 2) = ph * c;
    return u;
}

OnePhotonState evolve(const OnePhotonState& state, const CavityParams& p, double t) {
    if (std::abs(state.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("evolve: input state is not normalized");
    }
    const ComplexMatrix u = evolution_unitary(p, t);
    const Complex in[3] = {state.amp_vac, state.amp_c1, state.amp_c2};
    const auto out = matvec(u, in);
    return OnePhotonState{out[0], out[1], out[2]};
}

TransferCondition transfer_condition(int k) {
    if (k < 1) throw std::invalid_argument("transfer_condition: k must be >= 1");
    return TransferCondition{4.0 * k - 1.0, std::acos(-1.0) / 2.0};
}

double transfer_fidelity(const CavityParams& p, double t, const OnePhotonState& state) {
    const OnePhotonState evolved = evolve(state, p, t);
    // Target: amplitudes of the two cavities exchanged.
    const Complex overlap = std::conj(state.amp_vac) * evolved.amp_vac +
                            std::conj(state.amp_c2) * evolved.amp_c1 +
                            std::conj(state.amp_c1) * evolved.amp_c2;
    return std::norm(overlap);
}

}  // namespace cavsim
