#include "cavsim/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cavsim {

namespace {

constexpr Complex kI{0.0, 1.0};

double checked_prob(double p, const char* name) {
    if (!std::isfinite(p) || p < -1e-9 || p > 1.0 + 1e-9) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

double concurrence_from_probs(double p10, double p01) {
    const double a = checked_prob(p10, "concurrence_from_probs: p10");
    const double b = checked_prob(p01, "concurrence_from_probs: p01");
    return std::clamp(2.0 * std::sqrt(a * b), 0.0, 1.0);
}

double concurrence_general(const DensityMatrix& rho) {
    if (hermiticity_deviation(rho.mat) > 1e-10 || std::abs(trace(rho.mat).real() - 1.0) > 1e-9) {
        throw std::invalid_argument("concurrence_general: input is not a density matrix");
    }
    const EigResult rho_eig = hermitian_eig(rho.mat);
    if (rho_eig.eigenvalues.front() < -1e-9) {
        throw std::invalid_argument("concurrence_general: input has a negative eigenvalue");
    }

    const ComplexMatrix yy = kron(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y));
    const ComplexMatrix flipped = matmul(yy, matmul(conjugate(rho.mat), yy));

    // lambda_i are the square roots of the eigenvalues of the Hermitian PSD
    // matrix sqrt(rho) * flipped * sqrt(rho), taken in descending order.
    const ComplexMatrix root = psd_sqrt(rho.mat);
    ComplexMatrix inner = matmul(root, matmul(flipped, root));
    for (int r = 0; r < 4; ++r)
        for (int c = r; c < 4; ++c) {
            const Complex z = 0.5 * (inner(r, c) + std::conj(inner(c, r)));
            inner(r, c) = z;
            inner(c, r) = std::conj(z);
        }

    std::vector<double> lambda = psd_sqrt_spectrum(inner);
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

ChshObservables chsh_observables() {
    const double r = 1.0 / std::sqrt(2.0);
    ChshObservables obs;
    obs.a1 = ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    // Pauli Y: the sign that makes the assembled Bell operator reach the
    // Tsirelson bound on the single-excitation family.
    obs.a2 = ComplexMatrix{{0.0, -kI}, {kI, 0.0}};
    obs.b1 = ComplexMatrix{{0.0, r * (1.0 - kI)}, {r * (1.0 + kI), 0.0}};
    obs.b2 = ComplexMatrix{{0.0, r * (1.0 + kI)}, {r * (1.0 - kI), 0.0}};
    return obs;
}

ComplexMatrix chsh_operator() {
    const ChshObservables obs = chsh_observables();
    return kron(obs.a1, obs.b1 + obs.b2) + kron(obs.a2, obs.b1 - obs.b2);
}

double chsh_expectation(const TwoQubitState& state) {
    const ComplexMatrix op = chsh_operator();
    const auto opv = matvec(op, state.amps());
    Complex expect = 0.0;
    for (int i = 0; i < 4; ++i) expect += std::conj(state.amp(i)) * opv[static_cast<size_t>(i)];
    return expect.real();
}

double chsh_from_probs(double p10, double p01) {
    const double a = checked_prob(p10, "chsh_from_probs: p10");
    const double b = checked_prob(p01, "chsh_from_probs: p01");
    return 4.0 * std::sqrt(2.0) * std::sqrt(a * b);
}

}  // namespace cavsim
