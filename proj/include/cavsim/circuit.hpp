#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cavsim/linalg.hpp"

namespace cavsim {

/// Qubit label; the underlying value is the bit position in the amplitude
/// index, so |q1 q0> lives at index 2*q1 + q0 with q1 the first qubit.
enum class Qubit : int { second = 0, first = 1 };

/// Basis indices in the order |00>, |01>, |10>, |11>.
inline constexpr int kIdx00 = 0;
inline constexpr int kIdx01 = 1;
inline constexpr int kIdx10 = 2;
inline constexpr int kIdx11 = 3;

/// State vector of two qubits, unit norm.
class TwoQubitState {
  public:
    TwoQubitState() { amps_[kIdx00] = 1.0; }  // |00>

    /// Throws if the amplitudes are not normalized to 1e-10.
    explicit TwoQubitState(const std::array<Complex, 4>& amps);

    const std::array<Complex, 4>& amps() const { return amps_; }
    Complex amp(int index) const { return amps_[static_cast<size_t>(index)]; }

    double norm() const;

  private:
    friend TwoQubitState apply_gate(const TwoQubitState&, const struct GateSpec&);
    std::array<Complex, 4> amps_{};
};

/// <a|b>.
Complex overlap(const TwoQubitState& a, const TwoQubitState& b);

enum class GateKind { U3, X, H, SDG, CNOT, CU1, CU3 };

/// One gate instance. Use the factories; ops validate parameter counts and
/// qubit assignments and throw std::invalid_argument on misuse.
struct GateSpec {
    GateKind kind = GateKind::X;
    std::array<double, 3> params{};  // radians
    int n_params = 0;
    std::optional<Qubit> control;
    Qubit target = Qubit::first;

    static GateSpec u3(Qubit target, double theta, double phi, double lambda);
    static GateSpec x(Qubit target);
    static GateSpec h(Qubit target);
    static GateSpec sdg(Qubit target);
    static GateSpec cnot(Qubit control, Qubit target);
    static GateSpec cu1(Qubit control, Qubit target, double delta);
    static GateSpec cu3(Qubit control, Qubit target, double theta, double phi, double lambda);
};

/// Preparation U3 angles (primed) plus the evolution-block angles.
struct CircuitParams {
    double theta_p = 0.0;
    double phi_p = 0.0;
    double lambda_p = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;
    double delta = 0.0;
};

/// The gate's own matrix: 2x2 for single-qubit kinds, 4x4 with the body in the
/// lower-right block (control = 1) for controlled kinds.
ComplexMatrix gate_matrix(const GateSpec& g);

/// Applies g to the state; single-qubit gates act as identity on the other qubit.
TwoQubitState apply_gate(const TwoQubitState& state, const GateSpec& g);

/// U3(theta', phi', lambda') on the first qubit of |00>, giving
/// cos(theta'/2)|00> + e^{i phi'} sin(theta'/2)|10>.
TwoQubitState prepare_initial(const CircuitParams& params);

/// The gate sequence realizing the evolution block: an X-conjugated cU1 phases
/// |00> by e^{i delta}; a CNOT-conjugated cU3 rotates within {|10>, |01>}.
std::vector<GateSpec> evolution_gates(const CircuitParams& params);

/// Runs evolution_gates over the state. The input must live in the
/// single-excitation span {|00>, |01>, |10>}; |11> support above 1e-12 throws.
TwoQubitState evolution_block(const TwoQubitState& state, const CircuitParams& params);

/// Gate angles emulating the cavity evolution: delta = (omega/J)(Jt),
/// theta = 2 Jt, phi = -pi/2, lambda = pi/2. Preparation angles are left zero.
CircuitParams map_cavity_to_gates(double omega_over_j, double jt);

struct IdealProbs {
    double p00;
    double p10;
    double p01;
};

/// Closed-form detection probabilities (alpha^2, beta^2 cos^2(theta/2),
/// beta^2 sin^2(theta/2)). Requires alpha^2 + beta^2 == 1 to 1e-10.
IdealProbs analytic_probabilities(double alpha, double beta, double theta);

}  // namespace cavsim
