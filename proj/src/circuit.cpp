#include "cavsim/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace cavsim {

namespace {

constexpr Complex kI{0.0, 1.0};

int expected_params(GateKind kind) {
    switch (kind) {
        case GateKind::U3:
        case GateKind::CU3:
            return 3;
        case GateKind::CU1:
            return 1;
        default:
            return 0;
    }
}

bool is_controlled(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CU1 || kind == GateKind::CU3;
}

void validate(const GateSpec& g) {
    if (g.n_params != expected_params(g.kind)) {
        throw std::invalid_argument("GateSpec: wrong parameter count for gate");
    }
    for (int i = 0; i < g.n_params; ++i) {
        if (!std::isfinite(g.params[static_cast<size_t>(i)])) {
            throw std::invalid_argument("GateSpec: non-finite gate angle");
        }
    }
    const auto valid_qubit = [](Qubit q) {
        return q == Qubit::first || q == Qubit::second;
    };
    if (!valid_qubit(g.target)) throw std::invalid_argument("GateSpec: bad target qubit id");
    if (is_controlled(g.kind)) {
        if (!g.control) throw std::invalid_argument("GateSpec: controlled gate needs a control");
        if (!valid_qubit(*g.control)) throw std::invalid_argument("GateSpec: bad control qubit id");
        if (*g.control == g.target) {
            throw std::invalid_argument("GateSpec: control and target must differ");
        }
    } else if (g.control) {
        throw std::invalid_argument("GateSpec: single-qubit gate cannot have a control");
    }
}

ComplexMatrix u3_body(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return ComplexMatrix{{c, -std::exp(kI * lambda) * s},
                         {std::exp(kI * phi) * s, std::exp(kI * (phi + lambda)) * c}};
}

/// 2x2 action of the gate on its target (conditioned on control = 1 if any).
ComplexMatrix gate_body(const GateSpec& g) {
    switch (g.kind) {
        case GateKind::U3:
        case GateKind::CU3:
            return u3_body(g.params[0], g.params[1], g.params[2]);
        case GateKind::X:
        case GateKind::CNOT:
            return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            return ComplexMatrix{{r, r}, {r, -r}};
        }
        case GateKind::SDG:
            return ComplexMatrix{{1.0, 0.0}, {0.0, -kI}};
        case GateKind::CU1:
            return ComplexMatrix{{1.0, 0.0}, {0.0, std::exp(kI * g.params[0])}};
    }
    throw std::invalid_argument("GateSpec: unknown gate kind");
}

}  // namespace

TwoQubitState::TwoQubitState(const std::array<Complex, 4>& amps) : amps_(amps) {
    if (std::abs(norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("TwoQubitState: amplitudes are not normalized");
    }
}

double TwoQubitState::norm() const {
    double n = 0.0;
    for (const Complex& a : amps_) n += std::norm(a);
    return std::sqrt(n);
}

Complex overlap(const TwoQubitState& a, const TwoQubitState& b) {
    Complex sum = 0.0;
    for (int i = 0; i < 4; ++i) sum += std::conj(a.amp(i)) * b.amp(i);
    return sum;
}

GateSpec GateSpec::u3(Qubit target, double theta, double phi, double lambda) {
    return GateSpec{GateKind::U3, {theta, phi, lambda}, 3, std::nullopt, target};
}

GateSpec GateSpec::x(Qubit target) {
    return GateSpec{GateKind::X, {}, 0, std::nullopt, target};
}

GateSpec GateSpec::h(Qubit target) {
    return GateSpec{GateKind::H, {}, 0, std::nullopt, target};
}

GateSpec GateSpec::sdg(Qubit target) {
    return GateSpec{GateKind::SDG, {}, 0, std::nullopt, target};
}

GateSpec GateSpec::cnot(Qubit control, Qubit target) {
    return GateSpec{GateKind::CNOT, {}, 0, control, target};
}

GateSpec GateSpec::cu1(Qubit control, Qubit target, double delta) {
    return GateSpec{GateKind::CU1, {delta, 0.0, 0.0}, 1, control, target};
}

GateSpec GateSpec::cu3(Qubit control, Qubit target, double theta, double phi, double lambda) {
    return GateSpec{GateKind::CU3, {theta, phi, lambda}, 3, control, target};
}

ComplexMatrix gate_matrix(const GateSpec& g) {
    validate(g);
    const ComplexMatrix body = gate_body(g);
    if (!is_controlled(g.kind)) return body;

    ComplexMatrix m = ComplexMatrix::identity(4);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(2 + r, 2 + c) = body(r, c);
    return m;
}

TwoQubitState apply_gate(const TwoQubitState& state, const GateSpec& g) {
    validate(g);
    const ComplexMatrix body = gate_body(g);
    const int target_bit = 1 << static_cast<int>(g.target);
    const int control_bit = g.control ? (1 << static_cast<int>(*g.control)) : 0;

    TwoQubitState out = state;
    for (int base = 0; base < 4; ++base) {
        if (base & target_bit) continue;
        if (control_bit && !(base & control_bit)) continue;
        const int i0 = base;
        const int i1 = base | target_bit;
        const Complex a0 = state.amps_[static_cast<size_t>(i0)];
        const Complex a1 = state.amps_[static_cast<size_t>(i1)];
        out.amps_[static_cast<size_t>(i0)] = body(0, 0) * a0 + body(0, 1) * a1;
        out.amps_[static_cast<size_t>(i1)] = body(1, 0) * a0 + body(1, 1) * a1;
    }
    return out;
}

TwoQubitState prepare_initial(const CircuitParams& params) {
    return apply_gate(TwoQubitState{},
                      GateSpec::u3(Qubit::first, params.theta_p, params.phi_p, params.lambda_p));
}

std::vector<GateSpec> evolution_gates(const CircuitParams& params) {
    return {
        GateSpec::x(Qubit::first),
        GateSpec::x(Qubit::second),
        GateSpec::cu1(Qubit::first, Qubit::second, params.delta),
        GateSpec::x(Qubit::first),
        GateSpec::x(Qubit::second),
        GateSpec::cnot(Qubit::first, Qubit::second),
        GateSpec::cu3(Qubit::second, Qubit::first, params.theta, params.phi, params.lambda),
        GateSpec::cnot(Qubit::first, Qubit::second),
    };
}

TwoQubitState evolution_block(const TwoQubitState& state, const CircuitParams& params) {
    if (std::abs(state.amp(kIdx11)) > 1e-12) {
        throw std::invalid_argument(
            "evolution_block: |11> support exceeds the single-excitation tolerance");
    }
    TwoQubitState out = state;
    for (const GateSpec& g : evolution_gates(params)) out = apply_gate(out, g);
    return out;
}

CircuitParams map_cavity_to_gates(double omega_over_j, double jt) {
    const double pi = std::acos(-1.0);
    CircuitParams p;
    p.delta = omega_over_j * jt;
    p.theta = 2.0 * jt;
    p.phi = -pi / 2.0;
    p.lambda = pi / 2.0;
    return p;
}

IdealProbs analytic_probabilities(double alpha, double beta, double theta) {
    if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-10) {
        throw std::invalid_argument("analytic_probabilities: alpha^2 + beta^2 must be 1");
    }
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return IdealProbs{alpha * alpha, beta * beta * c * c, beta * beta * s * s};
}

}  // namespace cavsim
