#pragma once

#include "cavsim/tomography.hpp"

namespace cavsim {

/// CHSH measurement operators: a1, a2 act on the first qubit, b1, b2 on the
/// second. All four are Hermitian with spectrum {-1, +1}.
struct ChshObservables {
    ComplexMatrix a1{2};
    ComplexMatrix a2{2};
    ComplexMatrix b1{2};
    ComplexMatrix b2{2};
};

/// 2 sqrt(p10 * p01), clamped to [0, 1]. Valid on the single-excitation pure
/// family where it coincides with the Wootters concurrence.
double concurrence_from_probs(double p10, double p01);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4) for an arbitrary two-qubit
/// density matrix; the independent oracle for the probability form.
double concurrence_general(const DensityMatrix& rho);

ChshObservables chsh_observables();

/// The assembled 4x4 Bell operator a1 x (b1 + b2) + a2 x (b1 - b2).
ComplexMatrix chsh_operator();

/// <psi| B_CHSH |psi>.
double chsh_expectation(const TwoQubitState& state);

/// 4 sqrt(2) sqrt(p10 * p01) -- the probability shortcut for the Bell value.
double chsh_from_probs(double p10, double p01);

}  // namespace cavsim
