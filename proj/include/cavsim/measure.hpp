#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "cavsim/circuit.hpp"

namespace cavsim {

enum class Basis { X, Y, Z };

/// Measurement basis per qubit.
struct BasisSetting {
    Basis basis_q1 = Basis::Z;  // first qubit
    Basis basis_q0 = Basis::Z;  // second qubit

    auto operator<=>(const BasisSetting&) const = default;
};

/// Outcome tallies over a fixed number of shots. Labels follow the basis
/// order |00>, |01>, |10>, |11> (first qubit listed first).
struct Counts {
    std::int64_t n00 = 0;
    std::int64_t n01 = 0;
    std::int64_t n10 = 0;
    std::int64_t n11 = 0;
    std::int64_t shots = 0;
};

/// Throws unless counts are non-negative and sum to shots >= 1.
void validate(const Counts& c);

/// xoshiro256** seeded through splitmix64. Pinned in-repo so identical seeds
/// reproduce identical counts on every platform.
class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::array<std::uint64_t, 4> state_{};
};

/// (|a00|^2, |a01|^2, |a10|^2, |a11|^2).
std::array<double, 4> born_probabilities(const TwoQubitState& state);

/// Rotates each qubit so a subsequent Z measurement reads the chosen basis:
/// X needs H, Y needs S-dagger then H, Z needs nothing.
TwoQubitState basis_change(const TwoQubitState& state, const BasisSetting& setting);

/// Multinomial draw by per-shot inverse CDF. Deterministic in (probs, shots,
/// seed). Probabilities may carry sampling jitter: entries >= -1e-9 are
/// clamped and the vector renormalized; worse input throws.
Counts sample_counts(const std::array<double, 4>& probs, std::int64_t shots, std::uint64_t seed);

std::array<double, 4> empirical_probs(const Counts& c);

}  // namespace cavsim
