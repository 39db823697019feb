#include "cavsim/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace cavsim {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

void validate(const Counts& c) {
    if (c.shots < 1) throw std::invalid_argument("Counts: shots must be >= 1");
    if (c.n00 < 0 || c.n01 < 0 || c.n10 < 0 || c.n11 < 0) {
        throw std::invalid_argument("Counts: negative tally");
    }
    if (c.n00 + c.n01 + c.n10 + c.n11 != c.shots) {
        throw std::invalid_argument("Counts: tallies do not sum to shots");
    }
}

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
    for (auto& word : state_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256ss::next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::array<double, 4> born_probabilities(const TwoQubitState& state) {
    std::array<double, 4> p{};
    for (int i = 0; i < 4; ++i) p[static_cast<size_t>(i)] = std::norm(state.amp(i));
    return p;
}

TwoQubitState basis_change(const TwoQubitState& state, const BasisSetting& setting) {
    TwoQubitState out = state;
    const auto rotate = [&out](Qubit q, Basis b) {
        if (b == Basis::Y) out = apply_gate(out, GateSpec::sdg(q));
        if (b != Basis::Z) out = apply_gate(out, GateSpec::h(q));
    };
    rotate(Qubit::first, setting.basis_q1);
    rotate(Qubit::second, setting.basis_q0);
    return out;
}

Counts sample_counts(const std::array<double, 4>& probs, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");

    std::array<double, 4> p = probs;
    double sum = 0.0;
    for (double& x : p) {
        if (!std::isfinite(x) || x < -1e-9) {
            throw std::invalid_argument("sample_counts: invalid probability vector");
        }
        x = std::max(x, 0.0);
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("sample_counts: probabilities do not sum to 1");
    }
    for (double& x : p) x /= sum;

    Xoshiro256ss rng(seed);
    std::array<std::int64_t, 4> tally{};
    for (std::int64_t shot = 0; shot < shots; ++shot) {
        const double u = rng.next_double();
        double cum = 0.0;
        int outcome = 3;  // guard against cum falling short of 1 by roundoff
        for (int i = 0; i < 4; ++i) {
            cum += p[static_cast<size_t>(i)];
            if (u < cum) {
                outcome = i;
                break;
            }
        }
        ++tally[static_cast<size_t>(outcome)];
    }
    return Counts{tally[0], tally[1], tally[2], tally[3], shots};
}

std::array<double, 4> empirical_probs(const Counts& c) {
    validate(c);
    const double n = static_cast<double>(c.shots);
    return {static_cast<double>(c.n00) / n, static_cast<double>(c.n01) / n,
            static_cast<double>(c.n10) / n, static_cast<double>(c.n11) / n};
}

}  // namespace cavsim
