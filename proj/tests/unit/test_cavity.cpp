#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cavsim/cavity.hpp"
#include "test_util.hpp"

using namespace cavsim;
using test_util::Rand;

namespace {

const double kPi = std::acos(-1.0);
const Complex kI{0.0, 1.0};

// Truncated series for exp(-iHt), independent of the eigendecomposition path.
ComplexMatrix expm_taylor(const ComplexMatrix& h, double t, int terms = 40) {
    const ComplexMatrix a = (-kI * t) * h;
    ComplexMatrix term = ComplexMatrix::identity(h.dim());
    ComplexMatrix sum = term;
    for (int n = 1; n <= terms; ++n) {
        term = (1.0 / n) * matmul(term, a);
        sum = sum + term;
    }
    return sum;
}

OnePhotonState random_one_photon(Rand& rand) {
    OnePhotonState s{rand.complex_normal(), rand.complex_normal(), rand.complex_normal()};
    const double n = s.norm();
    s.amp_vac /= n;
    s.amp_c1 /= n;
    s.amp_c2 /= n;
    return s;
}

}  // namespace

TEST_SUITE("cavity") {

TEST_CASE("hamiltonian lays out the one-photon matrix") {
    const auto h = hamiltonian(CavityParams{2.5, 2.5, 0.8});
    const ComplexMatrix expected{
        {0.0, 0.0, 0.0}, {0.0, 2.5, 0.8}, {0.0, 0.8, 2.5}};
    CHECK(max_abs_diff(h, expected) == 0.0);
}

TEST_CASE("hamiltonian at zero detuning is the bare coupling block") {
    const auto h = hamiltonian(CavityParams{0.0, 0.0, 1.0});
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const double expected = ((r == 1 && c == 2) || (r == 2 && c == 1)) ? 1.0 : 0.0;
            CHECK(h(r, c) == Complex{expected, 0.0});
        }
}

TEST_CASE("detuned hamiltonian has the two-level-block spectrum") {
    // Oracle: {0, (w1+w2)/2 +- sqrt(((w1-w2)/2)^2 + J^2)}.
    const CavityParams p{1.0, 2.0, 0.5};
    const auto eig = hermitian_eig(hamiltonian(p));
    const double mean = (p.omega1 + p.omega2) / 2.0;
    const double split = std::sqrt(0.25 + 0.25);
    CHECK(eig.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(mean - split).epsilon(1e-12));
    CHECK(eig.eigenvalues[2] == doctest::Approx(mean + split).epsilon(1e-12));
}

TEST_CASE("evolution_unitary at t = 0 is the identity") {
    const auto u = evolution_unitary(CavityParams{3.0, 3.0, 1.0}, 0.0);
    CHECK(max_abs_diff(u, ComplexMatrix::identity(3)) <= 1e-15);
}

TEST_CASE("evolution_unitary at the transfer point moves the full amplitude across") {
    const auto u = evolution_unitary(CavityParams{99.0, 99.0, 1.0}, kPi / 2.0);
    CHECK(std::abs(u(0, 1)) <= 1e-12);
    CHECK(std::abs(u(1, 1)) <= 1e-12);
    const Complex expected = -kI * std::exp(-kI * (99.0 * kPi / 2.0));
    CHECK(std::abs(u(2, 1) - expected) <= 1e-12);
}

TEST_CASE("evolution_unitary matches the Taylor-series oracle") {
    const CavityParams p{2.0, 2.0, 0.7};
    const auto u = evolution_unitary(p, 1.3);
    CHECK(max_abs_diff(u, expm_taylor(hamiltonian(p), 1.3)) <= 1e-10);

    const CavityParams detuned{2.0, 0.9, 0.7};
    const auto ud = evolution_unitary(detuned, 1.3);
    CHECK(max_abs_diff(ud, expm_taylor(hamiltonian(detuned), 1.3)) <= 1e-10);
}

TEST_CASE("evolution_unitary stays unitary over random parameters") {
    Rand rand(21);
    for (int rep = 0; rep < 20; ++rep) {
        const CavityParams p{rand.uniform(0.0, 10.0), rand.uniform(0.0, 10.0),
                             rand.uniform(0.1, 3.0)};
        CHECK(is_unitary(evolution_unitary(p, rand.uniform(-5.0, 5.0)), 1e-12));
    }
}

TEST_CASE("closed-form and eigendecomposition unitaries agree at equal frequency") {
    Rand rand(22);
    for (int rep = 0; rep < 10; ++rep) {
        const double omega = rand.uniform(0.0, 10.0);
        const CavityParams p{omega, omega, rand.uniform(0.1, 3.0)};
        const double t = rand.uniform(0.0, 5.0);
        CHECK(max_abs_diff(evolution_unitary(p, t), evolution_unitary_eig(p, t)) <= 1e-10);
    }
}

TEST_CASE("vacuum is stationary under evolve") {
    const OnePhotonState vac{1.0, 0.0, 0.0};
    for (double t : {0.0, 0.3, 1.7, 12.0}) {
        const auto out = evolve(vac, CavityParams{4.0, 4.0, 1.0}, t);
        CHECK(std::abs(out.amp_vac - Complex{1.0, 0.0}) <= 1e-12);
        CHECK(std::abs(out.amp_c1) <= 1e-12);
        CHECK(std::abs(out.amp_c2) <= 1e-12);
    }
}

TEST_CASE("evolve reproduces the closed-form evolved state") {
    // Equal superposition at the k = 25 transfer point.
    const double r = 1.0 / std::sqrt(2.0);
    const OnePhotonState in{r, r, 0.0};
    const auto out = evolve(in, CavityParams{99.0, 99.0, 1.0}, kPi / 2.0);
    CHECK(std::abs(out.amp_vac - Complex{r, 0.0}) <= 1e-12);
    CHECK(std::abs(out.amp_c1) <= 1e-12);
    const Complex expected_c2 = r * std::exp(-kI * (99.0 * kPi / 2.0)) * (-kI);
    CHECK(std::abs(out.amp_c2 - expected_c2) <= 1e-12);

    // Photon in cavity 1, zero frequency, quarter hop.
    const auto quarter = evolve(OnePhotonState{0.0, 1.0, 0.0}, CavityParams{0.0, 0.0, 1.0},
                                kPi / 4.0);
    CHECK(std::abs(quarter.amp_c1 - Complex{r, 0.0}) <= 1e-12);
    CHECK(std::abs(quarter.amp_c2 - (-kI * r)) <= 1e-12);
}

TEST_CASE("evolve rejects unnormalized input") {
    CHECK_THROWS_AS(evolve(OnePhotonState{1.0, 1.0, 0.0}, CavityParams{1.0, 1.0, 1.0}, 0.5),
                    std::invalid_argument);
}

TEST_CASE("evolve conserves the norm") {
    Rand rand(23);
    for (int rep = 0; rep < 30; ++rep) {
        const auto in = random_one_photon(rand);
        const CavityParams p{rand.uniform(0.0, 8.0), rand.uniform(0.0, 8.0),
                             rand.uniform(0.1, 2.0)};
        const auto out = evolve(in, p, rand.uniform(-4.0, 4.0));
        CHECK(std::abs(out.norm() - 1.0) <= 1e-12);
    }
}

TEST_CASE("evolution composes over time") {
    Rand rand(24);
    for (int rep = 0; rep < 10; ++rep) {
        const CavityParams p{rand.uniform(0.0, 6.0), rand.uniform(0.0, 6.0),
                             rand.uniform(0.1, 2.0)};
        const double t1 = rand.uniform(0.0, 3.0);
        const double t2 = rand.uniform(0.0, 3.0);
        const auto composed = matmul(evolution_unitary(p, t1), evolution_unitary(p, t2));
        CHECK(max_abs_diff(composed, evolution_unitary(p, t1 + t2)) <= 1e-10);
    }
}

TEST_CASE("transfer_condition returns omega/J = 4k - 1 at Jt = pi/2") {
    const auto c1 = transfer_condition(1);
    CHECK(c1.omega_over_j == 3.0);
    CHECK(c1.jt == doctest::Approx(kPi / 2.0).epsilon(1e-15));

    CHECK(transfer_condition(25).omega_over_j == 99.0);
    CHECK(transfer_condition(2).omega_over_j == 7.0);
    CHECK_THROWS_AS(transfer_condition(0), std::invalid_argument);
}

TEST_CASE("transfer_fidelity hits 1 on the condition family") {
    const double r = 1.0 / std::sqrt(2.0);
    const OnePhotonState in{r, r * std::exp(kI * kPi / 2.0), 0.0};
    CHECK(transfer_fidelity(CavityParams{99.0, 99.0, 1.0}, kPi / 2.0, in) ==
          doctest::Approx(1.0).epsilon(1e-12));

    for (int k = 1; k <= 6; ++k) {
        const auto cond = transfer_condition(k);
        const CavityParams p{cond.omega_over_j, cond.omega_over_j, 1.0};
        CHECK(transfer_fidelity(p, cond.jt, in) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(transfer_fidelity(p, cond.jt, OnePhotonState{0.0, 1.0, 0.0}) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("transfer_fidelity away from the condition") {
    // No evolution: the photon is still in cavity 1.
    CHECK(transfer_fidelity(CavityParams{99.0, 99.0, 1.0}, 0.0, OnePhotonState{0.0, 1.0, 0.0}) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // Half-way hop: half the probability has crossed.
    CHECK(transfer_fidelity(CavityParams{99.0, 99.0, 1.0}, kPi / 4.0,
                            OnePhotonState{0.0, 1.0, 0.0}) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

}  // TEST_SUITE
