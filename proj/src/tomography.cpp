#include "cavsim/tomography.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cavsim {

namespace {

constexpr Complex kI{0.0, 1.0};

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::X: return "X";
        case Basis::Y: return "Y";
        default: return "Z";
    }
}

Basis to_basis(Pauli p) {
    switch (p) {
        case Pauli::X: return Basis::X;
        case Pauli::Y: return Basis::Y;
        case Pauli::Z: return Basis::Z;
        default: throw std::invalid_argument("no measurement basis for the identity");
    }
}

const std::array<double, 4>& setting_probs(
    const std::map<BasisSetting, std::array<double, 4>>& probs, const BasisSetting& s) {
    const auto it = probs.find(s);
    if (it == probs.end()) {
        throw std::invalid_argument(std::string("stokes estimation: missing setting (") +
                                    basis_name(s.basis_q1) + ", " + basis_name(s.basis_q0) + ")");
    }
    return it->second;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

constexpr std::array<Pauli, 3> kNontrivial{Pauli::X, Pauli::Y, Pauli::Z};

}  // namespace

ComplexMatrix pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return ComplexMatrix::identity(2);
        case Pauli::X:
            return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
        case Pauli::Y:
            return ComplexMatrix{{0.0, -kI}, {kI, 0.0}};
        case Pauli::Z:
            return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
    }
    throw std::invalid_argument("pauli_matrix: unknown index");
}

DensityMatrix DensityMatrix::from_state(const TwoQubitState& psi) {
    DensityMatrix rho;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) rho.mat(r, c) = psi.amp(r) * std::conj(psi.amp(c));
    return rho;
}

std::vector<BasisSetting> measurement_plan() {
    std::vector<BasisSetting> plan;
    plan.reserve(9);
    for (Basis b1 : {Basis::X, Basis::Y, Basis::Z})
        for (Basis b0 : {Basis::X, Basis::Y, Basis::Z}) plan.push_back(BasisSetting{b1, b0});
    return plan;
}

StokesVector stokes_from_probs(const std::map<BasisSetting, std::array<double, 4>>& probs) {
    StokesVector s;
    for (Pauli j : kNontrivial) {
        for (Pauli k : kNontrivial) {
            const auto& p = setting_probs(probs, BasisSetting{to_basis(j), to_basis(k)});
            s(j, k) = p[0] - p[1] - p[2] + p[3];
        }
    }
    // Single-qubit terms from marginals, averaged over the three compatible
    // settings to cut the estimator variance.
    for (Pauli j : kNontrivial) {
        double tj = 0.0;
        double tk = 0.0;
        for (Basis other : {Basis::X, Basis::Y, Basis::Z}) {
            const auto& pj = setting_probs(probs, BasisSetting{to_basis(j), other});
            tj += (pj[0] + pj[1]) - (pj[2] + pj[3]);
            const auto& pk = setting_probs(probs, BasisSetting{other, to_basis(j)});
            tk += (pk[0] + pk[2]) - (pk[1] + pk[3]);
        }
        s(j, Pauli::I) = tj / 3.0;
        s(Pauli::I, j) = tk / 3.0;
    }
    return s;
}

StokesVector stokes_from_counts(const std::map<BasisSetting, Counts>& counts) {
    std::map<BasisSetting, std::array<double, 4>> probs;
    for (const auto& [setting, c] : counts) probs[setting] = empirical_probs(c);
    return stokes_from_probs(probs);
}

StokesVector stokes_exact(const TwoQubitState& state) {
    StokesVector s;
    const auto& amps = state.amps();
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (j == 0 && k == 0) continue;
            const ComplexMatrix op =
                kron(pauli_matrix(static_cast<Pauli>(j)), pauli_matrix(static_cast<Pauli>(k)));
            const auto opv = matvec(op, amps);
            Complex expect = 0.0;
            for (int i = 0; i < 4; ++i) expect += std::conj(amps[static_cast<size_t>(i)]) * opv[static_cast<size_t>(i)];
            s.t[static_cast<size_t>(4 * j + k)] = expect.real();
        }
    }
    return s;
}

DensityMatrix reconstruct_density(const StokesVector& s) {
    DensityMatrix rho;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            const ComplexMatrix op =
                kron(pauli_matrix(static_cast<Pauli>(j)), pauli_matrix(static_cast<Pauli>(k)));
            const double w = s.t[static_cast<size_t>(4 * j + k)] / 4.0;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) rho.mat(r, c) += w * op(r, c);
        }
    }
    return rho;
}

DensityMatrix project_physical(const DensityMatrix& rho) {
    if (hermiticity_deviation(rho.mat) > 1e-9) {
        throw std::invalid_argument("project_physical: input is not Hermitian");
    }
    if (std::abs(trace(rho.mat).real() - 1.0) > 1e-9) {
        throw std::invalid_argument("project_physical: input trace is not 1");
    }

    EigResult eig = hermitian_eig(rho.mat);
    double total = 0.0;
    for (double& w : eig.eigenvalues) {
        w = std::max(w, 0.0);
        total += w;
    }

    DensityMatrix out;
    const ComplexMatrix& v = eig.eigenvectors;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Complex sum = 0.0;
            for (int k = 0; k < 4; ++k) {
                sum += v(r, k) * (eig.eigenvalues[static_cast<size_t>(k)] / total) * std::conj(v(c, k));
            }
            out.mat(r, c) = sum;
        }
    return out;
}

double fidelity(const DensityMatrix& rho_t, const DensityMatrix& rho) {
    const auto check_physical = [](const DensityMatrix& m, const char* which) {
        if (hermiticity_deviation(m.mat) > 1e-10 || std::abs(trace(m.mat).real() - 1.0) > 1e-9) {
            throw std::invalid_argument(std::string("fidelity: ") + which +
                                        " is not a density matrix; run project_physical first");
        }
        const EigResult eig = hermitian_eig(m.mat);
        if (eig.eigenvalues.front() < -1e-9) {
            throw std::invalid_argument(std::string("fidelity: ") + which +
                                        " has a negative eigenvalue; run project_physical first");
        }
    };
    check_physical(rho_t, "rho_t");
    check_physical(rho, "rho");

    const ComplexMatrix root = psd_sqrt(rho_t.mat);
    ComplexMatrix inner = matmul(root, matmul(rho.mat, root));
    // Symmetrize before taking eigenvalues; the product is Hermitian up to roundoff.
    for (int r = 0; r < 4; ++r)
        for (int c = r; c < 4; ++c) {
            const Complex z = 0.5 * (inner(r, c) + std::conj(inner(c, r)));
            inner(r, c) = z;
            inner(c, r) = std::conj(z);
        }
    double f = 0.0;
    for (double w : psd_sqrt_spectrum(inner)) f += w;
    return std::min(f, 1.0);
}

std::string to_json(const DensityMatrix& rho) {
    std::string out = "{\"dim\":4,\"re\":[";
    for (int part = 0; part < 2; ++part) {
        for (int r = 0; r < 4; ++r) {
            out += (r == 0) ? "[" : ",[";
            for (int c = 0; c < 4; ++c) {
                if (c) out += ",";
                const Complex z = rho.mat(r, c);
                out += format_double(part == 0 ? z.real() : z.imag());
            }
            out += "]";
        }
        out += (part == 0) ? "],\"im\":[" : "]}";
    }
    return out;
}

std::string to_json(const StokesVector& s) {
    static constexpr const char* kAxis = "IXYZ";
    std::string out = "{";
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (j || k) out += ",";
            out += '"';
            out += kAxis[j];
            out += kAxis[k];
            out += "\":";
            out += format_double(s.t[static_cast<size_t>(4 * j + k)]);
        }
    }
    out += "}";
    return out;
}

}  // namespace cavsim
