#include "cavsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace cavsim {

namespace {

constexpr double kEigNegativeClamp = 1e-9;

void check_dim(int dim) {
    if (dim < 2 || dim > 4) {
        throw std::invalid_argument("ComplexMatrix: dim must be 2, 3 or 4, got " +
                                    std::to_string(dim));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), data_(static_cast<size_t>(dim) * dim) {
    check_dim(dim);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(static_cast<int>(rows.size())) {
    check_dim(dim_);
    data_.reserve(static_cast<size_t>(dim_) * dim_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    for (const Complex& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix add: dimension mismatch");
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix sub: dimension mismatch");
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

ComplexMatrix operator*(const Complex& scale, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = scale * a(r, c);
    return out;
}

ComplexMatrix operator*(double scale, const ComplexMatrix& a) {
    return Complex(scale, 0.0) * a;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matmul: dimension mismatch, " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
    }
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = std::conj(a(c, r));
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out(r, c) = std::conj(a(r, c));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw std::invalid_argument("kron: only 2x2 factors are supported");
    }
    ComplexMatrix out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> v) {
    if (static_cast<int>(v.size()) != a.dim()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    std::vector<Complex> out(v.size());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out[r] += a(r, c) * v[c];
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex t = 0.0;
    for (int i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c)));
    return m;
}

double hermiticity_deviation(const ComplexMatrix& a) {
    double m = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
    return m;
}

EigResult hermitian_eig(const ComplexMatrix& h) {
    const double dev = hermiticity_deviation(h);
    if (dev > 1e-10) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "hermitian_eig: input deviates from Hermitian by %.3e",
                      dev);
        throw std::invalid_argument(buf);
    }

    const int n = h.dim();

    // Symmetrize so sweep decisions are not biased by sub-tolerance asymmetry.
    ComplexMatrix a(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = 1e-15 * std::max(1.0, max_abs(a));

    for (int sweep = 0; sweep < 128; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const double babs = std::abs(b);
                if (babs <= stop) continue;

                // Unitary Givens-like rotation zeroing the (p,q) entry.
                const Complex phase = b / babs;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * babs);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                ComplexMatrix g = ComplexMatrix::identity(n);
                g(p, p) = c;
                g(p, q) = phase * s;
                g(q, p) = -std::conj(phase) * s;
                g(q, q) = c;

                a = matmul(adjoint(g), matmul(a, g));
                v = matmul(v, g);
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigResult res{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        res.eigenvalues[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) res.eigenvectors(r, k) = v(r, order[k]);
    }
    return res;
}

namespace {

/// Clamps sampling-noise negatives to zero, snaps sub-roundoff dust to zero
/// and takes the root; rejects genuinely negative spectra.
void sqrt_psd_eigenvalues(std::vector<double>& eigenvalues) {
    double top = 0.0;
    for (double w : eigenvalues) top = std::max(top, w);
    const double zero_snap = 1e-13 * std::max(1.0, top);
    for (double& w : eigenvalues) {
        if (w < -kEigNegativeClamp) {
            char buf[96];
            std::snprintf(buf, sizeof(buf),
                          "psd_sqrt: eigenvalue %.3e below -1e-9, matrix is not PSD", w);
            throw std::invalid_argument(buf);
        }
        w = (w < zero_snap) ? 0.0 : std::sqrt(w);
    }
}

}  // namespace

std::vector<double> psd_sqrt_spectrum(const ComplexMatrix& m) {
    EigResult eig = hermitian_eig(m);
    sqrt_psd_eigenvalues(eig.eigenvalues);
    return eig.eigenvalues;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    EigResult eig = hermitian_eig(m);
    sqrt_psd_eigenvalues(eig.eigenvalues);

    const int n = m.dim();
    const ComplexMatrix& v = eig.eigenvectors;
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex sum = 0.0;
            for (int k = 0; k < n; ++k) sum += v(r, k) * eig.eigenvalues[k] * std::conj(v(c, k));
            out(r, c) = sum;
        }
    // Re-symmetrize to kill roundoff asymmetry.
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            const Complex z = 0.5 * (out(r, c) + std::conj(out(c, r)));
            out(r, c) = z;
            out(c, r) = std::conj(z);
        }
    return out;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("is_unitary: tol must be positive");
    return max_abs_diff(matmul(adjoint(u), u), ComplexMatrix::identity(u.dim())) <= tol;
}

}  // namespace cavsim
