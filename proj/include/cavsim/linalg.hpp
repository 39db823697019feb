#pragma once

#include <complex>
#include <span>
#include <vector>

namespace cavsim {

using Complex = std::complex<double>;

/// Dense square complex matrix, dim in {2, 3, 4}, row-major.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int row, int col) { return data_[row * dim_ + col]; }
    const Complex& operator()(int row, int col) const { return data_[row * dim_ + col]; }

  private:
    int dim_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& scale, const ComplexMatrix& a);
ComplexMatrix operator*(double scale, const ComplexMatrix& a);

/// Standard matrix product. Throws std::invalid_argument on dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Entrywise complex conjugate.
ComplexMatrix conjugate(const ComplexMatrix& a);

/// Kronecker product of two 2x2 matrices; the first factor owns the high index bit.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> v);

Complex trace(const ComplexMatrix& a);

/// max_ij |a_ij - b_ij|; the one comparison norm used throughout.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);

/// max entry of |A - A^dagger|.
double hermiticity_deviation(const ComplexMatrix& a);

struct EigResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, H = V diag(w) V^dagger
};

/// Eigendecomposition of a Hermitian matrix via cyclic complex Jacobi rotations.
/// Input must be Hermitian to 1e-10 (max |H - H^dagger| entry), else throws
/// std::invalid_argument naming the deviation magnitude.
EigResult hermitian_eig(const ComplexMatrix& h);

/// Hermitian PSD square root. Eigenvalues in [-1e-9, 0) are clamped to zero;
/// anything below -1e-9 throws (the matrix is not a sampling artifact but a bug).
/// Near-zero eigenvalue dust is snapped to exactly zero so roots of
/// rank-deficient matrices do not pick up sqrt(roundoff) noise.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Square roots of the eigenvalues of a Hermitian PSD matrix, ascending, with
/// the same clamp-and-snap policy as psd_sqrt.
std::vector<double> psd_sqrt_spectrum(const ComplexMatrix& m);

/// True iff max entry of |U^dagger U - I| <= tol.
bool is_unitary(const ComplexMatrix& u, double tol);

}  // namespace cavsim
