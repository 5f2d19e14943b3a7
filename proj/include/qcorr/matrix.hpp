#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr {

using Complex = std::complex<double>;

// Largest matrix dimension the library will materialise.  Everything in this
// project is at most 8x8 (three qubits); the cap only guards tensor_product
// against runaway composition.
inline constexpr std::size_t kDimCap = 64;

/// Dense square complex matrix, row-major storage.  The carrier for every
/// state and observable in the library.  Constructors reject non-finite
/// entries; instances are treated as immutable values once built.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

private:
    std::size_t dim_;
    std::vector<Complex> a_;
};

/// Result of a Hermitian eigendecomposition.  Eigenvalues are sorted
/// non-increasing; eigenvector columns match that order.  Each column is
/// phase-fixed so its first component of largest magnitude is real and
/// non-negative; exact eigenvalue ties are broken by lexicographic order of
/// the (phase-fixed) eigenvector entries.
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexMatrix operator*(double s, const ComplexMatrix& m);

ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// True when |m - m†| stays within `tol` entrywise.
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/// Kronecker product.  Entry ((i*b.dim+k),(j*b.dim+l)) = a(i,j)*b(k,l).
/// Throws DimensionError when the result would exceed `max_dim`.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t max_dim = kDimCap);

/// Trace out every subsystem not listed in `keep`.  `dims` are the subsystem
/// dimensions in tensor order (subsystem-major, big-endian index packing);
/// the kept subsystems retain their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

/// Cyclic complex Jacobi diagonalisation.  Requires `m` Hermitian within
/// 1e-10 per entry (it is symmetrised exactly before solving).  Converged
/// when the off-diagonal Frobenius norm drops below 1e-13; throws
/// NumericError after `max_sweeps` sweeps without convergence.
HermitianEigen hermitian_eig(const ComplexMatrix& m, int max_sweeps = 100);

/// Principal square root of a Hermitian PSD matrix.  Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything below -1e-10 throws NotPsdError.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

} // namespace qcorr
