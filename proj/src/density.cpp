#include "qcorr/density.hpp"

#include <cmath>
#include <string>

namespace qcorr {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    std::size_t prod = 1;
    for (std::size_t d : dims_) prod *= d;
    if (dims_.empty() || prod != matrix_.dim())
        throw StateError("DensityMatrix: subsystem dims do not multiply to matrix dim");
    if (!is_hermitian(matrix_, 1e-10))
        throw StateError("DensityMatrix: matrix is not Hermitian within 1e-10");
    const Complex tr = trace(matrix_);
    if (std::abs(tr - Complex{1.0, 0.0}) > 1e-12)
        throw StateError("DensityMatrix: trace deviates from 1 by more than 1e-12 (trace = " +
                         std::to_string(tr.real()) + ")");
    const HermitianEigen eig = hermitian_eig(matrix_);
    if (eig.eigenvalues.back() < -1e-10)
        throw StateError("DensityMatrix: negative eigenvalue " +
                         std::to_string(eig.eigenvalues.back()));
}

} // namespace qcorr
