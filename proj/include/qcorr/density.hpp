#pragma once

#include <cstddef>
#include <vector>

#include "qcorr/matrix.hpp"

namespace qcorr {

/// A validated quantum state: Hermitian within 1e-10, trace 1 within 1e-12,
/// eigenvalues >= -1e-10, with the subsystem dimension list whose product
/// equals the matrix dimension.  Index packing is subsystem-major big-endian,
/// e.g. for dims {2,2,2} the basis ket |o p q> maps to index 4o+2p+q.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims);

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<std::size_t>& dims() const { return dims_; }

private:
    ComplexMatrix matrix_;
    std::vector<std::size_t> dims_;
};

} // namespace qcorr
