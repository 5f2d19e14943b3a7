#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qcorr/density.hpp"

namespace qcorr {

/// Expectation values (Tr[rho (sigma_i (x) I)]) of the three Pauli operators
/// on the first subsystem.
using BlochVector = std::array<double, 3>;

/// The real symmetric 3x3 matrix
///   N_ij = Tr{ rho^{1/2} (sigma_i (x) I) rho^{1/2} (sigma_j (x) I) }
/// whose eigenvalues lie in [0, 1].
struct SkewMatrixN {
    std::array<std::array<double, 3>, 3> n;
};

/// Branch selection for uncertainty-induced nonlocality when the first
/// subsystem's Bloch vector vanishes.  Strict uses 1 - n_min(N); RadialLimit
/// uses the z-axis direction 1 - N_zz, the limit of the v != 0 branch along
/// the Gisin family as psi -> pi/4.
enum class UinConvention { Strict, RadialLimit };

std::string to_string(UinConvention c);
std::optional<UinConvention> convention_from_string(std::string_view s);

/// Wigner-Yanase skew information I(rho, obs) = -1/2 Tr[sqrt(rho), obs]^2,
/// evaluated as Tr(rho obs^2) - Tr(sqrt(rho) obs sqrt(rho) obs) and clamped
/// to >= 0 at -1e-12 tolerance.  `obs` must be Hermitian and match rho's
/// dimension.
double skew_information(const DensityMatrix& rho, const ComplexMatrix& obs);

/// Bloch vector of the first subsystem, which must be a qubit.
BlochVector bloch_vector(const DensityMatrix& rho);

/// The N matrix, computed from a single sqrt(rho) factorisation.
SkewMatrixN n_matrix(const DensityMatrix& rho);

/// Uncertainty-induced nonlocality of a 2(x)d state:
///   1 - n_min(N)            when |v| < 1e-9 (Strict)
///   1 - N_zz                when |v| < 1e-9 (RadialLimit)
///   1 - v N v^T / |v|^2     when |v| >= 1e-9 (both conventions).
/// Result lies in [0, 1 + 1e-10].
double uin(const DensityMatrix& rho, UinConvention conv);

/// Direct maximisation of skew information over observables n.sigma (x) I on
/// a deterministic Fibonacci sphere grid of `grid_size` directions followed
/// by 20 bisection refinement steps around the best grid point.  When
/// |v| >= 1e-9 the commuting-observable constraint restricts the search to
/// +-v_hat.  `workers` caps the parallel grid scan (values are independent
/// of scheduling); grid_size must be >= 1000.
double uin_bruteforce(const DensityMatrix& rho, int grid_size, int workers = 1);

/// Quantum consonance of a 2(x)2 state: the sum of |rho_{ij,mn}| over index
/// pairs with both subsystem indices differing (i != m and j != n), after
/// local unitaries diagonalising the marginals.  States whose marginals are
/// already diagonal (every state produced by this library) skip the rotation.
double consonance(const DensityMatrix& rho);

} // namespace qcorr
