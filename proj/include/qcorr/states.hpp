#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qcorr/density.hpp"
#include "qcorr/hawking.hpp"

namespace qcorr {

/// Knobs of the initial two-qubit Gisin state
///   rho = lambda |phi_psi><phi_psi| + (1-lambda)/2 (|00><00| + |11><11|),
/// with |phi_psi> = sin(psi)|01> + cos(psi)|10>.
struct GisinParams {
    double lambda;
    double psi;
    GisinParams(double lambda_, double psi_);
};

/// The two-mode reductions of the evolved three-mode state, plus the initial
/// pair itself.  Accessible = (A, B_I), Inaccessible = (A, B_II),
/// Spacetime = (B_I, B_II).
enum class Bipartition { Initial, Accessible, Inaccessible, Spacetime };

std::string to_string(Bipartition b);
std::optional<Bipartition> bipartition_from_string(std::string_view s);

/// The initial Gisin state as a 2(x)2 density matrix.
DensityMatrix gisin_state(const GisinParams& p);

/// Closed form of the evolved three-mode state on (A, B_I, B_II).  Equals
/// dilate_second_qubit(gisin_state(p), c) up to rounding; that equality is
/// the library's principal cross-check.
DensityMatrix evolved_tripartite(const GisinParams& p, const BogoliubovCoefficients& c);

/// Closed form of the requested two-mode reduction.  Initial returns the
/// Gisin state itself.
DensityMatrix reduced_state(const GisinParams& p, const BogoliubovCoefficients& c,
                            Bipartition which);

/// Same reduction obtained through the channel route: dilate the Gisin state
/// and partial-trace the complementary mode.  Kept alongside the closed form
/// permanently as a correctness oracle.
DensityMatrix reduced_via_channel(const GisinParams& p, const BogoliubovCoefficients& c,
                                  Bipartition which);

} // namespace qcorr
