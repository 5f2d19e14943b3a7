#pragma once

#include <array>
#include <utility>

#include "qcorr/density.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

/// Monochromatic Dirac-mode frequency, natural units (G = c = hbar = k_B = 1).
struct FieldMode {
    double omega;
    explicit FieldMode(double w);
};

/// Hawking temperature; zero encodes the no-evaporation limit.
struct Temperature {
    double t_hawking;
    explicit Temperature(double t);
};

/// Amplitudes of the thermal mode mixing seen by a near-horizon observer:
/// varpi = (e^{-omega/T} + 1)^{-1/2}, epsilon = (e^{omega/T} + 1)^{-1/2}.
/// Always satisfies varpi^2 + epsilon^2 = 1.
struct BogoliubovCoefficients {
    double varpi;
    double epsilon;
};

/// T = 1/(8*pi*mass) for a black hole of the given mass.
Temperature hawking_temperature(double mass);

/// Evaluate the mode-mixing amplitudes.  epsilon is computed in the
/// overflow-free form e^{-x/2} (1+e^{-x})^{-1/2} with x = omega/T; T = 0
/// maps exactly to (1, 0).
BogoliubovCoefficients bogoliubov(FieldMode mode, Temperature temp);

/// Images of the single-qubit basis under the two-mode expansion:
/// |0> -> varpi|00> + epsilon|11> and |1> -> |10>, both on (B_I, B_II).
/// Returned as 4-component amplitude vectors in big-endian packing.
std::pair<std::array<Complex, 4>, std::array<Complex, 4>>
kruskal_basis_images(const BogoliubovCoefficients& coeffs);

/// Apply the isometry I_A (x) W, where W maps the second qubit into the
/// two-mode pair (B_I, B_II) via kruskal_basis_images.  Trace and rank are
/// preserved by construction.  Input must be a 2(x)2 state; the result is
/// the 2(x)2(x)2 state on (A, B_I, B_II).
DensityMatrix dilate_second_qubit(const DensityMatrix& rho_ab,
                                  const BogoliubovCoefficients& coeffs);

} // namespace qcorr
