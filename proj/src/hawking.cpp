#include "qcorr/hawking.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qcorr {

FieldMode::FieldMode(double w) : omega(w) {
    if (!(w > 0.0) || !std::isfinite(w))
        throw DomainError("omega must be a positive finite real (got " + std::to_string(w) + ")");
}

Temperature::Temperature(double t) : t_hawking(t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw DomainError("t_hawking must be a non-negative finite real (got " +
                          std::to_string(t) + ")");
}

Temperature hawking_temperature(double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw DomainError("mass must be a positive finite real (got " + std::to_string(mass) + ")");
    return Temperature(1.0 / (8.0 * std::numbers::pi * mass));
}

BogoliubovCoefficients bogoliubov(FieldMode mode, Temperature temp) {
    // x = omega/T; T = 0 is the frozen-channel limit (varpi, epsilon) = (1, 0).
    const double x = temp.t_hawking == 0.0 ? std::numeric_limits<double>::infinity()
                                           : mode.omega / temp.t_hawking;
    const double em = std::exp(-x); // in [0, 1], never overflows
    BogoliubovCoefficients c;
    c.varpi = 1.0 / std::sqrt(em + 1.0);
    c.epsilon = std::exp(-0.5 * x) / std::sqrt(1.0 + em);
    return c;
}

std::pair<std::array<Complex, 4>, std::array<Complex, 4>>
kruskal_basis_images(const BogoliubovCoefficients& coeffs) {
    // Basis on (B_I, B_II): |00>, |01>, |10>, |11>.
    std::array<Complex, 4> vacuum{coeffs.varpi, 0.0, 0.0, coeffs.epsilon};
    std::array<Complex, 4> excited{0.0, 0.0, 1.0, 0.0};
    return {vacuum, excited};
}

DensityMatrix dilate_second_qubit(const DensityMatrix& rho_ab,
                                  const BogoliubovCoefficients& coeffs) {
    if (rho_ab.dims() != std::vector<std::size_t>{2, 2})
        throw StateError("dilate_second_qubit: input must be a 2(x)2 density matrix");

    const auto [w0, w1] = kruskal_basis_images(coeffs);
    const std::array<const std::array<Complex, 4>*, 2> w{&w0, &w1};

    // rho' = (I (x) W) rho (I (x) W)†, assembled entrywise: the |a p><b q|
    // component of rho contributes rho_ab[2a+p, 2b+q] * w_p (x) w_q†.
    const ComplexMatrix& r = rho_ab.matrix();
    ComplexMatrix out(8);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q) {
                    const Complex coeff = r(2 * a + p, 2 * b + q);
                    if (coeff == Complex{0.0, 0.0}) continue;
                    for (std::size_t i = 0; i < 4; ++i) {
                        if ((*w[p])[i] == Complex{0.0, 0.0}) continue;
                        for (std::size_t j = 0; j < 4; ++j)
                            out(4 * a + i, 4 * b + j) +=
                                coeff * (*w[p])[i] * std::conj((*w[q])[j]);
                    }
                }
    return DensityMatrix(std::move(out), {2, 2, 2});
}

} // namespace qcorr
