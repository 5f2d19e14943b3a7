#include "qcorr/states.hpp"

#include <cmath>
#include <string>

namespace qcorr {

GisinParams::GisinParams(double lambda_, double psi_) : lambda(lambda_), psi(psi_) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw DomainError("lambda must be in [0, 1] (got " + std::to_string(lambda_) + ")");
    constexpr double half_pi = 1.5707963267948966;
    if (!(psi >= 0.0 && psi <= half_pi))
        throw DomainError("psi must be in [0, pi/2] (got " + std::to_string(psi_) + ")");
}

std::string to_string(Bipartition b) {
    switch (b) {
        case Bipartition::Initial: return "initial";
        case Bipartition::Accessible: return "accessible";
        case Bipartition::Inaccessible: return "inaccessible";
        case Bipartition::Spacetime: return "spacetime";
    }
    return "?";
}

std::optional<Bipartition> bipartition_from_string(std::string_view s) {
    if (s == "initial") return Bipartition::Initial;
    if (s == "accessible") return Bipartition::Accessible;
    if (s == "inaccessible") return Bipartition::Inaccessible;
    if (s == "spacetime") return Bipartition::Spacetime;
    return std::nullopt;
}

DensityMatrix gisin_state(const GisinParams& p) {
    const double s = std::sin(p.psi), c = std::cos(p.psi);
    const double mix = (1.0 - p.lambda) / 2.0;
    // Basis |ab>: 00, 01, 10, 11.
    ComplexMatrix m(4);
    m(0, 0) = mix;
    m(1, 1) = p.lambda * s * s;
    m(2, 2) = p.lambda * c * c;
    m(3, 3) = mix;
    m(1, 2) = p.lambda * s * c;
    m(2, 1) = p.lambda * s * c;
    return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix evolved_tripartite(const GisinParams& p, const BogoliubovCoefficients& c) {
    const double s = std::sin(p.psi), co = std::cos(p.psi);
    const double mix = (1.0 - p.lambda) / 2.0;
    const double lc2 = p.lambda * co * co;
    const double ls2 = p.lambda * s * s;
    const double lsc = p.lambda * s * co;
    const double w = c.varpi, e = c.epsilon;

    // Basis |o p q> -> 4o+2p+q on (A, B_I, B_II).
    ComplexMatrix m(8);
    // (1-lambda)/2 group.
    m(0, 0) = mix * w * w;          // |000><000|
    m(0, 3) = mix * w * e;          // |000><011|
    m(3, 0) = mix * w * e;
    m(3, 3) = mix * e * e;          // |011><011|
    m(6, 6) = mix;                  // |110><110|
    // lambda cos^2(psi) group.
    m(4, 4) = lc2 * w * w;          // |100><100|
    m(4, 7) = lc2 * w * e;          // |100><111|
    m(7, 4) = lc2 * w * e;
    m(7, 7) = lc2 * e * e;          // |111><111|
    // lambda sin^2(psi) group.
    m(2, 2) = ls2;                  // |010><010|
    // lambda sin(psi) cos(psi) group.
    m(2, 4) = lsc * w;              // |010><100|
    m(4, 2) = lsc * w;
    m(2, 7) = lsc * e;              // |010><111|
    m(7, 2) = lsc * e;
    return DensityMatrix(std::move(m), {2, 2, 2});
}

DensityMatrix reduced_state(const GisinParams& p, const BogoliubovCoefficients& c,
                            Bipartition which) {
    if (which == Bipartition::Initial) return gisin_state(p);

    const double s = std::sin(p.psi), co = std::cos(p.psi);
    const double mix = (1.0 - p.lambda) / 2.0;
    const double lc2 = p.lambda * co * co;
    const double ls2 = p.lambda * s * s;
    const double lsc = p.lambda * s * co;
    const double w = c.varpi, e = c.epsilon;

    ComplexMatrix m(4);
    switch (which) {
        case Bipartition::Accessible: // (A, B_I)
            m(0, 0) = mix * w * w;
            m(1, 1) = mix * e * e + ls2;
            m(2, 2) = lc2 * w * w;
            m(3, 3) = mix + lc2 * e * e;
            m(1, 2) = lsc * w;
            m(2, 1) = lsc * w;
            break;
        case Bipartition::Inaccessible: // (A, B_II)
            m(0, 0) = mix * w * w + ls2;
            m(1, 1) = mix * e * e;
            m(2, 2) = mix + lc2 * w * w;
            m(3, 3) = lc2 * e * e;
            m(0, 3) = lsc * e;
            m(3, 0) = lsc * e;
            break;
        case Bipartition::Spacetime: // (B_I, B_II)
            m(0, 0) = (mix + lc2) * w * w;
            m(0, 3) = (mix + lc2) * w * e;
            m(3, 0) = (mix + lc2) * w * e;
            m(3, 3) = (mix + lc2) * e * e;
            m(2, 2) = mix + ls2;
            break;
        case Bipartition::Initial: break; // handled above
    }
    return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix reduced_via_channel(const GisinParams& p, const BogoliubovCoefficients& c,
                                  Bipartition which) {
    if (which == Bipartition::Initial) return gisin_state(p);
    const DensityMatrix evolved = dilate_second_qubit(gisin_state(p), c);
    std::vector<std::size_t> keep;
    switch (which) {
        case Bipartition::Accessible: keep = {0, 1}; break;
        case Bipartition::Inaccessible: keep = {0, 2}; break;
        case Bipartition::Spacetime: keep = {1, 2}; break;
        case Bipartition::Initial: break;
    }
    return DensityMatrix(partial_trace(evolved.matrix(), evolved.dims(), keep), {2, 2});
}

} // namespace qcorr
