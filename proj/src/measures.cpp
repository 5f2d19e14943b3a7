#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcorr {

namespace {

ComplexMatrix pauli(int i) {
    ComplexMatrix m(2);
    switch (i) {
        case 0: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 1: m(0, 1) = Complex{0.0, -1.0}; m(1, 0) = Complex{0.0, 1.0}; break;
        default: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    }
    return m;
}

// sigma_i on the first qubit, identity on the rest.
ComplexMatrix pauli_on_first(int i, std::size_t rest_dim) {
    return tensor_product(pauli(i), ComplexMatrix::identity(rest_dim));
}

std::size_t rest_dim_of(const DensityMatrix& rho, const char* op) {
    if (rho.dims().front() != 2)
        throw DimensionError(std::string(op) + ": first subsystem must be a qubit");
    return rho.matrix().dim() / 2;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    Complex t{0.0, 0.0};
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) t += a(r, c) * b(c, r);
    return t;
}

double clamp_skew(double val, const char* op) {
    if (val < 0.0) {
        if (val < -1e-12)
            throw NumericError(std::string(op) + ": value " + std::to_string(val) +
                               " below -1e-12");
        return 0.0;
    }
    return val;
}

// Skew information with a precomputed square root, for reuse across many
// observables.
double skew_with_sqrt(const ComplexMatrix& rho, const ComplexMatrix& root,
                      const ComplexMatrix& obs) {
    const ComplexMatrix obs2 = obs * obs;
    const ComplexMatrix rob = root * obs;
    const double val =
        (trace_of_product(rho, obs2) - trace_of_product(rob, rob)).real();
    return clamp_skew(val, "skew_information");
}

struct Vec3 {
    double x, y, z;
};

Vec3 normalized(Vec3 v) {
    const double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    return {v.x / n, v.y / n, v.z / n};
}

ComplexMatrix direction_observable(Vec3 n, const ComplexMatrix& sx, const ComplexMatrix& sy,
                                   const ComplexMatrix& sz) {
    return n.x * sx + n.y * sy + n.z * sz;
}

double clamp_uin(double val, const char* op) {
    if (val < 0.0) {
        if (val < -1e-10)
            throw NumericError(std::string(op) + ": value " + std::to_string(val) +
                               " below -1e-10");
        return 0.0;
    }
    if (val > 1.0 + 1e-10)
        throw NumericError(std::string(op) + ": value " + std::to_string(val) + " above 1");
    return val;
}

} // namespace

std::string to_string(UinConvention c) {
    return c == UinConvention::Strict ? "strict" : "radial-limit";
}

std::optional<UinConvention> convention_from_string(std::string_view s) {
    if (s == "strict") return UinConvention::Strict;
    if (s == "radial-limit") return UinConvention::RadialLimit;
    return std::nullopt;
}

double skew_information(const DensityMatrix& rho, const ComplexMatrix& obs) {
    if (obs.dim() != rho.matrix().dim())
        throw DimensionError("skew_information: observable dimension mismatch");
    if (!is_hermitian(obs, 1e-10))
        throw DomainError("skew_information: observable is not Hermitian");
    const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
    return skew_with_sqrt(rho.matrix(), root, obs);
}

BlochVector bloch_vector(const DensityMatrix& rho) {
    const std::size_t rest = rest_dim_of(rho, "bloch_vector");
    BlochVector v{};
    for (int i = 0; i < 3; ++i) {
        const Complex t = trace_of_product(rho.matrix(), pauli_on_first(i, rest));
        if (std::abs(t.imag()) >= 1e-12)
            throw NumericError("bloch_vector: non-real expectation value");
        v[i] = t.real();
    }
    return v;
}

SkewMatrixN n_matrix(const DensityMatrix& rho) {
    const std::size_t rest = rest_dim_of(rho, "n_matrix");
    const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
    std::array<ComplexMatrix, 3> rs{root * pauli_on_first(0, rest),
                                    root * pauli_on_first(1, rest),
                                    root * pauli_on_first(2, rest)};
    SkewMatrixN out{};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const Complex t = trace_of_product(rs[i], rs[j]);
            if (std::abs(t.imag()) >= 1e-10)
                throw NumericError("n_matrix: non-real entry");
            out.n[i][j] = t.real();
            out.n[j][i] = t.real();
        }

    // Type invariant: eigenvalues of N lie in [-1e-10, 1+1e-10].
    ComplexMatrix nm(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) nm(i, j) = out.n[i][j];
    const HermitianEigen eig = hermitian_eig(nm);
    if (eig.eigenvalues.front() > 1.0 + 1e-10 || eig.eigenvalues.back() < -1e-10)
        throw NumericError("n_matrix: eigenvalue outside [0, 1]");
    return out;
}

double uin(const DensityMatrix& rho, UinConvention conv) {
    const BlochVector v = bloch_vector(rho);
    const SkewMatrixN nm = n_matrix(rho);
    const double vnorm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);

    double val;
    if (vnorm >= 1e-9) {
        double quad = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) quad += v[i] * nm.n[i][j] * v[j];
        val = 1.0 - quad / (vnorm * vnorm);
    } else if (conv == UinConvention::Strict) {
        ComplexMatrix m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = nm.n[i][j];
        val = 1.0 - hermitian_eig(m).eigenvalues.back();
    } else {
        val = 1.0 - nm.n[2][2];
    }
    return clamp_uin(val, "uin");
}

double uin_bruteforce(const DensityMatrix& rho, int grid_size, int workers) {
    if (grid_size < 1000)
        throw DomainError("uin_bruteforce: grid_size must be >= 1000 (got " +
                          std::to_string(grid_size) + ")");

    const std::size_t rest = rest_dim_of(rho, "uin_bruteforce");
    const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
    const ComplexMatrix sx = pauli_on_first(0, rest);
    const ComplexMatrix sy = pauli_on_first(1, rest);
    const ComplexMatrix sz = pauli_on_first(2, rest);
    const auto eval = [&](Vec3 n) {
        return skew_with_sqrt(rho.matrix(), root, direction_observable(n, sx, sy, sz));
    };

    const BlochVector v = bloch_vector(rho);
    const double vnorm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (vnorm >= 1e-9) {
        // Commuting nondegenerate observables share the axis of v.
        const Vec3 vh{v[0] / vnorm, v[1] / vnorm, v[2] / vnorm};
        return clamp_uin(std::max(eval(vh), eval(Vec3{-vh.x, -vh.y, -vh.z})), "uin_bruteforce");
    }

    // Degenerate marginal: every direction is admissible.  Seedless spiral
    // grid, so failures reproduce bit-for-bit.
    constexpr double golden_angle = 2.399963229728653;
    const auto grid_dir = [&](int k) {
        const double z = 1.0 - 2.0 * (k + 0.5) / grid_size;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * k;
        return Vec3{r * std::cos(phi), r * std::sin(phi), z};
    };

    std::vector<double> values(static_cast<std::size_t>(grid_size));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(std::max(1, workers))
#endif
    for (int k = 0; k < grid_size; ++k) values[static_cast<std::size_t>(k)] = eval(grid_dir(k));
#ifndef _OPENMP
    (void)workers;
#endif

    int best_k = 0;
    for (int k = 1; k < grid_size; ++k)
        if (values[static_cast<std::size_t>(k)] > values[static_cast<std::size_t>(best_k)])
            best_k = k;
    double best = values[static_cast<std::size_t>(best_k)];
    Vec3 dir = grid_dir(best_k);

    // Neighbourhood bisection around the best grid point.
    double radius = 7.0 / std::sqrt(static_cast<double>(grid_size));
    for (int iter = 0; iter < 20; ++iter) {
        const Vec3 ref = std::abs(dir.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
        Vec3 t1 = normalized(Vec3{ref.y * dir.z - ref.z * dir.y, ref.z * dir.x - ref.x * dir.z,
                                  ref.x * dir.y - ref.y * dir.x});
        Vec3 t2{dir.y * t1.z - dir.z * t1.y, dir.z * t1.x - dir.x * t1.z,
                dir.x * t1.y - dir.y * t1.x};
        for (int a = 0; a < 8; ++a) {
            const double ang = a * (std::numbers::pi / 4.0);
            const double u1 = radius * std::cos(ang), u2 = radius * std::sin(ang);
            const Vec3 cand = normalized(
                Vec3{dir.x + u1 * t1.x + u2 * t2.x, dir.y + u1 * t1.y + u2 * t2.y,
                     dir.z + u1 * t1.z + u2 * t2.z});
            const double val = eval(cand);
            if (val > best) { best = val; dir = cand; }
        }
        radius *= 0.5;
    }
    return clamp_uin(best, "uin_bruteforce");
}

double consonance(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<std::size_t>{2, 2})
        throw DimensionError("consonance: state must be 2(x)2");

    const ComplexMatrix ma = partial_trace(rho.matrix(), rho.dims(), {0});
    const ComplexMatrix mb = partial_trace(rho.matrix(), rho.dims(), {1});
    const bool diag_a = std::abs(ma(0, 1)) < 1e-10 && std::abs(ma(1, 0)) < 1e-10;
    const bool diag_b = std::abs(mb(0, 1)) < 1e-10 && std::abs(mb(1, 0)) < 1e-10;

    ComplexMatrix rq = rho.matrix();
    if (!(diag_a && diag_b)) {
        // Remove local coherence: rotate each marginal to its eigenbasis,
        // eigenvalues in non-increasing order.
        const ComplexMatrix w1 = adjoint(hermitian_eig(ma).eigenvectors);
        const ComplexMatrix w2 = adjoint(hermitian_eig(mb).eigenvectors);
        const ComplexMatrix w = tensor_product(w1, w2);
        rq = w * rq * adjoint(w);
    }

    double total = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t m = 0; m < 2; ++m)
                for (std::size_t n = 0; n < 2; ++n)
                    if (i != m && j != n) total += std::abs(rq(2 * i + j, 2 * m + n));
    return total;
}

} // namespace qcorr
