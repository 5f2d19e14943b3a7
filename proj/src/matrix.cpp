#include "qcorr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qcorr {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim())
        throw DimensionError(std::string(op) + ": dimension mismatch (" +
                             std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Complex{0.0, 0.0}) {
    if (dim < 1) throw DimensionError("ComplexMatrix: dim must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (dim < 1) throw DimensionError("ComplexMatrix: dim must be >= 1");
    if (a_.size() != dim * dim)
        throw DimensionError("ComplexMatrix: entry count " + std::to_string(a_.size()) +
                             " does not match dim^2 = " + std::to_string(dim * dim));
    for (const Complex& z : a_)
        if (!finite(z)) throw DomainError("ComplexMatrix: non-finite entry rejected");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator+");
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator-");
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator*");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = s * m(r, c);
    return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& m) { return Complex{s, 0.0} * m; }

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = std::conj(m(c, r));
    return out;
}

Complex trace(const ComplexMatrix& m) {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) s += std::norm(m(r, c));
    return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "frobenius_distance");
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) s += std::norm(a(r, c) - b(r, c));
    return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = r; c < m.dim(); ++c)
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    return true;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
    const std::size_t da = a.dim(), db = b.dim();
    if (da > max_dim / db)
        throw DimensionError("tensor_product: result dim " + std::to_string(da) + "*" +
                             std::to_string(db) + " exceeds cap " + std::to_string(max_dim));
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
    const std::size_t n = dims.size();
    std::size_t prod = 1;
    for (std::size_t d : dims) {
        if (d < 1) throw DimensionError("partial_trace: subsystem dim must be >= 1");
        prod *= d;
    }
    if (prod != rho.dim())
        throw DimensionError("partial_trace: product of dims " + std::to_string(prod) +
                             " does not match matrix dim " + std::to_string(rho.dim()));
    if (keep.empty()) throw DimensionError("partial_trace: keep set must be non-empty");

    std::vector<std::size_t> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.back() >= n) throw DimensionError("partial_trace: keep index out of range");

    std::vector<bool> is_kept(n, false);
    for (std::size_t k : kept) is_kept[k] = true;

    std::size_t out_dim = 1;
    for (std::size_t k : kept) out_dim *= dims[k];
    ComplexMatrix out(out_dim);

    const std::size_t full = rho.dim();
    std::vector<std::size_t> rdig(n), cdig(n);
    for (std::size_t r = 0; r < full; ++r) {
        std::size_t rr = r;
        for (std::size_t s = n; s-- > 0;) { rdig[s] = rr % dims[s]; rr /= dims[s]; }
        for (std::size_t c = 0; c < full; ++c) {
            std::size_t cc = c;
            for (std::size_t s = n; s-- > 0;) { cdig[s] = cc % dims[s]; cc /= dims[s]; }
            bool diagonal_on_traced = true;
            for (std::size_t s = 0; s < n; ++s)
                if (!is_kept[s] && rdig[s] != cdig[s]) { diagonal_on_traced = false; break; }
            if (!diagonal_on_traced) continue;
            std::size_t ro = 0, co = 0;
            for (std::size_t k : kept) { ro = ro * dims[k] + rdig[k]; co = co * dims[k] + cdig[k]; }
            out(ro, co) += rho(r, c);
        }
    }
    return out;
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// Phase-fix one eigenvector column in place: rotate so the first component
// of largest magnitude becomes real non-negative.
void fix_phase(ComplexMatrix& v, std::size_t col) {
    const std::size_t n = v.dim();
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double mag = std::abs(v(i, col));
        if (mag > best) { best = mag; arg = i; }
    }
    if (best <= 0.0) return;
    const Complex phase = v(arg, col) / best;
    for (std::size_t i = 0; i < n; ++i) v(i, col) *= std::conj(phase);
    v(arg, col) = Complex{best, 0.0};
}

bool column_lex_less(const ComplexMatrix& v, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v(i, a).real() != v(i, b).real()) return v(i, a).real() < v(i, b).real();
        if (v(i, a).imag() != v(i, b).imag()) return v(i, a).imag() < v(i, b).imag();
    }
    return false;
}

} // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& m, int max_sweeps) {
    if (!is_hermitian(m, 1e-10))
        throw DomainError("hermitian_eig: matrix is not Hermitian within 1e-10");

    const std::size_t n = m.dim();
    ComplexMatrix a = 0.5 * (m + adjoint(m));
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr double kOffTol = 1e-13;
    bool converged = offdiag_norm(a) < kOffTol;

    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex beta = a(p, q);
                const double mag = std::abs(beta);
                if (mag == 0.0) continue;

                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                const double zeta = (alpha - gamma) / (2.0 * mag);
                const double t =
                    (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex phase = beta / mag;

                // Columns: A <- A U with U(p,p)=c, U(p,q)=-s*phase,
                // U(q,p)=s*conj(phase), U(q,q)=c.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * (s * std::conj(phase));
                    a(k, q) = akq * c - akp * (s * phase);
                }
                // Rows: A <- U† A.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = apk * c + aqk * (s * phase);
                    a(q, k) = aqk * c - apk * (s * std::conj(phase));
                }
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
                a(p, p) = Complex{a(p, p).real(), 0.0};
                a(q, q) = Complex{a(q, q).real(), 0.0};
                // Accumulate eigenvectors: V <- V U.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * (s * std::conj(phase));
                    v(k, q) = vkq * c - vkp * (s * phase);
                }
            }
        }
        converged = offdiag_norm(a) < kOffTol;
    }
    if (!converged)
        throw NumericError("hermitian_eig: no convergence after " + std::to_string(max_sweeps) +
                           " sweeps");

    for (std::size_t j = 0; j < n; ++j) fix_phase(v, j);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (a(x, x).real() != a(y, y).real()) return a(x, x).real() > a(y, y).real();
        return column_lex_less(v, x, y);
    });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
    const HermitianEigen eig = hermitian_eig(m);
    const std::size_t n = m.dim();
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = eig.eigenvalues[k];
        if (w < -1e-10)
            throw NotPsdError("matrix_sqrt_psd: eigenvalue " + std::to_string(w) +
                              " below -1e-10");
        roots[k] = std::sqrt(std::max(w, 0.0));
    }
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                acc += roots[k] * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
            out(i, j) = acc;
        }
    return out;
}

} // namespace qcorr
