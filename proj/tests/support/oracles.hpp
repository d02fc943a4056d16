#pragma once

// Test-side oracles, independent of the library paths they check: the Haar
// moment is estimated by direct Monte-Carlo sampling with hand-rolled tensor
// powers, and random matrices come straight from the stream.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "clonot/linalg.hpp"
#include "clonot/rng.hpp"

namespace clonot::test {

struct HaarMomentEstimate {
    linalg::CMatrix mean;
    linalg::CMatrix stderr_parts;  // real part = SE of Re, imag part = SE of Im
};

// Sample mean of |psi><psi|^(x copies) over Haar-random pure qubit states,
// with per-entry standard errors.
inline HaarMomentEstimate mc_haar_moment(int copies, int samples, std::uint64_t seed) {
    const std::size_t dim = std::size_t{1} << copies;
    std::vector<double> sum_re(dim * dim, 0.0), sum_im(dim * dim, 0.0);
    std::vector<double> sq_re(dim * dim, 0.0), sq_im(dim * dim, 0.0);
    std::vector<std::complex<double>> t(dim);

    for (int s = 0; s < samples; ++s) {
        rng::Stream stream(rng::derive(seed, {static_cast<std::uint64_t>(s)}));
        std::complex<double> a = stream.gaussian_complex();
        std::complex<double> b = stream.gaussian_complex();
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        a /= norm;
        b /= norm;

        // t[x] = product over bit positions: set bit -> b, clear bit -> a
        for (std::size_t x = 0; x < dim; ++x) {
            std::complex<double> amp = 1.0;
            for (int bit = 0; bit < copies; ++bit)
                amp *= ((x >> bit) & 1u) ? b : a;
            t[x] = amp;
        }

        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                const std::complex<double> v = t[i] * std::conj(t[j]);
                const std::size_t idx = i * dim + j;
                sum_re[idx] += v.real();
                sum_im[idx] += v.imag();
                sq_re[idx] += v.real() * v.real();
                sq_im[idx] += v.imag() * v.imag();
            }
    }

    HaarMomentEstimate est{linalg::CMatrix(dim, dim), linalg::CMatrix(dim, dim)};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t idx = i * dim + j;
            const double mre = sum_re[idx] / samples;
            const double mim = sum_im[idx] / samples;
            const double vre = std::max(0.0, sq_re[idx] / samples - mre * mre);
            const double vim = std::max(0.0, sq_im[idx] / samples - mim * mim);
            est.mean(i, j) = {mre, mim};
            est.stderr_parts(i, j) = {std::sqrt(vre / (samples - 1)),
                                      std::sqrt(vim / (samples - 1))};
        }
    return est;
}

// Max over entries of |delta| / (3*SE + floor), for "within 3 standard
// errors" checks; <= 1 means the estimate matches.
inline double sigma_ratio(const linalg::CMatrix& estimate, const linalg::CMatrix& exact,
                          const linalg::CMatrix& stderr_parts, double floor = 1e-12) {
    double worst = 0.0;
    for (std::size_t i = 0; i < estimate.rows(); ++i)
        for (std::size_t j = 0; j < estimate.cols(); ++j) {
            const std::complex<double> d = estimate(i, j) - exact(i, j);
            const double se_re = stderr_parts(i, j).real();
            const double se_im = stderr_parts(i, j).imag();
            worst = std::max(worst, std::abs(d.real()) / (3.0 * se_re + floor));
            worst = std::max(worst, std::abs(d.imag()) / (3.0 * se_im + floor));
        }
    return worst;
}

inline linalg::CMatrix random_matrix(std::size_t rows, std::size_t cols, rng::Stream& stream) {
    linalg::CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = stream.gaussian_complex();
    return m;
}

inline linalg::CMatrix random_hermitian(std::size_t n, rng::Stream& stream) {
    linalg::CMatrix m = random_matrix(n, n, stream);
    linalg::CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

}  // namespace clonot::test
