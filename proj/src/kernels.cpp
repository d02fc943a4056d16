#include "clonot/kernels.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "clonot/numeric.hpp"

namespace clonot::kernels {

using linalg::CMatrix;
using linalg::cplx;

// The parallel and serial variants share these row workers. Keeping them
// out-of-line pins one code instance for both paths, which is what makes the
// bit-identical guarantee in the header hold.
#if defined(__GNUC__)
#define CLONOT_NOINLINE __attribute__((noinline))
#else
#define CLONOT_NOINLINE
#endif

namespace {

void check_matmul_shapes(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions differ");
}

CLONOT_NOINLINE void matmul_row(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t i) {
    const std::size_t inner = a.cols();
    const std::size_t cols = b.cols();
    cplx* dst = out.data() + i * cols;
    for (std::size_t k = 0; k < inner; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{0.0, 0.0})
            continue;
        const cplx* brow = b.data() + k * cols;
        for (std::size_t j = 0; j < cols; ++j)
            dst[j] += aik * brow[j];
    }
}

CLONOT_NOINLINE void kron_row(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t r) {
    const std::size_t ia = r / b.rows();
    const std::size_t ib = r % b.rows();
    cplx* dst = out.data() + r * out.cols();
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
        const cplx av = a(ia, ja);
        const cplx* brow = b.data() + ib * b.cols();
        cplx* block = dst + ja * b.cols();
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
            block[jb] = av * brow[jb];
    }
}

// Basis indices of `qubits` qubits grouped by zero count (qubits - popcount),
// each group in increasing index order.
std::vector<std::vector<std::uint32_t>> zero_count_groups(int qubits) {
    const std::uint32_t dim = std::uint32_t{1} << qubits;
    std::vector<std::vector<std::uint32_t>> groups(static_cast<std::size_t>(qubits) + 1);
    for (std::uint32_t x = 0; x < dim; ++x)
        groups[static_cast<std::size_t>(qubits - std::popcount(x))].push_back(x);
    return groups;
}

void check_sym_shapes(const CMatrix& a, int qubits) {
    if (qubits < 1 || qubits > 20)
        throw std::invalid_argument("sym_conjugate: qubit count out of range");
    const std::size_t dim = std::size_t{1} << qubits;
    if (a.rows() != dim || a.cols() != dim)
        throw std::invalid_argument("sym_conjugate: dimension mismatch");
}

// Raw block sum over one pair of weight sectors, fixed accumulation order.
CLONOT_NOINLINE cplx sector_block_sum(const CMatrix& a, const std::vector<std::uint32_t>& rows,
                      const std::vector<std::uint32_t>& cols) {
    cplx s = 0.0;
    for (std::uint32_t x : rows) {
        const cplx* arow = a.data() + std::size_t{x} * a.cols();
        for (std::uint32_t y : cols)
            s += arow[y];
    }
    return s;
}

// P a P via the weight-block structure of the symmetric projector: within the
// sector of zero count z the projector is the rank-1 operator |u_z><u_z| with
// u_z the normalized uniform vector, so the conjugation reduces to per-block
// sums followed by a broadcast.
CMatrix sym_conjugate_impl(const CMatrix& a, int qubits, bool parallel) {
    check_sym_shapes(a, qubits);
    const std::int64_t dim = std::int64_t{1} << qubits;
    const int nblocks = qubits + 1;
    const auto groups = zero_count_groups(qubits);

    std::vector<cplx> block(static_cast<std::size_t>(nblocks) * nblocks, cplx{0.0, 0.0});
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
    for (int kx = 0; kx < nblocks; ++kx)
        for (int ky = 0; ky < nblocks; ++ky)
            block[static_cast<std::size_t>(kx) * nblocks + ky] =
                sector_block_sum(a, groups[kx], groups[ky]);

    std::vector<double> inv_count(static_cast<std::size_t>(nblocks));
    std::vector<std::uint8_t> zeros(static_cast<std::size_t>(dim));
    for (int k = 0; k < nblocks; ++k)
        inv_count[k] = 1.0 / binomial(qubits, k);
    for (std::int64_t x = 0; x < dim; ++x)
        zeros[x] = static_cast<std::uint8_t>(qubits - std::popcount(static_cast<std::uint64_t>(x)));

    CMatrix out(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t x = 0; x < dim; ++x) {
        const int kx = zeros[x];
        cplx* dst = out.data() + static_cast<std::size_t>(x) * dim;
        for (std::int64_t y = 0; y < dim; ++y) {
            const int ky = zeros[y];
            dst[y] = block[static_cast<std::size_t>(kx) * nblocks + ky] *
                     (inv_count[kx] * inv_count[ky]);
        }
    }
    return out;
}

}  // namespace

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    check_matmul_shapes(a, b);
    CMatrix out(a.rows(), b.cols());
    const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i)
        matmul_row(a, b, out, static_cast<std::size_t>(i));
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    const std::int64_t rows = static_cast<std::int64_t>(out.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < rows; ++r)
        kron_row(a, b, out, static_cast<std::size_t>(r));
    return out;
}

CMatrix sym_conjugate(const CMatrix& a, int qubits) {
    return sym_conjugate_impl(a, qubits, true);
}

namespace reference {

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    check_matmul_shapes(a, b);
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        matmul_row(a, b, out, i);
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t r = 0; r < out.rows(); ++r)
        kron_row(a, b, out, r);
    return out;
}

CMatrix sym_conjugate(const CMatrix& a, int qubits) {
    return sym_conjugate_impl(a, qubits, false);
}

}  // namespace reference

}  // namespace clonot::kernels
