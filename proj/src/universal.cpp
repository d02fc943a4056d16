#include "clonot/universal.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "clonot/kernels.hpp"
#include "clonot/numeric.hpp"

namespace clonot::universal {

using linalg::CMatrix;
using linalg::cplx;

namespace {

constexpr int kProjectorCap = 12;
constexpr int kClonerCap = 10;

int zeros_of(std::uint32_t x, int qubits) {
    return qubits - std::popcount(x);
}

// Swap the bits at positions b and b+1 of x.
std::uint32_t swap_adjacent_bits(std::uint32_t x, int b) {
    const std::uint32_t lo = (x >> b) & 1u;
    const std::uint32_t hi = (x >> (b + 1)) & 1u;
    if (lo == hi)
        return x;
    return x ^ (std::uint32_t{3} << b);
}

// Max entry change under any adjacent qubit transposition; transpositions
// generate the full permutation group.
double permutation_symmetry_defect(const CMatrix& rho, int qubits) {
    const std::uint32_t dim = std::uint32_t{1} << qubits;
    double defect = 0.0;
    for (int b = 0; b + 1 < qubits; ++b)
        for (std::uint32_t x = 0; x < dim; ++x)
            for (std::uint32_t y = 0; y < dim; ++y) {
                const std::uint32_t sx = swap_adjacent_bits(x, b);
                const std::uint32_t sy = swap_adjacent_bits(y, b);
                defect = std::max(defect, std::abs(rho(x, y) - rho(sx, sy)));
            }
    return defect;
}

int qubit_count_of(const CMatrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(who) + ": matrix not square");
    const std::size_t dim = m.rows();
    if (dim < 2 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument(std::string(who) + ": dimension is not a power of two");
    return std::countr_zero(dim);
}

std::vector<cplx> state_vector(const fock::QubitAmplitudes& q) {
    return {q.a(), q.b()};
}

}  // namespace

DensityOperator::DensityOperator(CMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
        throw std::invalid_argument("DensityOperator: matrix not square");
    if (matrix_.hermiticity_defect() > kNormTol)
        throw std::invalid_argument("DensityOperator: not Hermitian");
    if (std::abs(matrix_.trace() - cplx{1.0, 0.0}) > kNormTol)
        throw std::invalid_argument("DensityOperator: trace is not 1");
}

bool DensityOperator::is_positive_semidefinite(double tol) const {
    return linalg::is_positive_semidefinite(matrix_, tol);
}

SymmetricProjector::SymmetricProjector(int copies, CMatrix matrix)
    : copies_(copies), matrix_(std::move(matrix)) {}

int SymmetricProjector::rank() const {
    return static_cast<int>(std::lround(matrix_.trace().real()));
}

double SymmetricProjector::idempotency_defect() const {
    return kernels::matmul(matrix_, matrix_).max_abs_diff(matrix_);
}

SymmetricProjector sym_projector(int copies) {
    if (copies < 1 || copies > kProjectorCap)
        throw std::invalid_argument("sym_projector: copies out of [1, 12]");

    const std::uint32_t dim = std::uint32_t{1} << copies;
    std::vector<double> inv_count(static_cast<std::size_t>(copies) + 1);
    for (int k = 0; k <= copies; ++k)
        inv_count[k] = 1.0 / binomial(copies, k);

    // <x|P|y> = [zeros(x) = zeros(y) = k] / C(copies, k)
    CMatrix p(dim, dim);
    const std::int64_t rows = dim;
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < rows; ++x) {
        const int kx = zeros_of(static_cast<std::uint32_t>(x), copies);
        for (std::uint32_t y = 0; y < dim; ++y)
            if (zeros_of(y, copies) == kx)
                p(static_cast<std::size_t>(x), y) = inv_count[kx];
    }
    return SymmetricProjector(copies, std::move(p));
}

DensityOperator haar_moment(int copies) {
    SymmetricProjector p = sym_projector(copies);
    return DensityOperator(p.matrix().scaled(1.0 / (copies + 1)));
}

DensityOperator projection_cloner(int n, int m, const fock::QubitAmplitudes& input,
                                  double* pre_trace) {
    if (n < 1 || m <= n || m > kClonerCap)
        throw std::invalid_argument("projection_cloner: need 1 <= n < m <= 10");

    const std::vector<cplx> psi = state_vector(input);
    const CMatrix rho = linalg::outer(psi);

    CMatrix big = rho;
    for (int i = 1; i < n; ++i)
        big = kernels::kron(big, rho);
    if (m > n)
        big = kernels::kron(big, CMatrix::identity(std::size_t{1} << (m - n)));

    CMatrix projected = kernels::sym_conjugate(big, m);

    // The normalization is a property of (n, m) alone; its structural value
    // anchors an every-call check that the channel treats all inputs alike.
    double expected_trace = 0.0;
    for (int k = n; k <= m; ++k)
        expected_trace += binomial(m - n, k - n) / binomial(m, k);
    const double tr = projected.trace().real();
    if (std::abs(tr - expected_trace) > 1e-9 * expected_trace)
        throw std::runtime_error("projection_cloner: normalization depends on the input");
    if (pre_trace != nullptr)
        *pre_trace = tr;

    projected.scale(1.0 / tr);
    return DensityOperator(std::move(projected));
}

double single_copy_fidelity(const DensityOperator& output, const fock::QubitAmplitudes& input) {
    const int qubits = qubit_count_of(output.matrix(), "single_copy_fidelity");
    if (permutation_symmetry_defect(output.matrix(), qubits) > kSymmetryTol)
        throw std::invalid_argument("single_copy_fidelity: output not permutation-symmetric");

    const CMatrix rho1 = linalg::partial_trace_first_qubit(output.matrix(), qubits);
    const std::vector<cplx> psi = state_vector(input);
    cplx f = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            f += std::conj(psi[i]) * rho1(i, j) * psi[j];
    return f.real();
}

cloning::OutcomeDistribution zeros_distribution(const DensityOperator& output,
                                                const conservation::CloneSpec& spec) {
    const int qubits = qubit_count_of(output.matrix(), "zeros_distribution");
    if (qubits != spec.m())
        throw std::invalid_argument("zeros_distribution: qubit count does not match the scenario");
    if (permutation_symmetry_defect(output.matrix(), qubits) > kSymmetryTol)
        throw std::invalid_argument("zeros_distribution: output not permutation-symmetric");

    const std::uint32_t dim = std::uint32_t{1} << qubits;
    std::vector<double> q(static_cast<std::size_t>(qubits) + 1, 0.0);
    for (std::uint32_t x = 0; x < dim; ++x) {
        double d = output.matrix()(x, x).real();
        if (d < 0.0) {
            if (d < -kNormTol)
                throw std::domain_error("zeros_distribution: negative diagonal mass");
            d = 0.0;
        }
        q[static_cast<std::size_t>(zeros_of(x, qubits))] += d;
    }

    double below = 0.0;
    for (int a = 0; a < spec.n(); ++a)
        below += q[static_cast<std::size_t>(a)];
    if (below > kPsdTol)
        throw std::domain_error("zeros_distribution: outcome mass below n");

    std::vector<double> restricted(q.begin() + spec.n(), q.begin() + spec.m() + 1);
    double total = 0.0;
    for (double x : restricted)
        total += x;
    for (double& x : restricted)
        x /= total;
    return cloning::OutcomeDistribution(spec, std::move(restricted));
}

double optimal_clone_fidelity(long long n, long long m) {
    if (n < 1 || m <= n)
        throw std::invalid_argument("optimal_clone_fidelity: need m > n >= 1");
    return static_cast<double>(m * (n + 1) + n) / static_cast<double>(m * (n + 2));
}

double optimal_not_fidelity(long long n) {
    if (n < 1)
        throw std::invalid_argument("optimal_not_fidelity: need n >= 1");
    return static_cast<double>(n + 1) / static_cast<double>(n + 2);
}

double universality_check(int n, int m, int samples, std::uint64_t seed) {
    if (samples < 2)
        throw std::invalid_argument("universality_check: need at least 2 samples");
    if (n < 1 || m <= n || m > kClonerCap)
        throw std::invalid_argument("universality_check: need 1 <= n < m <= 10");

    double fmin = 2.0;
    double fmax = -1.0;
#pragma omp parallel for schedule(dynamic) reduction(min : fmin) reduction(max : fmax)
    for (int i = 0; i < samples; ++i) {
        rng::Stream stream(rng::derive(seed, {static_cast<std::uint64_t>(i)}));
        const fock::QubitAmplitudes psi = haar_qubit(stream);
        const double f = single_copy_fidelity(projection_cloner(n, m, psi), psi);
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
    }
    return fmax - fmin;
}

fock::QubitAmplitudes haar_qubit(rng::Stream& stream) {
    while (true) {
        const cplx a = stream.gaussian_complex();
        const cplx b = stream.gaussian_complex();
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        if (norm > 1e-6)
            return fock::QubitAmplitudes(a / norm, b / norm);
    }
}

}  // namespace clonot::universal
