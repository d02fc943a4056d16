#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace clonot::linalg {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Plain value type, no invariants.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    CMatrix adjoint() const;
    cplx trace() const;

    CMatrix scaled(cplx factor) const;
    void scale(cplx factor);

    // max_ij |a_ij - b_ij|; matrices must have equal shape.
    double max_abs_diff(const CMatrix& other) const;
    // max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// v v^dagger
CMatrix outer(std::span<const cplx> v);

// Reduce an n-qubit density matrix to its first qubit (most significant bit
// of the basis index); rho must be square with power-of-two dimension.
CMatrix partial_trace_first_qubit(const CMatrix& rho, int qubits);

// True iff all eigenvalues of Hermitian `a` are >= -shift, certified by a
// Cholesky factorization of a + shift*I.
bool is_positive_semidefinite(const CMatrix& a, double shift);

}  // namespace clonot::linalg
