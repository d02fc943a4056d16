#include "clonot/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace clonot::linalg {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx CMatrix::trace() const {
    if (rows_ != cols_)
        throw std::invalid_argument("trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

CMatrix CMatrix::scaled(cplx factor) const {
    CMatrix out = *this;
    out.scale(factor);
    return out;
}

void CMatrix::scale(cplx factor) {
    for (cplx& x : data_)
        x *= factor;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        d = std::max(d, std::abs(data_[i] - other.data_[i]));
    return d;
}

double CMatrix::hermiticity_defect() const {
    if (rows_ != cols_)
        throw std::invalid_argument("hermiticity_defect: matrix not square");
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

double CMatrix::max_abs() const {
    double d = 0.0;
    for (const cplx& x : data_)
        d = std::max(d, std::abs(x));
    return d;
}

CMatrix outer(std::span<const cplx> v) {
    CMatrix out(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out(i, j) = v[i] * std::conj(v[j]);
    return out;
}

CMatrix partial_trace_first_qubit(const CMatrix& rho, int qubits) {
    if (qubits < 1)
        throw std::invalid_argument("partial_trace_first_qubit: need at least one qubit");
    const std::size_t dim = std::size_t{1} << qubits;
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("partial_trace_first_qubit: dimension mismatch");

    const std::size_t rest = dim >> 1;
    CMatrix out(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            cplx s = 0.0;
            for (std::size_t r = 0; r < rest; ++r)
                s += rho(i * rest + r, j * rest + r);
            out(i, j) = s;
        }
    return out;
}

bool is_positive_semidefinite(const CMatrix& a, double shift) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("is_positive_semidefinite: matrix not square");
    const std::size_t n = a.rows();

    // In-place Cholesky of a + shift*I; a negative or non-finite pivot means
    // some eigenvalue lies below -shift.
    CMatrix w = a;
    for (std::size_t i = 0; i < n; ++i)
        w(i, i) += shift;

    for (std::size_t j = 0; j < n; ++j) {
        double pivot = w(j, j).real();
        for (std::size_t k = 0; k < j; ++k)
            pivot -= std::norm(w(j, k));
        if (!(pivot > 0.0) || !std::isfinite(pivot))
            return false;
        const double ljj = std::sqrt(pivot);
        w(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx s = w(i, j);
            for (std::size_t k = 0; k < j; ++k)
                s -= w(i, k) * std::conj(w(j, k));
            w(i, j) = s / ljj;
        }
    }
    return true;
}

}  // namespace clonot::linalg
