#pragma once

#include <cstdint>
#include <stdexcept>

namespace clonot {

// Shared tolerances.
inline constexpr double kNormTol = 1e-12;      // normalization / overlap assertions
inline constexpr double kPruneTol = 1e-15;     // amplitude pruning after tensor products
inline constexpr double kPsdTol = 1e-10;       // eigenvalue floor for density operators
inline constexpr double kSymmetryTol = 1e-10;  // permutation-symmetry defect

// Binomial coefficient, exact in integer arithmetic for n <= 60.
constexpr double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        return 0.0;
    if (n > 60)
        throw std::invalid_argument("binomial: n > 60 not supported");
    if (k > n - k)
        k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return static_cast<double>(r);
}

}  // namespace clonot
