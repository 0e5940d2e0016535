#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace plethora {

/// Determinant over a commutative ring by Laplace expansion along the first
/// row. `zero` and `one` are the ring's identities and `is_zero` lets sparse
/// rows skip whole minors. Intended for the small matrices of Jacobi-Trudi.
template <typename T, typename IsZero>
T laplace_determinant(const std::vector<std::vector<T>> &m, const T &zero, const T &one, IsZero is_zero)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return one;
    }
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        cols[j] = j;
    }
    std::function<T(std::size_t, std::vector<std::size_t> &)> expand = [&](std::size_t row,
                                                                          std::vector<std::size_t> &free) -> T {
        if (row == n) {
            return one;
        }
        T total = zero;
        for (std::size_t idx = 0; idx < free.size(); ++idx) {
            const std::size_t col = free[idx];
            if (is_zero(m[row][col])) {
                continue;
            }
            std::vector<std::size_t> rest;
            rest.reserve(free.size() - 1);
            for (std::size_t k = 0; k < free.size(); ++k) {
                if (k != idx) {
                    rest.push_back(free[k]);
                }
            }
            T minor = expand(row + 1, rest);
            if (is_zero(minor)) {
                continue;
            }
            T term = m[row][col] * minor;
            if (idx % 2 == 1) {
                total = total - term;
            } else {
                total = total + term;
            }
        }
        return total;
    };
    return expand(0, cols);
}

} // namespace plethora
