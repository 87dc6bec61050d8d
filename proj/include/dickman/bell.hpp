#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace dickman {

// Partial exponential Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}), evaluated
// numerically through the recurrence
//   B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1},
// with B_{0,0} = 1 and B_{n,0} = B_{0,k} = 0 otherwise.
// x is 1-indexed mathematically: x[i-1] holds x_i.
inline double bell_partial(int n, int k, std::span<const double> x) {
    if (n < 0 || k < 0) throw std::invalid_argument("bell_partial: n, k must be >= 0");
    if (k > n) return 0.0;
    if (n == 0) return 1.0;
    if (k == 0) return 0.0;
    if (static_cast<int>(x.size()) < n - k + 1)
        throw std::invalid_argument("bell_partial: need x_1..x_{n-k+1}");

    std::vector<std::vector<long double>> binom(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        binom[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(r) + 1, 1.0L);
        for (int c = 1; c < r; ++c)
            binom[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                binom[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] +
                binom[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)];
    }

    // B[nn][kk]; column kk only needs rows nn <= n - (k - kk).
    std::vector<std::vector<long double>> B(static_cast<std::size_t>(n) + 1,
                                            std::vector<long double>(static_cast<std::size_t>(k) + 1, 0.0L));
    B[0][0] = 1.0L;
    for (int kk = 1; kk <= k; ++kk) {
        for (int nn = kk; nn <= n - (k - kk); ++nn) {
            long double acc = 0.0L;
            for (int i = 1; i <= nn - kk + 1; ++i)
                acc += binom[static_cast<std::size_t>(nn) - 1][static_cast<std::size_t>(i) - 1] *
                       static_cast<long double>(x[static_cast<std::size_t>(i) - 1]) *
                       B[static_cast<std::size_t>(nn - i)][static_cast<std::size_t>(kk) - 1];
            B[static_cast<std::size_t>(nn)][static_cast<std::size_t>(kk)] = acc;
        }
    }
    return static_cast<double>(B[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
}

}  // namespace dickman
