#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dickman {

// Formal power series in z truncated at a fixed order N: coefficients of
// z^0..z^N. Arithmetic never reads or writes past index N.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, 0.0) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
    }

    TruncatedSeries(int order, std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1)
            throw std::invalid_argument("TruncatedSeries: coeffs must have order+1 entries");
        check_finite();
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    double operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    double& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

    const std::vector<double>& coeffs() const { return coeffs_; }

    void check_finite() const {
        for (double c : coeffs_)
            if (!std::isfinite(c)) throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    std::vector<double> coeffs_;
};

inline void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": operands must share the same order");
}

inline TruncatedSeries series_one(int order) {
    TruncatedSeries s(order);
    s[0] = 1.0;
    return s;
}

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_add");
    TruncatedSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

// Cauchy product truncated at the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "series_mul");
    const int N = a.order();
    TruncatedSeries r(N);
    for (int n = 0; n <= N; ++n) {
        long double acc = 0.0L;
        for (int k = 0; k <= n; ++k) acc += static_cast<long double>(a[k]) * b[n - k];
        r[n] = static_cast<double>(acc);
    }
    return r;
}

// exp of a series with zero constant term, via the exact recurrence
// b_0 = 1, n*b_n = sum_{k=1..n} k*a_k*b_{n-k}.
inline TruncatedSeries series_exp(const TruncatedSeries& s) {
    s.check_finite();
    if (s[0] != 0.0) throw std::invalid_argument("series_exp: constant term must be zero");
    const int N = s.order();
    std::vector<long double> b(static_cast<std::size_t>(N) + 1, 0.0L);
    b[0] = 1.0L;
    for (int n = 1; n <= N; ++n) {
        long double acc = 0.0L;
        for (int k = 1; k <= n; ++k) acc += static_cast<long double>(k) * s[k] * b[n - k];
        b[static_cast<std::size_t>(n)] = acc / n;
    }
    TruncatedSeries r(N);
    for (int n = 0; n <= N; ++n) r[n] = static_cast<double>(b[static_cast<std::size_t>(n)]);
    return r;
}

inline TruncatedSeries series_pow(const TruncatedSeries& base, int m) {
    if (m < 0) throw std::invalid_argument("series_pow: exponent must be >= 0");
    TruncatedSeries result = series_one(base.order());
    TruncatedSeries sq = base;
    int e = m;
    while (e > 0) {
        if (e & 1) result = series_mul(result, sq);
        e >>= 1;
        if (e > 0) sq = series_mul(sq, sq);
    }
    return result;
}

// Termwise integral of (1 - e^{-t})/t: g(z) = sum_{n>=1} (-1)^{n-1} z^n/(n*n!).
inline TruncatedSeries series_int_base(int order) {
    TruncatedSeries g(order);
    double fact = 1.0;  // n!
    for (int n = 1; n <= order; ++n) {
        fact *= n;
        g[n] = ((n % 2 == 1) ? 1.0 : -1.0) / (n * fact);
    }
    return g;
}

// m-th power of the base series above; coefficient of z^j is E_{j,m}.
inline TruncatedSeries series_int_power(int m, int order) {
    if (m < 0) throw std::invalid_argument("series_int_power: m must be >= 0");
    if (order < m) throw std::invalid_argument("series_int_power: order must be >= m");
    return series_pow(series_int_base(order), m);
}

}  // namespace dickman
