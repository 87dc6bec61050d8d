#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dickman {

// zeta(2)..zeta(kmax), each accurate to well below 1e-14 relative.
class ZetaTable {
  public:
    ZetaTable(int kmax, std::vector<double> values) : kmax_(kmax), values_(std::move(values)) {
        if (kmax < 2 || values_.size() != static_cast<std::size_t>(kmax) - 1)
            throw std::invalid_argument("ZetaTable: values must cover zeta(2)..zeta(kmax)");
        validate();
    }

    int kmax() const { return kmax_; }

    double operator()(int k) const {
        if (k < 2 || k > kmax_) throw std::invalid_argument("ZetaTable: k out of range");
        return values_[static_cast<std::size_t>(k) - 2];
    }

    const std::vector<double>& values() const { return values_; }

  private:
    void validate() const {
        double prev = values_[0] + 1.0;
        for (double v : values_) {
            if (!(v > 1.0 && v <= values_[0] && v < prev))
                throw std::logic_error("ZetaTable: values must decrease strictly within (1, zeta(2)]");
            prev = v;
        }
    }

    int kmax_;
    std::vector<double> values_;
};

namespace detail {

// Euler-Maclaurin tail of sum_{n>=N} n^{-s} for integer s >= 2.
// Truncation error is below the first omitted term, ~1e-18 at N = 16.
inline long double zeta_em(int s, int N = 16) {
    long double sum = 0.0L;
    for (int n = 1; n < N; ++n) sum += powl(static_cast<long double>(n), -static_cast<long double>(s));
    const long double Nl = static_cast<long double>(N);
    sum += 0.5L * powl(Nl, -static_cast<long double>(s));
    sum += powl(Nl, 1.0L - static_cast<long double>(s)) / (s - 1.0L);
    // B_{2j}/(2j)! for j = 1..7
    static const long double b2j[] = {1.0L / 12, -1.0L / 720, 1.0L / 30240, -1.0L / 1209600,
                                      1.0L / 47900160, -691.0L / 1307674368000.0L, 1.0L / 74724249600.0L};
    long double rising = static_cast<long double>(s);  // s(s+1)...(s+2j-2)
    for (int j = 1; j <= 7; ++j) {
        sum += b2j[j - 1] * rising * powl(Nl, -static_cast<long double>(s + 2 * j - 1));
        rising *= (s + 2 * j - 1) * static_cast<long double>(s + 2 * j);
    }
    return sum;
}

}  // namespace detail

inline ZetaTable zeta_values(int kmax) {
    if (kmax < 2) throw std::invalid_argument("zeta_values: kmax must be >= 2");
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(kmax) - 1);
    for (int k = 2; k <= kmax; ++k) vals.push_back(static_cast<double>(detail::zeta_em(k)));
    return ZetaTable(kmax, std::move(vals));
}

}  // namespace dickman
