// SPDX-License-Identifier: Apache-2.0

#include "onebit/probability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace onebit {

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double log_binomial_pmf(std::int64_t n, std::int64_t k, double p)
{
    if (n < 0 || k < 0 || k > n)
        return -std::numeric_limits<double>::infinity();
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binomial probability must lie in [0, 1]");
    const double log_choose = std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
                              std::lgamma(double(n - k) + 1);
    // 0^0 = 1 in both boundary cases.
    double lp = 0.0;
    if (k > 0)
        lp += p == 0.0 ? -std::numeric_limits<double>::infinity() : double(k) * std::log(p);
    if (n - k > 0)
        lp += p == 1.0 ? -std::numeric_limits<double>::infinity() : double(n - k) * std::log1p(-p);
    return log_choose + lp;
}

double binomial_pmf(std::int64_t n, std::int64_t k, double p)
{
    return std::exp(log_binomial_pmf(n, k, p));
}

double binomial_upper_tail(std::int64_t n, std::int64_t k_min, double p)
{
    double sum = 0.0;
    for (std::int64_t k = std::max<std::int64_t>(k_min, 0); k <= n; ++k)
        sum += binomial_pmf(n, k, p);
    return std::min(sum, 1.0);
}

double binary_entropy(double p)
{
    if (p <= 0.0 || p >= 1.0)
        return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z)
{
    if (n == 0)
        return {0.0, 1.0};
    const double nn = double(n);
    const double phat = double(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (phat + z2 / (2.0 * nn)) / denom;
    const double half = z / denom * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double binomial_standard_error(double p, std::uint64_t n)
{
    return n == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / double(n));
}

}  // namespace onebit
