// SPDX-License-Identifier: Apache-2.0
//
// Scalar probability helpers: Gaussian tail, log-domain binomials, Wilson
// intervals, entropy.

#pragma once

#include <cstdint>

namespace onebit {

/// Q(x) = P(N(0,1) > x) = erfc(x / sqrt 2) / 2.
double q_function(double x);

/// log C(n, k) p^k (1-p)^(n-k); -inf where the term is exactly zero.
double log_binomial_pmf(std::int64_t n, std::int64_t k, double p);
double binomial_pmf(std::int64_t n, std::int64_t k, double p);

/// P(Binomial(n, p) >= k_min).
double binomial_upper_tail(std::int64_t n, std::int64_t k_min, double p);

double binary_entropy(double p);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    [[nodiscard]] double half_width() const { return 0.5 * (hi - lo); }
    [[nodiscard]] double center() const { return 0.5 * (hi + lo); }
};

/// Wilson score interval for `successes` out of `n`; z = 1.959963984540054 for 95%.
Interval wilson_interval(std::uint64_t successes, std::uint64_t n,
                         double z = 1.959963984540054);

/// sqrt(p (1 - p) / n).
double binomial_standard_error(double p, std::uint64_t n);

}  // namespace onebit
