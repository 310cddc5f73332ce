// SPDX-License-Identifier: Apache-2.0

#include "onebit/rng.hpp"

#include <cmath>
#include <random>

namespace onebit {

namespace {

void fill_gaussian(RngStream& rng, std::span<ComplexSample> out)
{
    std::normal_distribution<double> quad(0.0, std::sqrt(0.5));
    for (auto& v : out) {
        double re = quad(rng);
        double im = quad(rng);
        v = {re, im};
    }
}

}  // namespace

ChannelMatrix sample_complex_gaussian(RngStream& rng, std::size_t rows, std::size_t cols)
{
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be positive");
    ChannelMatrix m(rows, cols);
    fill_gaussian(rng, m.flat());
    return m;
}

std::vector<ComplexSample> sample_complex_gaussian(RngStream& rng, std::size_t n)
{
    std::vector<ComplexSample> v(n);
    fill_gaussian(rng, v);
    return v;
}

}  // namespace onebit
