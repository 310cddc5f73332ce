// SPDX-License-Identifier: Apache-2.0

#include "onebit/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace onebit {

std::vector<ComplexSample> noiseless_receive(const ChannelMatrix& h, std::span<const TxSymbol> x,
                                             double power)
{
    if (!(power > 0.0) || !std::isfinite(power))
        throw std::invalid_argument("transmit power must be positive and finite");
    if (x.size() != h.cols())
        throw std::invalid_argument("transmit vector has " + std::to_string(x.size()) +
                                    " entries, channel has " + std::to_string(h.cols()) +
                                    " columns");
    const double scale = std::sqrt(power / double(h.cols()));
    std::vector<ComplexSample> y(h.rows());
    for (std::size_t n = 0; n < h.rows(); ++n) {
        auto row = h.row(n);
        double re = 0.0, im = 0.0;
        for (std::size_t m = 0; m < row.size(); ++m) {
            const double hr = row[m].real(), hi = row[m].imag();
            if (x[m].re != 0.0) {
                re += hr * x[m].re;
                im += hi * x[m].re;
            }
            if (x[m].im != 0.0) {
                re -= hi * x[m].im;
                im += hr * x[m].im;
            }
        }
        y[n] = {scale * re, scale * im};
    }
    return y;
}

ChannelUse transmit_deterministic(const ChannelMatrix& h, std::span<const TxSymbol> x,
                                  double power, std::span<const ComplexSample> noise)
{
    if (noise.size() != h.rows())
        throw std::invalid_argument("noise vector length must equal receive antenna count");
    ChannelUse use;
    use.y = noiseless_receive(h, x, power);
    for (std::size_t n = 0; n < use.y.size(); ++n)
        use.y[n] += noise[n];
    use.z = csign(use.y);
    return use;
}

ChannelUse transmit(const ChannelMatrix& h, std::span<const TxSymbol> x, double power,
                    RngStream& rng)
{
    const auto noise = sample_complex_gaussian(rng, h.rows());
    return transmit_deterministic(h, x, power, noise);
}

}  // namespace onebit
