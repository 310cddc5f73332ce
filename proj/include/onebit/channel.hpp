// SPDX-License-Identifier: Apache-2.0
//
// Forward model y = sqrt(P/M) H x + w, z = csign(y).

#pragma once

#include <span>
#include <vector>

#include "onebit/rng.hpp"
#include "onebit/signal.hpp"

namespace onebit {

struct ChannelUse {
    std::vector<ComplexSample> y;  // pre-quantization receive samples
    std::vector<QuadSymbol> z;     // csign(y)
};

/// Draws w from `rng` (CN(0,1) per receive antenna) and calls transmit_deterministic.
ChannelUse transmit(const ChannelMatrix& h, std::span<const TxSymbol> x, double power,
                    RngStream& rng);

/// Same as transmit with caller-supplied noise, |noise| = rows of h.
ChannelUse transmit_deterministic(const ChannelMatrix& h, std::span<const TxSymbol> x,
                                  double power, std::span<const ComplexSample> noise);

/// Noise-free sqrt(P/M) H x, shared by the forward model and the exact oracles.
std::vector<ComplexSample> noiseless_receive(const ChannelMatrix& h, std::span<const TxSymbol> x,
                                             double power);

}  // namespace onebit
