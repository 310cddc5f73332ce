// SPDX-License-Identifier: Apache-2.0
//
// K-pilot 1-bit channel estimation with per-quadrature majority vote, and
// the matching pilot-error probabilities.

#pragma once

#include <span>

#include "onebit/rng.hpp"
#include "onebit/signal.hpp"

namespace onebit {

struct PilotConfig {
    double pilot_power = 1.0;  // P_p, linear
    int pilots = 1;            // K

    void validate() const;
    [[nodiscard]] bool even_pilots() const { return pilots % 2 == 0; }
};

/// G = csign(sum_k csign(sqrt(Pp) H + W_k)), one fresh CN(0,1) W_k per pilot.
/// Each entry is estimated independently (one orthogonal slot per antenna
/// per pilot round). Zero vote sums resolve to +1.
CsiMatrix estimate_csi(const ChannelMatrix& h, const PilotConfig& cfg, RngStream& rng);

/// Same estimator with the K noise matrices supplied by the caller.
CsiMatrix estimate_csi_deterministic(const ChannelMatrix& h, double pilot_power,
                                     std::span<const ChannelMatrix> pilot_noise);

/// Majority of quantized pilot signs for one quadrature; a tie gives +1.
int majority_sign(std::span<const int> pilot_signs);

/// 1/2 - arctan(sqrt(Pp))/pi: one pilot disagrees with sign(h) on a quadrature.
double p_eps_single(double pilot_power);

/// Binomial majority formula: sum_{j=ceil(K/2)}^{K} C(K,j) p^j (1-p)^(K-j),
/// p = p_eps_single. For even K the tie term is counted as an error. The
/// formula treats pilot errors as independent.
double p_eps_majority(const PilotConfig& cfg);

/// Exact per-quadrature error of estimate_csi. All K pilots see the same
/// channel coefficient, so the vote is averaged over |h| by quadrature; even-K
/// ties count as errors half of the time (sign(0) = +1). Equals
/// p_eps_majority for K = 1 and exceeds it for K >= 3.
double p_eps_majority_exact(const PilotConfig& cfg);

}  // namespace onebit
