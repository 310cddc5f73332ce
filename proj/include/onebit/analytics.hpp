// SPDX-License-Identifier: Apache-2.0
//
// Closed-form error analysis for both schemes, plus exact error
// probabilities conditioned on a fixed (H, G, s) that the Monte-Carlo
// engine is validated against.

#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "onebit/schemes.hpp"
#include "onebit/signal.hpp"

namespace onebit {

/// Right-hand side of a bound. `value` is the sum of `components`; values
/// above 1 are kept and flagged as vacuous rather than clamped.
struct BoundReport {
    double value = 0.0;
    std::vector<double> components;
    std::map<std::string, double> params;

    [[nodiscard]] bool vacuous() const { return value > 1.0; }
};

/// Per-quadrature variance of noise plus inter-group interference seen by
/// one receive antenna in TxBeamform: (P(N-1) + N) / (2N).
double scheme1_noise_var(double power, int n_rx);

/// Per-quadrature variance of noise plus the other M-1 streams in RxCombine:
/// (P / 2M)(2M - 1)/2 + 1/2.
double scheme2_noise_var(double power, int m_tx);

/// E|h^R| for h^R ~ N(0, 1/2), i.e. 1/sqrt(pi).
double mean_abs_halfgaussian();

/// sqrt(P/M) E|h^R| / sigma, sigma^2 = scheme1_noise_var(P, N).
double scheme1_beta(double power, int m_tx, int n_rx);

/// 2N sum_{k=0}^{L} C(L,k) pe^k (1-pe)^(L-k) Q(beta (L - 2k)), L = M/N,
/// pe = p_eps_majority(Pp, K). components[k] is the k-th summand times 2N.
BoundReport scheme1_union_bound(double power, double pilot_power, int pilots, int m_tx,
                                int n_rx);

/// Same with an explicit CSI error probability.
BoundReport scheme1_union_bound_with_pe(double power, double p_eps, int m_tx, int n_rx);

/// 2N [ sum_{k<=L/2} C(L,k) pe^k (1-pe)^(L-k) exp(-beta^2 (L-2k)^2 / 2)
///      + sum_{k>L/2} C(L,k) pe^k (1-pe)^(L-k) ].
BoundReport scheme1_chernoff_bound(double power, double pilot_power, int pilots, int m_tx,
                                   int n_rx);
BoundReport scheme1_chernoff_bound_with_pe(double power, double p_eps, int m_tx, int n_rx);

/// 2M P(Binomial(N, pe) >= ceil(N/2)); for even N the tie j = N/2 counts.
/// Requires 0 <= pe < 1/2.
BoundReport scheme2_asymptotic_error(double p_eps, int n_rx, int m_tx);

/// The per-component kernel of scheme2_asymptotic_error (no 2M factor).
double majority_wrong_probability(double p_eps, int n_rx);

/// M (1 - 2 pe).
double effective_tx_antennas(double m_tx, double p_eps);

/// P(decoded codeword != s | H, G, s) for TxBeamform. Each receive
/// quadrature is a deterministic signal a plus N(0, 1/2) noise, so it errs
/// with probability Q(s a sqrt 2) independently of the others.
double exact_cond_error_scheme1(const ChannelMatrix& h, const CsiMatrix& g,
                                std::span<const QuadSymbol> s, double power);

/// Per-quadrature error probabilities behind exact_cond_error_scheme1,
/// ordered 2n (real), 2n+1 (imaginary).
std::vector<double> cond_component_errors_scheme1(const ChannelMatrix& h, const CsiMatrix& g,
                                                  std::span<const QuadSymbol> s, double power);

/// P(decoded codeword != s | H, G, s) for RxCombine. Given H and s the N
/// quantized outputs are independent, so the joint law of the 2M integer
/// combining statistics is built by convolving one antenna at a time.
/// Exact for every N; the number of reachable states grows like
/// (2N+1)^(2M) at worst, and more than kMaxDpStates throws std::length_error.
double exact_cond_error_scheme2(const ChannelMatrix& h, const CsiMatrix& g,
                                std::span<const QuadSymbol> s, double power,
                                DecoderVariant variant);

inline constexpr std::size_t kMaxDpStates = std::size_t{1} << 22;

}  // namespace onebit
