// SPDX-License-Identifier: Apache-2.0
//
// Single-shot encoders and decoders.
//
// TxBeamform (massive transmit array): 2N bits per use. Transmit antennas
// are split into N consecutive groups of L = M/N; group n beamforms symbol
// s_n toward receive antenna n using row n of the 1-bit CSI, and the
// receiver takes z as the decision.
//
// RxCombine (massive receive array): 2M bits per use. Antenna m sends
// s_m / sqrt(2); the receiver correlates z with column m of the CSI and
// takes the sign.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onebit/signal.hpp"

namespace onebit {

enum class SchemeKind { TxBeamform, RxCombine };

/// Only meaningful for RxCombine.
///   PaperLiteral:  s^R_m = sign(sum_n g^R_nm z^R_n),  s^I_m = sign(sum_n g^R_nm z^I_n)
///   MatchedFilter: full conjugate correlation, s_m = csign(sum_n conj(g_nm) z_n)
enum class DecoderVariant { PaperLiteral, MatchedFilter };

std::string_view to_string(SchemeKind kind);
std::string_view to_string(DecoderVariant variant);
SchemeKind parse_scheme(std::string_view text);
DecoderVariant parse_decoder(std::string_view text);

std::vector<TxSymbol> encode_tx_beamform(std::span<const QuadSymbol> codeword,
                                         const CsiMatrix& csi, std::size_t tx_antennas);

std::vector<QuadSymbol> decode_rx_identity(std::span<const QuadSymbol> z);

std::vector<TxSymbol> encode_identity_scaled(std::span<const QuadSymbol> codeword);

std::vector<QuadSymbol> decode_rx_combine(std::span<const QuadSymbol> z, const CsiMatrix& csi,
                                          DecoderVariant variant);

/// Integer correlation sums behind decode_rx_combine: entry 2m is the
/// real-quadrature statistic of symbol m, 2m+1 the imaginary one.
std::vector<long> rx_combine_statistics(std::span<const QuadSymbol> z, const CsiMatrix& csi,
                                        DecoderVariant variant);

}  // namespace onebit
