// SPDX-License-Identifier: Apache-2.0

#include "onebit/schemes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace onebit {

std::string_view to_string(SchemeKind kind)
{
    return kind == SchemeKind::TxBeamform ? "tx-beamform" : "rx-combine";
}

std::string_view to_string(DecoderVariant variant)
{
    return variant == DecoderVariant::PaperLiteral ? "paper" : "matched";
}

SchemeKind parse_scheme(std::string_view text)
{
    if (text == "tx-beamform")
        return SchemeKind::TxBeamform;
    if (text == "rx-combine")
        return SchemeKind::RxCombine;
    throw std::invalid_argument("unknown scheme '" + std::string(text) +
                                "' (expected tx-beamform or rx-combine)");
}

DecoderVariant parse_decoder(std::string_view text)
{
    if (text == "paper")
        return DecoderVariant::PaperLiteral;
    if (text == "matched")
        return DecoderVariant::MatchedFilter;
    throw std::invalid_argument("unknown decoder '" + std::string(text) +
                                "' (expected paper or matched)");
}

std::vector<TxSymbol> encode_tx_beamform(std::span<const QuadSymbol> codeword,
                                         const CsiMatrix& csi, std::size_t tx_antennas)
{
    const std::size_t n_rx = codeword.size();
    if (n_rx == 0 || tx_antennas == 0)
        throw std::invalid_argument("antenna counts must be positive");
    if (tx_antennas % n_rx != 0)
        throw std::invalid_argument("N must divide M (N=" + std::to_string(n_rx) +
                                    ", M=" + std::to_string(tx_antennas) + ")");
    if (csi.rows() != n_rx || csi.cols() != tx_antennas)
        throw std::invalid_argument("CSI matrix must be N x M");

    const std::size_t group = tx_antennas / n_rx;
    std::vector<TxSymbol> x(tx_antennas);
    for (std::size_t m = 0; m < tx_antennas; ++m) {
        const std::size_t n = m / group;
        const QuadSymbol g = csi(n, m);
        const QuadSymbol s = codeword[n];
        // [xR; xI] = 1/2 [gR gI; -gI gR] [sR; sI]; one entry is 0, the other +-1.
        x[m].re = double((g.re() * s.re() + g.im() * s.im()) / 2);
        x[m].im = double((g.re() * s.im() - g.im() * s.re()) / 2);
    }
    return x;
}

std::vector<QuadSymbol> decode_rx_identity(std::span<const QuadSymbol> z)
{
    return {z.begin(), z.end()};
}

std::vector<TxSymbol> encode_identity_scaled(std::span<const QuadSymbol> codeword)
{
    const double a = 1.0 / std::numbers::sqrt2;
    std::vector<TxSymbol> x;
    x.reserve(codeword.size());
    for (auto s : codeword)
        x.push_back({a * s.re(), a * s.im()});
    return x;
}

std::vector<long> rx_combine_statistics(std::span<const QuadSymbol> z, const CsiMatrix& csi,
                                        DecoderVariant variant)
{
    if (z.size() != csi.rows())
        throw std::invalid_argument("received vector length must equal CSI row count");
    const std::size_t m_tx = csi.cols();
    std::vector<long> stat(2 * m_tx, 0);
    for (std::size_t n = 0; n < z.size(); ++n) {
        const int zr = z[n].re(), zi = z[n].im();
        auto row = csi.row(n);
        for (std::size_t m = 0; m < m_tx; ++m) {
            const int gr = row[m].re(), gi = row[m].im();
            if (variant == DecoderVariant::PaperLiteral) {
                stat[2 * m] += gr * zr;
                stat[2 * m + 1] += gr * zi;
            } else {
                stat[2 * m] += gr * zr + gi * zi;
                stat[2 * m + 1] += gr * zi - gi * zr;
            }
        }
    }
    return stat;
}

std::vector<QuadSymbol> decode_rx_combine(std::span<const QuadSymbol> z, const CsiMatrix& csi,
                                          DecoderVariant variant)
{
    const auto stat = rx_combine_statistics(z, csi, variant);
    std::vector<QuadSymbol> s_hat;
    s_hat.reserve(csi.cols());
    for (std::size_t m = 0; m < csi.cols(); ++m)
        s_hat.emplace_back(sum_sign(stat[2 * m]), sum_sign(stat[2 * m + 1]));
    return s_hat;
}

}  // namespace onebit
