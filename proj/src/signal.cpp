// SPDX-License-Identifier: Apache-2.0

#include "onebit/signal.hpp"

#include <algorithm>

namespace onebit {

std::vector<QuadSymbol> csign(std::span<const ComplexSample> c)
{
    std::vector<QuadSymbol> out;
    out.reserve(c.size());
    std::ranges::transform(c, std::back_inserter(out), [](ComplexSample v) { return csign(v); });
    return out;
}

std::vector<QuadSymbol> bits_to_codeword(const BitVector& bits)
{
    if (bits.size() % 2 != 0)
        throw std::invalid_argument("bit vector length must be even, got " +
                                    std::to_string(bits.size()));
    std::vector<QuadSymbol> out;
    out.reserve(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        if (bits[i] > 1 || bits[i + 1] > 1)
            throw std::invalid_argument("bit values must be 0 or 1");
        out.emplace_back(2 * bits[i] - 1, 2 * bits[i + 1] - 1);
    }
    return out;
}

BitVector codeword_to_bits(std::span<const QuadSymbol> symbols)
{
    BitVector out;
    out.reserve(2 * symbols.size());
    for (auto s : symbols) {
        out.push_back(s.re() > 0 ? 1 : 0);
        out.push_back(s.im() > 0 ? 1 : 0);
    }
    return out;
}

BitVector bits_from_string(std::string_view text)
{
    BitVector out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        out.push_back(ch == '1' ? 1 : 0);
    }
    return out;
}

std::string bits_to_string(const BitVector& bits)
{
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits)
        out.push_back(b ? '1' : '0');
    return out;
}

}  // namespace onebit
