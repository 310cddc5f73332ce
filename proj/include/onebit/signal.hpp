// SPDX-License-Identifier: Apache-2.0
//
// Quantized-signal primitives shared by every part of the simulator.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace onebit {

using ComplexSample = std::complex<double>;

/// One symbol of {1+j, 1-j, -1+j, -1-j}, held as two sign bits.
class QuadSymbol {
public:
    constexpr QuadSymbol() = default;

    /// Both arguments must be exactly +1 or -1.
    constexpr QuadSymbol(int re, int im) : re_(check(re)), im_(check(im)) {}

    [[nodiscard]] constexpr int re() const { return re_; }
    [[nodiscard]] constexpr int im() const { return im_; }
    [[nodiscard]] ComplexSample value() const { return {double(re_), double(im_)}; }

    friend constexpr bool operator==(QuadSymbol, QuadSymbol) = default;

    static const QuadSymbol all[4];

private:
    static constexpr std::int8_t check(int v)
    {
        if (v != 1 && v != -1)
            throw std::invalid_argument("QuadSymbol component must be +1 or -1");
        return static_cast<std::int8_t>(v);
    }

    std::int8_t re_ = 1;
    std::int8_t im_ = 1;
};

inline constexpr QuadSymbol QuadSymbol::all[4] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

/// Unit-energy transmit symbol. Scheme 1 uses {+-1, +-j}; Scheme 2 uses
/// (+-1 +- j)/sqrt(2).
struct TxSymbol {
    double re = 0.0;
    double im = 0.0;

    [[nodiscard]] ComplexSample value() const { return {re, im}; }
};

using BitVector = std::vector<std::uint8_t>;

/// sign() with the a >= 0 -> +1 convention, also used to break every tie.
constexpr int sign_of(double a) { return a >= 0.0 ? 1 : -1; }
constexpr int sum_sign(long a) { return a >= 0 ? 1 : -1; }

/// Quadrant quantizer: csign(a + jb) = sign(a) + j sign(b).
inline QuadSymbol csign(ComplexSample c) { return {sign_of(c.real()), sign_of(c.imag())}; }

std::vector<QuadSymbol> csign(std::span<const ComplexSample> c);

/// Symbol i takes bits 2i (real) and 2i+1 (imaginary); bit 1 -> +1, bit 0 -> -1.
std::vector<QuadSymbol> bits_to_codeword(const BitVector& bits);
BitVector codeword_to_bits(std::span<const QuadSymbol> symbols);

/// "0110" -> {0,1,1,0}. Any other character is rejected.
BitVector bits_from_string(std::string_view text);
std::string bits_to_string(const BitVector& bits);

/// Dense row-major matrix; rows index receive antennas, columns transmit antennas.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<T> flat() { return data_; }
    std::span<const T> flat() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ChannelMatrix = Matrix<ComplexSample>;
using CsiMatrix = Matrix<QuadSymbol>;

}  // namespace onebit
