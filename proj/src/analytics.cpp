// SPDX-License-Identifier: Apache-2.0

#include "onebit/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "onebit/channel.hpp"
#include "onebit/csi.hpp"
#include "onebit/probability.hpp"

namespace onebit {

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

void require_antennas(int m_tx, int n_rx)
{
    if (m_tx < 1 || n_rx < 1)
        throw std::invalid_argument("antenna counts must be at least 1");
}

int group_size(int m_tx, int n_rx)
{
    require_antennas(m_tx, n_rx);
    if (m_tx % n_rx != 0)
        throw std::invalid_argument("N must divide M (N=" + std::to_string(n_rx) +
                                    ", M=" + std::to_string(m_tx) + ")");
    return m_tx / n_rx;
}

void require_pe(double p_eps)
{
    if (!(p_eps >= 0.0 && p_eps <= 1.0))
        throw std::invalid_argument("CSI error probability must lie in [0, 1]");
}

BoundReport finish(std::vector<double> components, std::map<std::string, double> params)
{
    BoundReport r;
    for (double c : components)
        r.value += c;
    r.components = std::move(components);
    r.params = std::move(params);
    return r;
}

}  // namespace

double scheme1_noise_var(double power, int n_rx)
{
    require_positive(power, "power");
    require_antennas(1, n_rx);
    return (power * (n_rx - 1) + n_rx) / (2.0 * n_rx);
}

double scheme2_noise_var(double power, int m_tx)
{
    require_positive(power, "power");
    require_antennas(m_tx, 1);
    return power / (2.0 * m_tx) * (2.0 * m_tx - 1.0) / 2.0 + 0.5;
}

double mean_abs_halfgaussian() { return 1.0 / std::sqrt(std::numbers::pi); }

double scheme1_beta(double power, int m_tx, int n_rx)
{
    require_positive(power, "power");
    require_antennas(m_tx, n_rx);
    return std::sqrt(power / m_tx) * mean_abs_halfgaussian() /
           std::sqrt(scheme1_noise_var(power, n_rx));
}

BoundReport scheme1_union_bound_with_pe(double power, double p_eps, int m_tx, int n_rx)
{
    const int L = group_size(m_tx, n_rx);
    require_pe(p_eps);
    const double beta = scheme1_beta(power, m_tx, n_rx);
    std::vector<double> terms(L + 1);
    for (int k = 0; k <= L; ++k)
        terms[k] = 2.0 * n_rx * binomial_pmf(L, k, p_eps) * q_function(beta * (L - 2 * k));
    return finish(std::move(terms), {{"P", power},
                                     {"p_eps", p_eps},
                                     {"M", m_tx},
                                     {"N", n_rx},
                                     {"L", L},
                                     {"beta", beta}});
}

BoundReport scheme1_union_bound(double power, double pilot_power, int pilots, int m_tx,
                                int n_rx)
{
    const double pe = p_eps_majority({pilot_power, pilots});
    auto r = scheme1_union_bound_with_pe(power, pe, m_tx, n_rx);
    r.params["Pp"] = pilot_power;
    r.params["K"] = pilots;
    return r;
}

BoundReport scheme1_chernoff_bound_with_pe(double power, double p_eps, int m_tx, int n_rx)
{
    const int L = group_size(m_tx, n_rx);
    require_pe(p_eps);
    const double beta = scheme1_beta(power, m_tx, n_rx);
    std::vector<double> terms(L + 1);
    for (int k = 0; k <= L; ++k) {
        const double w = binomial_pmf(L, k, p_eps);
        const double d = double(L - 2 * k);
        terms[k] = 2.0 * n_rx * (2 * k <= L ? w * std::exp(-beta * beta * d * d / 2.0) : w);
    }
    return finish(std::move(terms), {{"P", power},
                                     {"p_eps", p_eps},
                                     {"M", m_tx},
                                     {"N", n_rx},
                                     {"L", L},
                                     {"beta", beta}});
}

BoundReport scheme1_chernoff_bound(double power, double pilot_power, int pilots, int m_tx,
                                   int n_rx)
{
    const double pe = p_eps_majority({pilot_power, pilots});
    auto r = scheme1_chernoff_bound_with_pe(power, pe, m_tx, n_rx);
    r.params["Pp"] = pilot_power;
    r.params["K"] = pilots;
    return r;
}

double majority_wrong_probability(double p_eps, int n_rx)
{
    require_antennas(1, n_rx);
    require_pe(p_eps);
    return binomial_upper_tail(n_rx, (n_rx + 1) / 2, p_eps);
}

BoundReport scheme2_asymptotic_error(double p_eps, int n_rx, int m_tx)
{
    require_antennas(m_tx, n_rx);
    if (!(p_eps >= 0.0 && p_eps < 0.5))
        throw std::invalid_argument("CSI error probability must lie in [0, 1/2)");
    std::vector<double> terms;
    for (int j = (n_rx + 1) / 2; j <= n_rx; ++j)
        terms.push_back(2.0 * m_tx * binomial_pmf(n_rx, j, p_eps));
    return finish(std::move(terms), {{"p_eps", p_eps}, {"M", m_tx}, {"N", n_rx}});
}

double effective_tx_antennas(double m_tx, double p_eps)
{
    if (!(p_eps >= 0.0 && p_eps < 0.5))
        throw std::invalid_argument("CSI error probability must lie in [0, 1/2)");
    return m_tx * (1.0 - 2.0 * p_eps);
}

std::vector<double> cond_component_errors_scheme1(const ChannelMatrix& h, const CsiMatrix& g,
                                                  std::span<const QuadSymbol> s, double power)
{
    if (h.rows() != s.size())
        throw std::invalid_argument("codeword length must equal receive antenna count");
    const auto x = encode_tx_beamform(s, g, h.cols());
    const auto a = noiseless_receive(h, x, power);
    std::vector<double> err(2 * s.size());
    for (std::size_t n = 0; n < s.size(); ++n) {
        err[2 * n] = q_function(s[n].re() * a[n].real() * std::numbers::sqrt2);
        err[2 * n + 1] = q_function(s[n].im() * a[n].imag() * std::numbers::sqrt2);
    }
    return err;
}

double exact_cond_error_scheme1(const ChannelMatrix& h, const CsiMatrix& g,
                                std::span<const QuadSymbol> s, double power)
{
    double success = 1.0;
    for (double e : cond_component_errors_scheme1(h, g, s, power))
        success *= 1.0 - e;
    return 1.0 - success;
}

double exact_cond_error_scheme2(const ChannelMatrix& h, const CsiMatrix& g,
                                std::span<const QuadSymbol> s, double power,
                                DecoderVariant variant)
{
    const std::size_t n_rx = h.rows(), m_tx = h.cols();
    if (s.size() != m_tx)
        throw std::invalid_argument("codeword length must equal transmit antenna count");
    if (g.rows() != n_rx || g.cols() != m_tx)
        throw std::invalid_argument("CSI matrix dimensions differ from channel");

    const auto x = encode_identity_scaled(s);
    const auto a = noiseless_receive(h, x, power);

    using State = std::vector<long>;
    std::map<State, double> dist{{State(2 * m_tx, 0), 1.0}};
    for (std::size_t n = 0; n < n_rx; ++n) {
        // P(z = +-1) on each quadrature is Q(-+a sqrt 2).
        const double ar = a[n].real() * std::numbers::sqrt2;
        const double ai = a[n].imag() * std::numbers::sqrt2;
        std::map<State, double> next;
        for (int zr : {1, -1}) {
            for (int zi : {1, -1}) {
                const double p = q_function(-zr * ar) * q_function(-zi * ai);
                if (p == 0.0)
                    continue;
                State step(2 * m_tx);
                for (std::size_t m = 0; m < m_tx; ++m) {
                    const int gr = g(n, m).re(), gi = g(n, m).im();
                    if (variant == DecoderVariant::PaperLiteral) {
                        step[2 * m] = gr * zr;
                        step[2 * m + 1] = gr * zi;
                    } else {
                        step[2 * m] = gr * zr + gi * zi;
                        step[2 * m + 1] = gr * zi - gi * zr;
                    }
                }
                for (const auto& [state, q] : dist) {
                    State moved = state;
                    for (std::size_t i = 0; i < moved.size(); ++i)
                        moved[i] += step[i];
                    next[std::move(moved)] += q * p;
                }
            }
        }
        if (next.size() > kMaxDpStates)
            throw std::length_error("combining-statistic state space exceeds the DP budget");
        dist = std::move(next);
    }

    double failure = 0.0;
    for (const auto& [state, q] : dist) {
        bool ok = true;
        for (std::size_t m = 0; m < m_tx && ok; ++m)
            ok = sum_sign(state[2 * m]) == s[m].re() && sum_sign(state[2 * m + 1]) == s[m].im();
        if (!ok)
            failure += q;
    }
    return std::min(failure, 1.0);
}

}  // namespace onebit
