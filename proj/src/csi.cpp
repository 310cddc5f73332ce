// SPDX-License-Identifier: Apache-2.0

#include "onebit/csi.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "onebit/probability.hpp"

namespace onebit {

void PilotConfig::validate() const
{
    if (!(pilot_power > 0.0) || !std::isfinite(pilot_power))
        throw std::invalid_argument("pilot power must be positive and finite");
    if (pilots < 1)
        throw std::invalid_argument("pilot count K must be at least 1, got " +
                                    std::to_string(pilots));
}

namespace {

struct VoteTally {
    std::vector<int> re, im;

    explicit VoteTally(std::size_t n) : re(n, 0), im(n, 0) {}

    void add(std::span<const ComplexSample> h, double amp, std::span<const ComplexSample> w)
    {
        for (std::size_t i = 0; i < h.size(); ++i) {
            const ComplexSample r = amp * h[i] + w[i];
            re[i] += sign_of(r.real());
            im[i] += sign_of(r.imag());
        }
    }

    CsiMatrix decide(std::size_t rows, std::size_t cols) const
    {
        CsiMatrix g(rows, cols);
        auto flat = g.flat();
        for (std::size_t i = 0; i < flat.size(); ++i)
            flat[i] = QuadSymbol(sum_sign(re[i]), sum_sign(im[i]));
        return g;
    }
};

}  // namespace

CsiMatrix estimate_csi(const ChannelMatrix& h, const PilotConfig& cfg, RngStream& rng)
{
    cfg.validate();
    const double amp = std::sqrt(cfg.pilot_power);
    VoteTally tally(h.flat().size());
    for (int k = 0; k < cfg.pilots; ++k) {
        const auto w = sample_complex_gaussian(rng, h.rows(), h.cols());
        tally.add(h.flat(), amp, w.flat());
    }
    return tally.decide(h.rows(), h.cols());
}

CsiMatrix estimate_csi_deterministic(const ChannelMatrix& h, double pilot_power,
                                     std::span<const ChannelMatrix> pilot_noise)
{
    PilotConfig{pilot_power, int(pilot_noise.size())}.validate();
    const double amp = std::sqrt(pilot_power);
    VoteTally tally(h.flat().size());
    for (const auto& w : pilot_noise) {
        if (w.rows() != h.rows() || w.cols() != h.cols())
            throw std::invalid_argument("pilot noise matrix dimensions differ from channel");
        tally.add(h.flat(), amp, w.flat());
    }
    return tally.decide(h.rows(), h.cols());
}

int majority_sign(std::span<const int> pilot_signs)
{
    long sum = 0;
    for (int s : pilot_signs) {
        if (s != 1 && s != -1)
            throw std::invalid_argument("pilot sign must be +1 or -1");
        sum += s;
    }
    return sum_sign(sum);
}

double p_eps_single(double pilot_power)
{
    if (!(pilot_power > 0.0))
        throw std::invalid_argument("pilot power must be positive");
    return 0.5 - std::atan(std::sqrt(pilot_power)) / std::numbers::pi;
}

double p_eps_majority(const PilotConfig& cfg)
{
    cfg.validate();
    const double p = p_eps_single(cfg.pilot_power);
    return binomial_upper_tail(cfg.pilots, (cfg.pilots + 1) / 2, p);
}

double p_eps_majority_exact(const PilotConfig& cfg)
{
    cfg.validate();
    const int k = cfg.pilots;
    const double amp = std::sqrt(cfg.pilot_power);
    // u = |h| / sigma is standard half-normal; each pilot errs w.p. Q(sqrt(Pp) u).
    auto integrand = [&](double u) {
        const double q = q_function(amp * u);
        double err = binomial_upper_tail(k, k / 2 + 1, q);
        if (k % 2 == 0)
            err += 0.5 * binomial_pmf(k, k / 2, q);
        return std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.5 * u * u) * err;
    };
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 61>::integrate(integrand, 0.0,
                                                std::numeric_limits<double>::infinity(), 15,
                                                1e-13);
}

}  // namespace onebit
