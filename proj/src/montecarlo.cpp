// SPDX-License-Identifier: Apache-2.0

#include "onebit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "onebit/channel.hpp"
#include "onebit/rng.hpp"

namespace onebit {

std::string Diagnostics::label() const
{
    if (!any())
        return "physical";
    std::string s = "diagnostic:";
    if (noise_off)
        s += " noise-off";
    if (exact_csi)
        s += " exact-csi";
    return s;
}

void SystemConfig::validate() const
{
    if (m_tx < 1 || n_rx < 1)
        throw std::invalid_argument("antenna counts M and N must be at least 1");
    if (scheme == SchemeKind::TxBeamform && m_tx % n_rx != 0)
        throw std::invalid_argument("N must divide M for tx-beamform (N=" +
                                    std::to_string(n_rx) + ", M=" + std::to_string(m_tx) + ")");
    if (!(power > 0.0) || !std::isfinite(power))
        throw std::invalid_argument("transmit power P must be positive and finite");
    pilot().validate();
    if (trials < 1)
        throw std::invalid_argument("trial count must be at least 1");
}

unsigned resolve_workers(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

/// Splits [0, count) into contiguous chunks, one per worker, and merges the
/// per-chunk accumulators. Accumulators hold integers only, so the merged
/// result is independent of the split.
template <class Acc, class Body>
Acc parallel_trials(std::uint64_t count, unsigned workers, Acc init, Body body)
{
    workers = std::max<unsigned>(1, std::min<std::uint64_t>(resolve_workers(workers), count));
    std::vector<Acc> parts(workers, init);
    auto run = [&](unsigned w) {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        for (std::uint64_t t = begin; t < end; ++t)
            body(t, parts[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
    }
    Acc total = init;
    for (const auto& p : parts)
        total.merge(p);
    return total;
}

TrialStats empty_stats(const SystemConfig& cfg)
{
    TrialStats s;
    const std::size_t bits = 2 * std::size_t(cfg.codeword_symbols());
    s.quadrature_errors.assign(bits, 0);
    s.joint_counts.assign(bits, {0, 0, 0, 0});
    s.config = cfg;
    s.even_pilot_ties = cfg.pilots % 2 == 0 && !cfg.diag.exact_csi;
    return s;
}

void record(TrialStats& acc, std::span<const QuadSymbol> sent, std::span<const QuadSymbol> got)
{
    const auto tx = codeword_to_bits(sent);
    const auto rx = codeword_to_bits(got);
    bool any = false;
    for (std::size_t i = 0; i < tx.size(); ++i) {
        const bool wrong = tx[i] != rx[i];
        any |= wrong;
        acc.quadrature_errors[i] += wrong;
        acc.bit_errors += wrong;
        ++acc.joint_counts[i][2 * tx[i] + rx[i]];
    }
    acc.block_errors += any;
    ++acc.trials;
}

ChannelUse use_channel(const SystemConfig& cfg, const ChannelMatrix& h,
                       std::span<const TxSymbol> x, std::uint64_t trial)
{
    if (cfg.diag.noise_off) {
        const std::vector<ComplexSample> zero(h.rows());
        return transmit_deterministic(h, x, cfg.power, zero);
    }
    RngStream noise(cfg.seed, trial, StreamRole::DataNoise);
    return transmit(h, x, cfg.power, noise);
}

std::vector<QuadSymbol> encode_decode(const SystemConfig& cfg, const ChannelMatrix& h,
                                      const CsiMatrix& g, std::span<const QuadSymbol> s,
                                      std::uint64_t trial)
{
    if (cfg.scheme == SchemeKind::TxBeamform) {
        const auto x = encode_tx_beamform(s, g, h.cols());
        return decode_rx_identity(use_channel(cfg, h, x, trial).z);
    }
    const auto x = encode_identity_scaled(s);
    return decode_rx_combine(use_channel(cfg, h, x, trial).z, g, cfg.decoder);
}

}  // namespace

void TrialStats::merge(const TrialStats& other)
{
    if (other.quadrature_errors.size() != quadrature_errors.size())
        throw std::invalid_argument("cannot merge statistics of different codeword widths");
    trials += other.trials;
    block_errors += other.block_errors;
    bit_errors += other.bit_errors;
    for (std::size_t i = 0; i < quadrature_errors.size(); ++i) {
        quadrature_errors[i] += other.quadrature_errors[i];
        for (int c = 0; c < 4; ++c)
            joint_counts[i][c] += other.joint_counts[i][c];
    }
}

void TrialStats::finalize()
{
    const std::uint64_t bits = trials * quadrature_errors.size();
    block_error_rate = trials ? double(block_errors) / double(trials) : 0.0;
    bit_error_rate = bits ? double(bit_errors) / double(bits) : 0.0;
    block_ci = wilson_interval(block_errors, trials);
    bit_ci = wilson_interval(bit_errors, bits);
}

BitVector draw_message(std::uint64_t seed, std::uint64_t trial, std::size_t bits)
{
    RngStream rng(seed, trial, StreamRole::Message);
    BitVector out(bits);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < bits; ++i) {
        if (i % 64 == 0)
            word = rng();
        out[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
    }
    return out;
}

TrialStats run_trials(const SystemConfig& cfg)
{
    cfg.validate();
    const auto pilot = cfg.pilot();
    auto stats = parallel_trials(cfg.trials, cfg.workers, empty_stats(cfg),
                                 [&](std::uint64_t t, TrialStats& acc) {
        RngStream chan(cfg.seed, t, StreamRole::Channel);
        const auto h = sample_complex_gaussian(chan, std::size_t(cfg.n_rx), std::size_t(cfg.m_tx));
        CsiMatrix g;
        if (cfg.diag.exact_csi) {
            g = CsiMatrix(h.rows(), h.cols());
            std::ranges::transform(h.flat(), g.flat().begin(),
                                   [](ComplexSample v) { return csign(v); });
        } else {
            RngStream pilots(cfg.seed, t, StreamRole::PilotNoise);
            g = estimate_csi(h, pilot, pilots);
        }
        const auto s = bits_to_codeword(draw_message(cfg.seed, t, acc.bit_positions()));
        record(acc, s, encode_decode(cfg, h, g, s, t));
    });
    stats.config = cfg;
    stats.finalize();
    return stats;
}

TrialStats run_conditional_trials(const SystemConfig& cfg, const ChannelMatrix& h,
                                  const CsiMatrix& g, std::span<const QuadSymbol> s)
{
    cfg.validate();
    if (h.rows() != std::size_t(cfg.n_rx) || h.cols() != std::size_t(cfg.m_tx))
        throw std::invalid_argument("fixed channel dimensions differ from configuration");
    if (g.rows() != h.rows() || g.cols() != h.cols())
        throw std::invalid_argument("fixed CSI dimensions differ from channel");
    if (s.size() != std::size_t(cfg.codeword_symbols()))
        throw std::invalid_argument("fixed codeword length differs from configuration");
    auto stats = parallel_trials(cfg.trials, cfg.workers, empty_stats(cfg),
                                 [&](std::uint64_t t, TrialStats& acc) {
        record(acc, s, encode_decode(cfg, h, g, s, t));
    });
    stats.config = cfg;
    stats.finalize();
    return stats;
}

double plug_in_mutual_information(const std::array<std::uint64_t, 4>& counts)
{
    const double n = double(counts[0] + counts[1] + counts[2] + counts[3]);
    if (n == 0.0)
        return 0.0;
    const double px[2] = {double(counts[0] + counts[1]), double(counts[2] + counts[3])};
    const double py[2] = {double(counts[0] + counts[2]), double(counts[1] + counts[3])};
    double mi = 0.0;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const double c = double(counts[2 * x + y]);
            if (c > 0.0)
                mi += c / n * std::log2(c * n / (px[x] * py[y]));
        }
    }
    return std::max(0.0, mi);
}

TrialStats estimate_mutual_information(const SystemConfig& cfg)
{
    auto stats = run_trials(cfg);
    double mi = 0.0;
    for (const auto& c : stats.joint_counts)
        mi += std::min(1.0, plug_in_mutual_information(c));
    stats.mi_bits = mi;
    return stats;
}

double fano_floor(const TrialStats& stats)
{
    return double(stats.bit_positions()) * (1.0 - binary_entropy(stats.bit_error_rate));
}

namespace {

struct Counter {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    void merge(const Counter& o)
    {
        samples += o.samples;
        hits += o.hits;
    }
};

}  // namespace

PilotErrorStats estimate_pilot_error(const PilotConfig& pilot, std::uint64_t samples,
                                     std::uint64_t seed, unsigned workers)
{
    pilot.validate();
    if (samples < 1)
        throw std::invalid_argument("sample count must be at least 1");
    const std::uint64_t channels = (samples + 1) / 2;
    const auto c = parallel_trials(channels, workers, Counter{},
                                   [&](std::uint64_t t, Counter& acc) {
        RngStream chan(seed, t, StreamRole::Channel);
        RngStream noise(seed, t, StreamRole::PilotNoise);
        const auto h = sample_complex_gaussian(chan, 1, 1);
        const auto g = estimate_csi(h, pilot, noise);
        const QuadSymbol truth = csign(h(0, 0));
        acc.samples += 2;
        acc.hits += (g(0, 0).re() != truth.re()) + (g(0, 0).im() != truth.im());
    });
    PilotErrorStats out;
    out.pilot = pilot;
    out.samples = c.samples;
    out.errors = c.hits;
    out.seed = seed;
    out.rate = double(c.hits) / double(c.samples);
    out.ci = wilson_interval(c.hits, c.samples);
    out.p_formula = p_eps_majority(pilot);
    out.p_exact = p_eps_majority_exact(pilot);
    out.even_pilot_ties = pilot.even_pilots();
    return out;
}

MajorityWrongStats estimate_majority_wrong(const PilotConfig& pilot, int n_rx,
                                           std::uint64_t samples, std::uint64_t seed,
                                           unsigned workers)
{
    pilot.validate();
    if (n_rx < 1)
        throw std::invalid_argument("N must be at least 1");
    if (samples < 1)
        throw std::invalid_argument("sample count must be at least 1");
    const int threshold = (n_rx + 1) / 2;
    const auto c = parallel_trials((samples + 1) / 2, workers, Counter{},
                                   [&](std::uint64_t t, Counter& acc) {
        RngStream chan(seed, t, StreamRole::Channel);
        RngStream noise(seed, t, StreamRole::PilotNoise);
        const auto h = sample_complex_gaussian(chan, std::size_t(n_rx), 1);
        const auto g = estimate_csi(h, pilot, noise);
        int wrong_re = 0, wrong_im = 0;
        for (int n = 0; n < n_rx; ++n) {
            const QuadSymbol truth = csign(h(n, 0));
            wrong_re += g(n, 0).re() != truth.re();
            wrong_im += g(n, 0).im() != truth.im();
        }
        acc.samples += 2;
        acc.hits += (wrong_re >= threshold) + (wrong_im >= threshold);
    });
    MajorityWrongStats out;
    out.samples = c.samples;
    out.events = c.hits;
    out.rate = double(c.hits) / double(c.samples);
    out.ci = wilson_interval(c.hits, c.samples);
    return out;
}

}  // namespace onebit
