// SPDX-License-Identifier: Apache-2.0
//
// Seeded trial engine. Every trial draws from its own (seed, trial, role)
// streams and reports integer counters, so the result of a run is a pure
// function of the configuration and does not depend on the worker count.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onebit/csi.hpp"
#include "onebit/probability.hpp"
#include "onebit/schemes.hpp"
#include "onebit/signal.hpp"

namespace onebit {

/// Non-physical switches for invariant tests. Rows produced with any of
/// these set are labeled as diagnostic.
struct Diagnostics {
    bool noise_off = false;  // data noise w = 0
    bool exact_csi = false;  // G = csign(H), no pilots

    [[nodiscard]] bool any() const { return noise_off || exact_csi; }
    [[nodiscard]] std::string label() const;
};

enum class CsiSide { Transmitter, Receiver };

struct SystemConfig {
    SchemeKind scheme = SchemeKind::TxBeamform;
    DecoderVariant decoder = DecoderVariant::PaperLiteral;
    int m_tx = 1;
    int n_rx = 1;
    double power = 1.0;
    double pilot_power = 1.0;
    int pilots = 1;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    Diagnostics diag;
    unsigned workers = 1;  // 0 = hardware concurrency; never changes results

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;

    [[nodiscard]] PilotConfig pilot() const { return {pilot_power, pilots}; }
    [[nodiscard]] CsiSide csi_side() const
    {
        return scheme == SchemeKind::TxBeamform ? CsiSide::Transmitter : CsiSide::Receiver;
    }
    /// Symbols per codeword: N for TxBeamform, M for RxCombine.
    [[nodiscard]] int codeword_symbols() const
    {
        return scheme == SchemeKind::TxBeamform ? n_rx : m_tx;
    }
};

struct TrialStats {
    std::uint64_t trials = 0;
    std::uint64_t block_errors = 0;
    std::uint64_t bit_errors = 0;
    /// Errors per bit position: 2i real, 2i+1 imaginary quadrature of symbol i.
    std::vector<std::uint64_t> quadrature_errors;
    /// Per bit position, counts of (sent, decoded) in order 00, 01, 10, 11.
    std::vector<std::array<std::uint64_t, 4>> joint_counts;

    double block_error_rate = 0.0;
    double bit_error_rate = 0.0;
    Interval block_ci;
    Interval bit_ci;

    /// Sum over bit positions of the plug-in I(sent bit; decoded bit), in
    /// bits per channel use. Filled by estimate_mutual_information.
    std::optional<double> mi_bits;

    // Metadata echo.
    SystemConfig config;
    bool even_pilot_ties = false;  // K even: the binomial formula over-counts ties
    std::string mi_estimator = "per-bit plug-in (sum over bit positions)";

    [[nodiscard]] std::size_t bit_positions() const { return quadrature_errors.size(); }

    void merge(const TrialStats& other);
    /// Recompute rates and intervals from the counters.
    void finalize();
};

/// Draws the i.i.d. message bits of one trial.
BitVector draw_message(std::uint64_t seed, std::uint64_t trial, std::size_t bits);

/// End-to-end: per trial draw H, estimate G from fresh pilots, draw a
/// uniform message, encode, one channel use, decode, count errors.
TrialStats run_trials(const SystemConfig& cfg);

/// Noise-only randomness: H, G and the codeword are held fixed.
TrialStats run_conditional_trials(const SystemConfig& cfg, const ChannelMatrix& h,
                                  const CsiMatrix& g, std::span<const QuadSymbol> s);

/// run_trials with `mi_bits` populated.
TrialStats estimate_mutual_information(const SystemConfig& cfg);

/// Plug-in mutual information of one 2x2 joint count table, in bits.
double plug_in_mutual_information(const std::array<std::uint64_t, 4>& counts);

/// 2W (1 - H_b(bit error rate)), W = codeword symbols.
double fano_floor(const TrialStats& stats);

struct PilotErrorStats {
    PilotConfig pilot;
    std::uint64_t samples = 0;  // estimated quadratures
    std::uint64_t errors = 0;
    std::uint64_t seed = 0;
    double rate = 0.0;
    Interval ci;
    double p_formula = 0.0;  // p_eps_majority
    double p_exact = 0.0;    // p_eps_majority_exact
    bool even_pilot_ties = false;

    [[nodiscard]] double standard_error(double p) const
    {
        return binomial_standard_error(p, samples);
    }
};

/// Empirical per-quadrature error of estimate_csi against sign(h).
/// `samples` quadratures are drawn as samples/2 scalar channels (odd values
/// round up).
PilotErrorStats estimate_pilot_error(const PilotConfig& pilot, std::uint64_t samples,
                                     std::uint64_t seed, unsigned workers = 1);

struct MajorityWrongStats {
    std::uint64_t samples = 0;
    std::uint64_t events = 0;
    double rate = 0.0;
    Interval ci;
};

/// Frequency of the event "at least ceil(N/2) of N estimated CSI quadratures
/// in one column are wrong". Each trial estimates an N x 1 column and yields
/// two samples (real and imaginary quadrature).
MajorityWrongStats estimate_majority_wrong(const PilotConfig& pilot, int n_rx,
                                           std::uint64_t samples, std::uint64_t seed,
                                           unsigned workers = 1);

/// Resolves 0 to std::thread::hardware_concurrency().
unsigned resolve_workers(unsigned requested);

}  // namespace onebit
