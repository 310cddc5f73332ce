// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: scenario flags, sweeps, CSV/JSON emission.
//
//   onebit-mimo simulate    --scheme S --m M --n N --power P --pilot-power Pp --pilots K
//                           --trials T --seed X [--m-list a,b] [--n-list a,b]
//                           [--sweep NAME=v1,v2] [--decoder paper|matched]
//                           [--format csv|json] [--out PATH] [--workers W] [--db]
//   onebit-mimo bound       (scenario flags, no --trials/--seed)
//   onebit-mimo mi          (same flags as simulate)
//   onebit-mimo pilot-error --pilot-power Pp --pilots K --samples S --seed X
//
// Exit codes: 0 success, 2 argument error, 3 runtime or I/O error.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace onebit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

inline constexpr const char* kWorkersEnv = "ONEBIT_MIMO_WORKERS";

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

/// One parameter swept over a list of values.
struct SweepSpec {
    enum class Param { M, N, P, Pp, K, Trials };
    Param param;
    std::vector<double> values;

    static SweepSpec parse(std::string_view name, std::string_view list);
};

std::string_view to_string(SweepSpec::Param p);

struct ResultRow {
    std::string scheme;
    std::string decoder;
    std::int64_t m = 0;
    std::int64_t n = 0;
    double p = 0.0;
    double pp = 0.0;
    std::int64_t k = 0;
    std::optional<std::int64_t> trials;
    std::optional<std::int64_t> seed;
    std::optional<std::int64_t> block_errors;
    std::optional<double> block_error_rate;
    std::optional<double> bit_error_rate;
    std::optional<double> ci95_halfwidth;
    std::optional<double> bound_union;
    std::optional<double> bound_chernoff;
    std::optional<double> bound_asymptotic;
    double p_eps = 0.0;
    std::optional<double> mi_bits_per_use;

    static const std::vector<std::string>& header();
    [[nodiscard]] std::vector<Cell> cells() const;
    static ResultRow from_cells(const std::vector<std::string>& fields);

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct MiRow {
    std::string scheme;
    std::string decoder;
    std::int64_t m = 0;
    std::int64_t n = 0;
    double p = 0.0;
    double pp = 0.0;
    std::int64_t k = 0;
    std::int64_t trials = 0;
    std::int64_t seed = 0;
    double bit_error_rate = 0.0;
    double bit_ci95_halfwidth = 0.0;
    double mi_bits_per_use = 0.0;
    double fano_floor = 0.0;
    std::int64_t capacity_limit = 0;
    std::string mi_estimator;
    std::string regime;  // "physical" or the diagnostic label

    static const std::vector<std::string>& header();
    [[nodiscard]] std::vector<Cell> cells() const;
};

struct PilotErrorRow {
    double pp = 0.0;
    std::int64_t k = 0;
    std::int64_t samples = 0;
    std::int64_t seed = 0;
    std::int64_t errors = 0;
    double measured = 0.0;
    double ci95_halfwidth = 0.0;
    double p_eps = 0.0;
    double p_eps_exact = 0.0;

    static const std::vector<std::string>& header();
    [[nodiscard]] std::vector<Cell> cells() const;
};

/// Reals use 17 significant digits; empty optionals are empty cells.
std::string format_cell(const Cell& c);

template <class Row>
std::string to_csv(const std::vector<Row>& rows);
template <class Row>
std::string to_json(const std::vector<Row>& rows);

/// RFC-4180 reader: header line then records.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);
std::vector<ResultRow> parse_result_csv(std::string_view text);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onebit::cli
