// SPDX-License-Identifier: Apache-2.0

#include "onebit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "onebit/analytics.hpp"
#include "onebit/csi.hpp"
#include "onebit/montecarlo.hpp"

namespace onebit::cli {

namespace {

/// Raised for anything the user can fix by changing the command line.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

double parse_real(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v))
        throw UsageError("not a finite number: '" + s + "'");
    return v;
}

std::int64_t parse_int(const std::string& s)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size())
        throw UsageError("not an integer: '" + s + "'");
    return v;
}

template <class T>
std::optional<T> opt_parse(const std::string& s, T (*parse)(const std::string&))
{
    if (s.empty())
        return std::nullopt;
    return parse(s);
}

std::int64_t as_integer(double v, std::string_view what)
{
    if (v != std::floor(v) || std::abs(v) > 9.0e15)
        throw UsageError(std::string(what) + " must be an integer");
    return static_cast<std::int64_t>(v);
}

}  // namespace

std::string_view to_string(SweepSpec::Param p)
{
    switch (p) {
    case SweepSpec::Param::M: return "M";
    case SweepSpec::Param::N: return "N";
    case SweepSpec::Param::P: return "P";
    case SweepSpec::Param::Pp: return "Pp";
    case SweepSpec::Param::K: return "K";
    case SweepSpec::Param::Trials: return "trials";
    }
    return "?";
}

SweepSpec SweepSpec::parse(std::string_view name, std::string_view list)
{
    SweepSpec s{};
    if (name == "M")
        s.param = Param::M;
    else if (name == "N")
        s.param = Param::N;
    else if (name == "P")
        s.param = Param::P;
    else if (name == "Pp")
        s.param = Param::Pp;
    else if (name == "K")
        s.param = Param::K;
    else if (name == "trials")
        s.param = Param::Trials;
    else
        throw UsageError("unknown sweep parameter '" + std::string(name) +
                         "' (expected M, N, P, Pp, K or trials)");
    for (const auto& item : split(list, ','))
        s.values.push_back(parse_real(item));
    if (s.values.empty())
        throw UsageError("empty sweep list for " + std::string(name));
    for (double v : s.values) {
        if (!(v > 0.0))
            throw UsageError("sweep values for " + std::string(name) + " must be positive");
        if (s.param != Param::P && s.param != Param::Pp)
            as_integer(v, name);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Rows

const std::vector<std::string>& ResultRow::header()
{
    static const std::vector<std::string> h{
        "scheme",         "decoder",        "M",
        "N",              "P",              "Pp",
        "K",              "trials",         "seed",
        "block_errors",   "block_error_rate", "bit_error_rate",
        "ci95_halfwidth", "bound_union",    "bound_chernoff",
        "bound_asymptotic", "p_eps",        "mi_bits_per_use"};
    return h;
}

namespace {

template <class T>
Cell opt_cell(const std::optional<T>& v)
{
    if (!v)
        return std::monostate{};
    return *v;
}

}  // namespace

std::vector<Cell> ResultRow::cells() const
{
    return {scheme,
            decoder,
            m,
            n,
            p,
            pp,
            k,
            opt_cell(trials),
            opt_cell(seed),
            opt_cell(block_errors),
            opt_cell(block_error_rate),
            opt_cell(bit_error_rate),
            opt_cell(ci95_halfwidth),
            opt_cell(bound_union),
            opt_cell(bound_chernoff),
            opt_cell(bound_asymptotic),
            p_eps,
            opt_cell(mi_bits_per_use)};
}

ResultRow ResultRow::from_cells(const std::vector<std::string>& f)
{
    if (f.size() != header().size())
        throw std::invalid_argument("result row has " + std::to_string(f.size()) +
                                    " fields, expected " + std::to_string(header().size()));
    ResultRow r;
    r.scheme = f[0];
    r.decoder = f[1];
    r.m = parse_int(f[2]);
    r.n = parse_int(f[3]);
    r.p = parse_real(f[4]);
    r.pp = parse_real(f[5]);
    r.k = parse_int(f[6]);
    r.trials = opt_parse(f[7], parse_int);
    r.seed = opt_parse(f[8], parse_int);
    r.block_errors = opt_parse(f[9], parse_int);
    r.block_error_rate = opt_parse(f[10], parse_real);
    r.bit_error_rate = opt_parse(f[11], parse_real);
    r.ci95_halfwidth = opt_parse(f[12], parse_real);
    r.bound_union = opt_parse(f[13], parse_real);
    r.bound_chernoff = opt_parse(f[14], parse_real);
    r.bound_asymptotic = opt_parse(f[15], parse_real);
    r.p_eps = parse_real(f[16]);
    r.mi_bits_per_use = opt_parse(f[17], parse_real);
    return r;
}

const std::vector<std::string>& MiRow::header()
{
    static const std::vector<std::string> h{
        "scheme", "decoder",        "M",                  "N",
        "P",      "Pp",             "K",                  "trials",
        "seed",   "bit_error_rate", "bit_ci95_halfwidth", "mi_bits_per_use",
        "fano_floor", "capacity_limit", "mi_estimator", "regime"};
    return h;
}

std::vector<Cell> MiRow::cells() const
{
    return {scheme, decoder, m, n, p, pp, k, trials, seed, bit_error_rate, bit_ci95_halfwidth,
            mi_bits_per_use, fano_floor, capacity_limit, mi_estimator, regime};
}

const std::vector<std::string>& PilotErrorRow::header()
{
    static const std::vector<std::string> h{"Pp",       "K",
                                            "samples",  "seed",
                                            "errors",   "measured",
                                            "ci95_halfwidth", "p_eps",
                                            "p_eps_exact"};
    return h;
}

std::vector<Cell> PilotErrorRow::cells() const
{
    return {pp, k, samples, seed, errors, measured, ci95_halfwidth, p_eps, p_eps_exact};
}

// ---------------------------------------------------------------------------
// Encoding

std::string format_cell(const Cell& c)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }
        std::string operator()(const std::string& s) const
        {
            if (s.find_first_of(",\"\r\n") == std::string::npos)
                return s;
            std::string q = "\"";
            for (char ch : s) {
                if (ch == '"')
                    q += '"';
                q += ch;
            }
            return q + '"';
        }
    };
    return std::visit(Visitor{}, c);
}

template <class Row>
std::string to_csv(const std::vector<Row>& rows)
{
    std::string out;
    const auto& h = Row::header();
    for (std::size_t i = 0; i < h.size(); ++i)
        out += (i ? "," : "") + h[i];
    out += "\r\n";
    for (const auto& row : rows) {
        const auto cells = row.cells();
        for (std::size_t i = 0; i < cells.size(); ++i)
            out += (i ? "," : "") + format_cell(cells[i]);
        out += "\r\n";
    }
    return out;
}

template <class Row>
std::string to_json(const std::vector<Row>& rows)
{
    auto arr = nlohmann::ordered_json::array();
    const auto& h = Row::header();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        const auto cells = row.cells();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>)
                        obj[h[i]] = nullptr;
                    else
                        obj[h[i]] = v;
                },
                cells[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

template std::string to_csv(const std::vector<ResultRow>&);
template std::string to_csv(const std::vector<MiRow>&);
template std::string to_csv(const std::vector<PilotErrorRow>&);
template std::string to_json(const std::vector<ResultRow>&);
template std::string to_json(const std::vector<MiRow>&);
template std::string to_json(const std::vector<PilotErrorRow>&);

std::vector<std::vector<std::string>> parse_csv(std::string_view text)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false, field_started = false;
    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
            continue;
        }
        switch (ch) {
        case '"':
            if (field_started)
                throw std::invalid_argument("stray quote inside unquoted CSV field");
            quoted = true;
            field_started = true;
            break;
        case ',':
            end_field();
            break;
        case '\r':
            if (i + 1 < text.size() && text[i + 1] == '\n')
                ++i;
            end_record();
            break;
        case '\n':
            end_record();
            break;
        default:
            field += ch;
            field_started = true;
        }
    }
    if (quoted)
        throw std::invalid_argument("unterminated quoted CSV field");
    if (field_started || !record.empty())
        end_record();
    return records;
}

std::vector<ResultRow> parse_result_csv(std::string_view text)
{
    auto records = parse_csv(text);
    if (records.empty() || records.front() != ResultRow::header())
        throw std::invalid_argument("CSV header does not match the result row layout");
    std::vector<ResultRow> rows;
    for (std::size_t i = 1; i < records.size(); ++i)
        rows.push_back(ResultRow::from_cells(records[i]));
    return rows;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct ScenarioArgs {
    std::string scheme;
    std::string decoder = "paper";
    std::optional<int> m, n;
    std::optional<double> power, pilot_power;
    int pilots = 1;
    std::optional<std::uint64_t> trials, samples, seed;
    std::vector<int> m_list, n_list;
    std::vector<std::string> sweeps;
    std::string out;
    std::string format = "csv";
    bool db = false;
    std::optional<unsigned> workers;
    bool noise_off = false;
    bool exact_csi = false;
};

struct Point {
    double m = 0, n = 0, p = 0, pp = 0, k = 0, trials = 0;

    double& at(SweepSpec::Param param)
    {
        switch (param) {
        case SweepSpec::Param::M: return m;
        case SweepSpec::Param::N: return n;
        case SweepSpec::Param::P: return p;
        case SweepSpec::Param::Pp: return pp;
        case SweepSpec::Param::K: return k;
        case SweepSpec::Param::Trials: return trials;
        }
        return m;
    }
};

double from_db(double v, bool db) { return db ? std::pow(10.0, v / 10.0) : v; }

/// Cartesian product of every sweep axis, first axis outermost.
std::vector<Point> expand(const ScenarioArgs& a, bool need_trials)
{
    std::vector<SweepSpec> axes;
    if (!a.m_list.empty())
        axes.push_back({SweepSpec::Param::M, {a.m_list.begin(), a.m_list.end()}});
    if (!a.n_list.empty())
        axes.push_back({SweepSpec::Param::N, {a.n_list.begin(), a.n_list.end()}});
    for (const auto& s : a.sweeps) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw UsageError("--sweep expects NAME=v1,v2,... got '" + s + "'");
        axes.push_back(SweepSpec::parse(std::string_view(s).substr(0, eq),
                                        std::string_view(s).substr(eq + 1)));
    }
    auto swept = [&](SweepSpec::Param p) {
        return std::ranges::any_of(axes, [p](const SweepSpec& s) { return s.param == p; });
    };

    Point base;
    auto need = [&](SweepSpec::Param p, const auto& v, const char* flag) {
        if (v)
            return double(*v);
        if (!swept(p))
            throw UsageError(std::string(flag) + " is required");
        return 0.0;
    };
    base.m = need(SweepSpec::Param::M, a.m, "--m");
    base.n = need(SweepSpec::Param::N, a.n, "--n");
    base.p = need(SweepSpec::Param::P, a.power, "--power");
    base.pp = need(SweepSpec::Param::Pp, a.pilot_power, "--pilot-power");
    base.k = a.pilots;
    base.trials = need_trials ? need(SweepSpec::Param::Trials, a.trials, "--trials") : 0.0;

    std::vector<Point> points{base};
    for (const auto& axis : axes) {
        std::vector<Point> next;
        for (const auto& pt : points) {
            for (double v : axis.values) {
                Point q = pt;
                q.at(axis.param) = v;
                next.push_back(q);
            }
        }
        points = std::move(next);
    }
    for (auto& pt : points) {
        pt.p = from_db(pt.p, a.db);
        pt.pp = from_db(pt.pp, a.db);
    }
    return points;
}

SystemConfig make_config(const ScenarioArgs& a, const Point& pt)
{
    SystemConfig cfg;
    cfg.scheme = parse_scheme(a.scheme);
    cfg.decoder = parse_decoder(a.decoder);
    cfg.m_tx = int(as_integer(pt.m, "M"));
    cfg.n_rx = int(as_integer(pt.n, "N"));
    cfg.power = pt.p;
    cfg.pilot_power = pt.pp;
    cfg.pilots = int(as_integer(pt.k, "K"));
    cfg.trials = pt.trials > 0 ? std::uint64_t(as_integer(pt.trials, "trials")) : 1;
    cfg.seed = a.seed.value_or(0);
    cfg.diag = {a.noise_off, a.exact_csi};
    cfg.workers = a.workers.value_or(0);
    return cfg;
}

std::vector<SystemConfig> configs(const ScenarioArgs& a, bool need_trials)
{
    std::vector<SystemConfig> out;
    for (const auto& pt : expand(a, need_trials)) {
        auto cfg = make_config(a, pt);
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        out.push_back(cfg);
    }
    return out;
}

std::string decoder_label(const SystemConfig& cfg)
{
    return cfg.scheme == SchemeKind::TxBeamform ? "identity" : std::string(to_string(cfg.decoder));
}

ResultRow analytic_row(const SystemConfig& cfg)
{
    ResultRow r;
    r.scheme = std::string(to_string(cfg.scheme));
    r.decoder = decoder_label(cfg);
    r.m = cfg.m_tx;
    r.n = cfg.n_rx;
    r.p = cfg.power;
    r.pp = cfg.pilot_power;
    r.k = cfg.pilots;
    r.p_eps = p_eps_majority(cfg.pilot());
    if (cfg.scheme == SchemeKind::TxBeamform) {
        r.bound_union = scheme1_union_bound_with_pe(cfg.power, r.p_eps, cfg.m_tx, cfg.n_rx).value;
        r.bound_chernoff =
            scheme1_chernoff_bound_with_pe(cfg.power, r.p_eps, cfg.m_tx, cfg.n_rx).value;
    } else if (r.p_eps < 0.5) {
        r.bound_asymptotic = scheme2_asymptotic_error(r.p_eps, cfg.n_rx, cfg.m_tx).value;
    }
    return r;
}

void note_diagnostics(const SystemConfig& cfg, std::ostream& err)
{
    if (cfg.diag.any())
        err << "note: non-physical run (" << cfg.diag.label() << ")\n";
    if (cfg.pilots % 2 == 0 && !cfg.diag.exact_csi)
        err << "note: even K=" << cfg.pilots
            << " -- p_eps counts vote ties as errors; the estimator breaks ties to +1\n";
}

void emit(const std::string& text, const ScenarioArgs& a, std::ostream& out)
{
    if (a.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(a.out, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open output file '" + a.out + "'");
    f << text;
    f.close();
    if (!f)
        throw std::runtime_error("failed writing output file '" + a.out + "'");
}

template <class Row>
void emit_rows(const std::vector<Row>& rows, const ScenarioArgs& a, std::ostream& out)
{
    emit(a.format == "json" ? to_json(rows) : to_csv(rows), a, out);
}

void cmd_simulate(const ScenarioArgs& a, std::ostream& out, std::ostream& err)
{
    err << "note: mi_bits_per_use is the per-bit plug-in estimate (sum over bit positions)\n";
    std::vector<ResultRow> rows;
    for (const auto& cfg : configs(a, true)) {
        note_diagnostics(cfg, err);
        const auto stats = estimate_mutual_information(cfg);
        auto r = analytic_row(cfg);
        r.trials = std::int64_t(stats.trials);
        r.seed = std::int64_t(cfg.seed);
        r.block_errors = std::int64_t(stats.block_errors);
        r.block_error_rate = stats.block_error_rate;
        r.bit_error_rate = stats.bit_error_rate;
        r.ci95_halfwidth = stats.block_ci.half_width();
        r.mi_bits_per_use = stats.mi_bits;
        rows.push_back(std::move(r));
    }
    emit_rows(rows, a, out);
}

void cmd_bound(const ScenarioArgs& a, std::ostream& out)
{
    std::vector<ResultRow> rows;
    for (const auto& cfg : configs(a, false))
        rows.push_back(analytic_row(cfg));
    emit_rows(rows, a, out);
}

void cmd_mi(const ScenarioArgs& a, std::ostream& out, std::ostream& err)
{
    std::vector<MiRow> rows;
    for (const auto& cfg : configs(a, true)) {
        note_diagnostics(cfg, err);
        const auto stats = estimate_mutual_information(cfg);
        MiRow r;
        r.scheme = std::string(to_string(cfg.scheme));
        r.decoder = decoder_label(cfg);
        r.m = cfg.m_tx;
        r.n = cfg.n_rx;
        r.p = cfg.power;
        r.pp = cfg.pilot_power;
        r.k = cfg.pilots;
        r.trials = std::int64_t(stats.trials);
        r.seed = std::int64_t(cfg.seed);
        r.bit_error_rate = stats.bit_error_rate;
        r.bit_ci95_halfwidth = stats.bit_ci.half_width();
        r.mi_bits_per_use = stats.mi_bits.value_or(0.0);
        r.fano_floor = fano_floor(stats);
        r.capacity_limit = std::int64_t(stats.bit_positions());
        r.mi_estimator = stats.mi_estimator;
        r.regime = cfg.diag.label();
        rows.push_back(std::move(r));
    }
    emit_rows(rows, a, out);
}

void cmd_pilot_error(const ScenarioArgs& a, std::ostream& out, std::ostream& err)
{
    ScenarioArgs b = a;
    // Only Pp, K and the sample count are meaningful here.
    b.m = b.n = 1;
    b.power = 1.0;
    b.trials = b.samples;
    std::vector<PilotErrorRow> rows;
    for (const auto& pt : expand(b, true)) {
        const PilotConfig pilot{pt.pp, int(as_integer(pt.k, "K"))};
        const auto samples = std::uint64_t(as_integer(pt.trials, "samples"));
        try {
            pilot.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (pilot.even_pilots())
            err << "note: even K=" << pilot.pilots
                << " -- p_eps counts vote ties as errors; the estimator breaks ties to +1\n";
        const auto s = estimate_pilot_error(pilot, samples, *a.seed, a.workers.value_or(0));
        rows.push_back({pilot.pilot_power, pilot.pilots, std::int64_t(s.samples),
                        std::int64_t(*a.seed), std::int64_t(s.errors), s.rate,
                        s.ci.half_width(), s.p_formula, s.p_exact});
    }
    emit_rows(rows, a, out);
}

std::optional<unsigned> workers_from_env()
{
    const char* v = std::getenv(kWorkersEnv);
    if (!v || !*v)
        return std::nullopt;
    const auto n = parse_int(v);
    if (n < 1)
        throw UsageError(std::string(kWorkersEnv) + " must be a positive integer");
    return unsigned(n);
}

void add_common(CLI::App* cmd, ScenarioArgs& a)
{
    cmd->add_option("--out", a.out, "Output file (default: stdout)");
    cmd->add_option("--format", a.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--workers", a.workers, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--db", a.db, "Interpret --power/--pilot-power (and their sweeps) in dB");
    cmd->add_option("--sweep", a.sweeps, "NAME=v1,v2,... with NAME in M,N,P,Pp,K,trials")
        ->take_all()
        ->allow_extra_args(false);
}

void add_scenario(CLI::App* cmd, ScenarioArgs& a, bool simulated)
{
    cmd->add_option("--scheme", a.scheme, "tx-beamform or rx-combine")
        ->required()
        ->check(CLI::IsMember({"tx-beamform", "rx-combine"}));
    cmd->add_option("--decoder", a.decoder, "rx-combine decoder: paper or matched")
        ->check(CLI::IsMember({"paper", "matched"}));
    auto* m = cmd->add_option("--m", a.m, "Transmit antennas M");
    auto* n = cmd->add_option("--n", a.n, "Receive antennas N");
    cmd->add_option("--m-list", a.m_list, "Comma-separated M sweep")->delimiter(',')->excludes(m);
    cmd->add_option("--n-list", a.n_list, "Comma-separated N sweep")->delimiter(',')->excludes(n);
    cmd->add_option("--power", a.power, "Transmit power P (linear)");
    cmd->add_option("--pilot-power", a.pilot_power, "Pilot power Pp (linear)");
    cmd->add_option("--pilots", a.pilots, "Pilots per antenna K")->check(CLI::PositiveNumber);
    if (simulated) {
        cmd->add_option("--trials", a.trials, "Monte-Carlo trials per point");
        cmd->add_option("--seed", a.seed, "Master seed")->required();
        cmd->add_flag("--diag-noise-off", a.noise_off, "Non-physical: disable data noise");
        cmd->add_flag("--diag-exact-csi", a.exact_csi, "Non-physical: G = csign(H)");
    }
    add_common(cmd, a);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Massive MIMO with 1-bit DACs, ADCs and CSI: simulation and bounds",
                 "onebit-mimo"};
    app.require_subcommand(1);

    ScenarioArgs a;
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo block/bit error rates");
    add_scenario(simulate, a, true);
    auto* bound = app.add_subcommand("bound", "Closed-form bounds only");
    add_scenario(bound, a, false);
    auto* mi = app.add_subcommand("mi", "Per-bit plug-in mutual information");
    add_scenario(mi, a, true);
    auto* pilot = app.add_subcommand("pilot-error", "Measured vs analytic CSI error");
    pilot->add_option("--pilot-power", a.pilot_power, "Pilot power Pp");
    pilot->add_option("--pilots", a.pilots, "Pilots K")->check(CLI::PositiveNumber);
    pilot->add_option("--samples", a.samples, "Estimated quadratures per point")->required();
    pilot->add_option("--seed", a.seed, "Master seed")->required();
    add_common(pilot, a);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (!a.workers)
            a.workers = workers_from_env();
        if (simulate->parsed())
            cmd_simulate(a, out, err);
        else if (bound->parsed())
            cmd_bound(a, out);
        else if (mi->parsed())
            cmd_mi(a, out, err);
        else
            cmd_pilot_error(a, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace onebit::cli
