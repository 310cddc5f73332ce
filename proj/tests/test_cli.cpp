// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "onebit/cli.hpp"

using namespace onebit::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> simulate_args(std::vector<std::string> extra, bool fixed_m = true)
{
    std::vector<std::string> a{"simulate", "--scheme", "tx-beamform", "--n", "2", "--power", "1",
                               "--pilot-power", "1", "--pilots", "1", "--trials", "500",
                               "--seed", "3"};
    if (fixed_m)
        a.insert(a.end(), {"--m", "8"});
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
}

}  // namespace

TEST_CASE("N not dividing M is an argument error")
{
    const auto r = invoke({"simulate", "--scheme", "tx-beamform", "--m", "10", "--n", "4",
                           "--power", "1", "--pilot-power", "1", "--trials", "10", "--seed", "1"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("N must divide M") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("malformed flags print usage")
{
    auto r = invoke(simulate_args({"--bogus"}));
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("Usage") != std::string::npos);
    r = invoke(simulate_args({"--format", "xml"}));
    CHECK(r.code == kExitUsage);
    r = invoke({"simulate", "--scheme", "tx-beamform", "--m", "8", "--n", "2", "--power", "1",
                "--pilot-power", "1", "--trials", "10"});
    CHECK(r.code == kExitUsage);
    r = invoke({"simulate", "--scheme", "diagonal", "--m", "8", "--n", "2", "--power", "1",
                "--pilot-power", "1", "--trials", "10", "--seed", "1"});
    CHECK(r.code == kExitUsage);
    r = invoke({});
    CHECK(r.code == kExitUsage);
    r = invoke({"--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("simulate") != std::string::npos);
}

TEST_CASE("unwritable output is a runtime error")
{
    const auto r = invoke(simulate_args({"--out", "/nonexistent-dir/x/out.csv"}));
    CHECK(r.code == kExitRuntime);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("--m and --m-list are exclusive")
{
    CHECK(invoke(simulate_args({"--m-list", "4,8"})).code == kExitUsage);
}

TEST_CASE("simulate CSV round-trips")
{
    const auto r = invoke(simulate_args({"--m-list", "4,8"}, false));
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("\r\n") != std::string::npos);
    const auto rows = parse_result_csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].m == 4);
    CHECK(rows[1].m == 8);
    CHECK(rows[0].decoder == "identity");
    CHECK(rows[0].trials == 500);
    CHECK(rows[0].bound_union.has_value());
    CHECK(!rows[0].bound_asymptotic.has_value());
    CHECK(to_csv(rows) == r.out);
}

TEST_CASE("repeated runs are byte identical")
{
    const auto a = invoke(simulate_args({"--workers", "1"}));
    const auto b = invoke(simulate_args({"--workers", "3"}));
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
}

TEST_CASE("JSON keys follow the CSV header")
{
    const auto r = invoke(simulate_args({"--format", "json"}));
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::ordered_json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j[0].items())
        keys.push_back(k);
    CHECK(keys == ResultRow::header());
    CHECK(j[0]["bound_asymptotic"].is_null());
    CHECK(j[0]["M"] == 8);
}

TEST_CASE("bound command")
{
    auto r = invoke({"bound", "--scheme", "tx-beamform", "--m", "64", "--n", "2", "--power", "1",
                     "--pilot-power", "1", "--pilots", "1"});
    REQUIRE(r.code == kExitOk);
    auto rows = parse_result_csv(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].p_eps == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(*rows[0].bound_union == doctest::Approx(0.45306176023001759).epsilon(1e-12));
    CHECK(!rows[0].trials.has_value());
    CHECK(!rows[0].block_error_rate.has_value());

    r = invoke({"bound", "--scheme", "tx-beamform", "--m", "4", "--n", "2", "--power", "1",
                "--pilot-power", "1e12", "--pilots", "1"});
    REQUIRE(r.code == kExitOk);
    rows = parse_result_csv(r.out);
    CHECK(*rows[0].bound_union == doctest::Approx(1.0294862529440315).epsilon(1e-5));

    r = invoke({"bound", "--scheme", "rx-combine", "--m", "1", "--n", "4", "--power", "1",
                "--pilot-power", "1", "--pilots", "1"});
    REQUIRE(r.code == kExitOk);
    rows = parse_result_csv(r.out);
    CHECK(*rows[0].bound_asymptotic == doctest::Approx(0.5234375).epsilon(1e-14));
    CHECK(rows[0].decoder == "paper");
}

TEST_CASE("bound sweeps are monotone in M")
{
    const auto r = invoke({"bound", "--scheme", "tx-beamform", "--m-list", "4,16,64,256,1024",
                           "--n", "2", "--power", "1", "--pilot-power", "1"});
    REQUIRE(r.code == kExitOk);
    const auto rows = parse_result_csv(r.out);
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(*rows[i].bound_union < *rows[i - 1].bound_union);
}

TEST_CASE("generic sweeps and dB inputs")
{
    const auto r = invoke({"bound", "--scheme", "tx-beamform", "--m", "16", "--n", "2",
                           "--power", "0", "--pilot-power", "0", "--db", "--sweep", "K=1,3"});
    REQUIRE(r.code == kExitOk);
    const auto rows = parse_result_csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].p == doctest::Approx(1.0));
    CHECK(rows[1].k == 3);
    CHECK(rows[1].p_eps == doctest::Approx(0.15625));
    CHECK(invoke({"bound", "--scheme", "tx-beamform", "--m", "16", "--n", "2", "--power", "1",
                  "--pilot-power", "1", "--sweep", "Q=1"})
              .code == kExitUsage);
}

TEST_CASE("simulate and bound agree on the analytic columns")
{
    const auto sim = parse_result_csv(invoke(simulate_args({})).out);
    const auto bnd = parse_result_csv(invoke({"bound", "--scheme", "tx-beamform", "--m", "8",
                                              "--n", "2", "--power", "1", "--pilot-power", "1",
                                              "--pilots", "1"})
                                          .out);
    REQUIRE(sim.size() == 1);
    REQUIRE(bnd.size() == 1);
    CHECK(sim[0].bound_union == bnd[0].bound_union);
    CHECK(sim[0].bound_chernoff == bnd[0].bound_chernoff);
    CHECK(sim[0].p_eps == bnd[0].p_eps);
}

TEST_CASE("mi and pilot-error commands")
{
    auto r = invoke({"mi", "--scheme", "rx-combine", "--decoder", "matched", "--m", "2", "--n",
                     "16", "--power", "1", "--pilot-power", "1", "--pilots", "3", "--trials",
                     "200", "--seed", "4"});
    REQUIRE(r.code == kExitOk);
    auto rec = parse_csv(r.out);
    REQUIRE(rec.size() == 2);
    CHECK(rec[0] == MiRow::header());
    CHECK(rec[1][1] == "matched");
    CHECK(rec[1][14] == "per-bit plug-in (sum over bit positions)");
    CHECK(rec[1][15] == "physical");

    r = invoke({"mi", "--scheme", "tx-beamform", "--m", "8", "--n", "1", "--power", "1",
                "--pilot-power", "1", "--trials", "2000", "--seed", "4", "--diag-noise-off",
                "--diag-exact-csi"});
    REQUIRE(r.code == kExitOk);
    rec = parse_csv(r.out);
    CHECK(std::stod(rec[1][11]) == doctest::Approx(2.0).epsilon(1e-2));
    CHECK(rec[1][15] == "diagnostic: noise-off exact-csi");

    r = invoke({"pilot-error", "--pilot-power", "1", "--pilots", "2", "--samples", "1000",
                "--seed", "5"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.err.find("even K") != std::string::npos);
    rec = parse_csv(r.out);
    REQUIRE(rec.size() == 2);
    CHECK(rec[0] == PilotErrorRow::header());
}

TEST_CASE("diagnostic runs are announced")
{
    const auto r = invoke(simulate_args({"--diag-noise-off"}));
    REQUIRE(r.code == kExitOk);
    CHECK(r.err.find("non-physical") != std::string::npos);
}

TEST_CASE("CSV quoting")
{
    CHECK(format_cell(Cell{std::string("a,b")}) == "\"a,b\"");
    CHECK(format_cell(Cell{std::string("say \"hi\"")}) == "\"say \"\"hi\"\"\"");
    CHECK(format_cell(Cell{}) == "");
    CHECK(format_cell(Cell{0.1}) == "0.10000000000000001");
    const auto rec = parse_csv("x,y\r\n\"a,b\",\"c\"\"d\"\r\n");
    REQUIRE(rec.size() == 2);
    CHECK(rec[1][0] == "a,b");
    CHECK(rec[1][1] == "c\"d");
}
