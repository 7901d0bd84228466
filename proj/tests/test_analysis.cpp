#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "eonsp/analysis.hpp"
#include "eonsp/errors.hpp"

using namespace eonsp;
namespace fs = std::filesystem;

namespace {

CallRow make_row(const std::string& topo, int vertices, int units, std::uint64_t seed,
                 int call_index, Algorithm algo, std::int64_t time_ns, double util = 0.0)
{
    CallRow row;
    row.meta.topology = topo;
    row.meta.vertices = vertices;
    row.meta.edges = 2 * vertices;
    row.meta.units = units;
    row.meta.mean_demand = units / 10;
    row.meta.seed = seed;
    row.call.call_index = call_index;
    row.call.utilization_before = util;
    row.call.algorithm = algo;
    row.call.accepted = true;
    row.call.time_ns = time_ns;
    return row;
}

} // namespace

TEST_CASE("speedup cdf over matched pairs")
{
    std::vector<CallRow> rows;
    rows.push_back(make_row("g", 25, 100, 1, 0, Algorithm::Filtered, 200));
    rows.push_back(make_row("g", 25, 100, 1, 0, Algorithm::Generic, 100)); // ratio 2
    rows.push_back(make_row("g", 25, 100, 1, 1, Algorithm::Filtered, 400));
    rows.push_back(make_row("g", 25, 100, 1, 1, Algorithm::Generic, 100)); // ratio 4

    const RatioCdf cdf = speedup_cdf(rows);
    CHECK(cdf.sorted_ratios == std::vector<double>{2.0, 4.0});
    CHECK(cdf.mean_ratio == doctest::Approx(3.0));
    CHECK(cdf.median == doctest::Approx(3.0));
    CHECK(cdf.fraction_above_one == doctest::Approx(1.0));

    SUBCASE("all ratios exactly one")
    {
        std::vector<CallRow> even;
        for (int i = 0; i < 8; ++i) {
            even.push_back(make_row("g", 25, 100, 1, i, Algorithm::Filtered, 70));
            even.push_back(make_row("g", 25, 100, 1, i, Algorithm::Generic, 70));
        }
        const RatioCdf flat = speedup_cdf(even);
        CHECK(flat.fraction_above_one == 0.0);
        CHECK(flat.mean_ratio == doctest::Approx(1.0));
    }

    SUBCASE("unmatched records throw")
    {
        rows.push_back(make_row("g", 25, 100, 1, 2, Algorithm::Filtered, 50));
        CHECK_THROWS_AS(speedup_cdf(rows), UnmatchedRecords);
    }

    SUBCASE("quantiles are non-decreasing in the level")
    {
        double prev = 0;
        for (double q = 0; q <= 1.0001; q += 0.05) {
            const double value = cdf.quantile(std::min(q, 1.0));
            CHECK(value >= prev);
            prev = value;
        }
    }
}

TEST_CASE("exact model recovery")
{
    auto rows_for = [&](auto time_of) {
        std::vector<CallRow> rows;
        int call = 0;
        for (int v : {25, 50, 100, 200, 400})
            for (int rep = 0; rep < 3; ++rep)
                rows.push_back(make_row("g", v, 100, 1, call++, Algorithm::Generic,
                                        static_cast<std::int64_t>(time_of(v))));
        return rows;
    };

    SUBCASE("quadratic power law")
    {
        const auto fits = fit_growth(rows_for([](int v) { return 3.0 * v * v; }),
                                     GrowthDimension::Vertices, Algorithm::Generic);
        CHECK(fits.front().model == GrowthModel::PowerLaw);
        CHECK(fits.front().coeff_b == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(fits.front().r_squared == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("logarithmic")
    {
        const auto fits = fit_growth(rows_for([](int v) { return 5000.0 * std::log(v); }),
                                     GrowthDimension::Vertices, Algorithm::Generic);
        CHECK(fits.front().model == GrowthModel::Logarithmic);
        CHECK(fits.front().r_squared == doctest::Approx(1.0).epsilon(1e-6));
    }

    SUBCASE("linear with intercept")
    {
        const auto fits = fit_growth(rows_for([](int v) { return 1000.0 + 40.0 * v; }),
                                     GrowthDimension::Vertices, Algorithm::Generic);
        CHECK(fits.front().model == GrowthModel::Linear);
        CHECK(fits.front().coeff_b == doctest::Approx(40.0).epsilon(1e-9));
    }

    SUBCASE("n log n")
    {
        const auto fits = fit_growth(rows_for([](int v) { return 7.0 * v * std::log(v); }),
                                     GrowthDimension::Vertices, Algorithm::Generic);
        CHECK(fits.front().model == GrowthModel::NLogN);
        // time_ns quantization perturbs the coefficient slightly
        CHECK(fits.front().coeff_a == doctest::Approx(7.0).epsilon(1e-3));
    }

    SUBCASE("insufficient spread")
    {
        std::vector<CallRow> rows;
        for (int v : {25, 50, 100})
            rows.push_back(make_row("g", v, 100, 1, v, Algorithm::Generic, 100 * v));
        CHECK_THROWS_AS(fit_growth(rows, GrowthDimension::Vertices, Algorithm::Generic),
                        InsufficientSpread);
        // other-algorithm rows must not count toward the spread
        rows.push_back(make_row("g", 200, 100, 1, 0, Algorithm::Filtered, 999));
        CHECK_THROWS_AS(fit_growth(rows, GrowthDimension::Vertices, Algorithm::Generic),
                        InsufficientSpread);
    }
}

TEST_CASE("utilization profile: bins, peak and slope")
{
    std::vector<CallRow> rows;
    int call = 0;
    // monotone decreasing: peak must land in the first bin
    for (double u = 0.01; u < 0.6; u += 0.01)
        rows.push_back(make_row("g", 50, 100, 1, call++, Algorithm::Filtered,
                                static_cast<std::int64_t>(1e6 * (1.0 - u)), u));
    const UtilizationProfile decreasing = utilization_profile(rows, Algorithm::Filtered);
    CHECK(decreasing.peak_center == doctest::Approx(0.025));
    CHECK(decreasing.linear_slope < 0);

    // peaked at 0.25
    rows.clear();
    call = 0;
    for (double u = 0.01; u < 0.6; u += 0.01) {
        const double t = 1e6 * std::exp(-(u - 0.25) * (u - 0.25) / 0.01);
        rows.push_back(make_row("g", 50, 100, 1, call++, Algorithm::Generic,
                                static_cast<std::int64_t>(t), u));
    }
    const UtilizationProfile peaked = utilization_profile(rows, Algorithm::Generic);
    CHECK(peaked.peak_center == doctest::Approx(0.275).epsilon(0.2));
    CHECK(peaked.bins.size() == 12);
}

TEST_CASE("csv round trip preserves every field")
{
    SimMeta meta{"g25_0", 25, 47, 100, 10, 7};
    std::vector<CallRecord> records;
    CallRecord accepted;
    accepted.call_index = 0;
    accepted.utilization_before = 0.125;
    accepted.algorithm = Algorithm::Filtered;
    accepted.accepted = true;
    accepted.cost = 1.25e-3;
    accepted.level = 2;
    accepted.window = {4, 3};
    accepted.hops = 5;
    accepted.time_ns = 123456;
    CallRecord blocked;
    blocked.call_index = 1;
    blocked.utilization_before = 0.25;
    blocked.algorithm = Algorithm::Generic;
    blocked.accepted = false;
    blocked.time_ns = 777;
    records.push_back(accepted);
    records.push_back(blocked);

    const fs::path dir = fs::temp_directory_path() / "eonsp_csv_test";
    fs::create_directories(dir);
    const std::string file = (dir / "calls.csv").string();
    write_calls_csv(file, meta, records);

    const auto rows = read_calls_csv(file);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].meta.topology == "g25_0");
    CHECK(rows[0].meta.vertices == 25);
    CHECK(rows[0].meta.edges == 47);
    CHECK(rows[0].meta.units == 100);
    CHECK(rows[0].meta.mean_demand == 10);
    CHECK(rows[0].meta.seed == 7);
    CHECK(rows[0].call.accepted);
    CHECK(rows[0].call.cost == accepted.cost); // 17 significant digits round-trip
    CHECK(rows[0].call.level == 2);
    CHECK((rows[0].call.window == Window{4, 3}));
    CHECK(rows[0].call.hops == 5);
    CHECK(rows[0].call.time_ns == 123456);
    CHECK_FALSE(rows[1].call.accepted);
    CHECK(rows[1].call.time_ns == 777);

    // aggregation is a pure function of the file: identical reruns
    const auto rows2 = read_calls_csv(file);
    REQUIRE(rows2.size() == rows.size());
    const auto again = read_calls_csv(file);
    CHECK(again[0].call.cost == rows[0].call.cost);

    CHECK_THROWS_AS(read_calls_csv((dir / "missing.csv").string()), ParseError);
    fs::remove_all(dir);
}
