#include <doctest.h>

#include <limits>

#include "eonsp/errors.hpp"
#include "eonsp/modulation.hpp"
#include "eonsp/rng.hpp"

using namespace eonsp;

TEST_CASE("default table halves reach per level with divisor = level")
{
    const ModulationTable t = ModulationTable::default_table(8, 4);
    REQUIRE(t.level_count() == 4);
    CHECK(t.level(1).reach == doctest::Approx(12));
    CHECK(t.level(2).reach == doctest::Approx(6));
    CHECK(t.level(3).reach == doctest::Approx(3));
    CHECK(t.level(4).reach == doctest::Approx(1.5));
    for (int m = 1; m <= 4; ++m)
        CHECK(t.level(m).divisor == m);

    const ModulationTable single = ModulationTable::default_table(8, 1);
    CHECK(single.level_count() == 1);
    CHECK(single.level(1).reach == doctest::Approx(12));
    CHECK(single.level(1).divisor == 1);
}

TEST_CASE("constructor enforces monotone reaches and divisors")
{
    CHECK_THROWS_AS(ModulationTable({}), ConfigError);
    CHECK_THROWS_AS(ModulationTable({{10, 1}, {10, 2}}), ConfigError);
    CHECK_THROWS_AS(ModulationTable({{10, 2}, {5, 2}}), ConfigError);
    CHECK_THROWS_AS(ModulationTable({{10, 1}, {12, 2}}), ConfigError);
    CHECK_THROWS_AS(ModulationTable({{-1, 1}}), ConfigError);
}

TEST_CASE("required width picks the most efficient feasible level")
{
    const ModulationTable t = ModulationTable::default_table(8, 4); // reaches 12,6,3,1.5
    CHECK(t.required_width(10, 5) == 5);   // levels 1,2 feasible; ceil(10/2)
    CHECK(t.required_width(10, 13) == std::nullopt);
    CHECK(t.required_width(10, 0) == 3);   // level 4, ceil(10/4)
    CHECK(t.best_level(10, 5) == 2);
    CHECK(t.best_level(10, 11) == 1);
    CHECK(t.best_level(10, 13) == std::nullopt);
    CHECK(t.required_width(1, 0) == 1);
}

TEST_CASE("required width is non-decreasing in cost and demand")
{
    Rng rng(11);
    for (int i = 0; i < 3000; ++i) {
        std::vector<ModulationTable::Level> levels;
        double reach = 1 + 20 * rng.next_double();
        int divisor = static_cast<int>(rng.next_int(1, 2));
        const int count = static_cast<int>(rng.next_int(1, 4));
        for (int m = 0; m < count; ++m) {
            levels.push_back({reach, divisor});
            reach *= 0.4 + 0.5 * rng.next_double();
            divisor += static_cast<int>(rng.next_int(1, 3));
        }
        const ModulationTable t{std::move(levels)};

        const int demand1 = static_cast<int>(rng.next_int(1, 40));
        const int demand2 = demand1 + static_cast<int>(rng.next_int(0, 10));
        const double cost1 = 25 * rng.next_double();
        const double cost2 = cost1 + 25 * rng.next_double();

        auto as_infinite = [](std::optional<int> w) {
            return w ? *w : std::numeric_limits<int>::max();
        };
        CHECK(as_infinite(t.required_width(demand1, cost1))
              <= as_infinite(t.required_width(demand1, cost2)));
        CHECK(as_infinite(t.required_width(demand1, cost1))
              <= as_infinite(t.required_width(demand2, cost1)));
    }
}

TEST_CASE("table parsing round-trips")
{
    const ModulationTable t = ModulationTable::from_string("12:1,6:2,3:3,1.5:4");
    CHECK(t.level_count() == 4);
    CHECK(t.level(4).reach == doctest::Approx(1.5));
    CHECK(ModulationTable::from_string(t.to_string()).to_string() == t.to_string());
    CHECK_THROWS_AS(ModulationTable::from_string("12:1,whoops"), ParseError);
    CHECK_THROWS_AS(ModulationTable::from_string("6:2,12:1"), ConfigError);
}
