#include <doctest.h>

#include <cmath>

#include "eonsp/errors.hpp"
#include "eonsp/gabriel.hpp"
#include "eonsp/simulator.hpp"

using namespace eonsp;

TEST_CASE("next_demand: valid endpoints, degenerate and seeded behavior")
{
    const Network net = generate_gabriel(10, 1);

    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const Demand d = next_demand(rng, net, 1);
        CHECK(d.units == 1); // mean 1 forces the degenerate range [1, 1]
        CHECK(d.src != d.dst);
        CHECK(d.src >= 0);
        CHECK(d.dst < net.vertex_count());
    }

    Rng r1(42), r2(42);
    for (int i = 0; i < 100; ++i) {
        const Demand a = next_demand(r1, net, 10);
        const Demand b = next_demand(r2, net, 10);
        CHECK(a.src == b.src);
        CHECK(a.dst == b.dst);
        CHECK(a.units == b.units);
    }
}

TEST_CASE("next_demand: empirical mean over a million draws")
{
    const Network net = generate_gabriel(10, 1);
    Rng rng(99);
    double sum = 0;
    const int draws = 1'000'000;
    for (int i = 0; i < draws; ++i)
        sum += next_demand(rng, net, 50).units;
    CHECK(sum / draws == doctest::Approx(50).epsilon(0.01)); // within 50 +- 0.5
}

TEST_CASE("utilization arithmetic")
{
    // 10-edge network: a path on 11 vertices, plus none extra
    std::vector<Network::Vertex> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 11; ++i)
        pts.push_back({static_cast<double>(i), 0});
    for (int i = 0; i < 10; ++i)
        edges.emplace_back(i, i + 1);
    Network net(std::move(pts), std::move(edges));
    net.attach_units(100);

    CHECK(utilization(net) == 0);
    for (int e = 0; e < 3; ++e)
        net.allocate(e, {10, 5});
    CHECK(utilization(net) == doctest::Approx(15.0 / 1000.0));
}

TEST_CASE("run_simulation rejects invalid configs")
{
    const Network net = generate_gabriel(5, 2);
    SimConfig cfg;
    CHECK_THROWS_AS(run_simulation(cfg), ConfigError); // no topology
    cfg.topology = &net;
    cfg.units = 0;
    CHECK_THROWS_AS(run_simulation(cfg), ConfigError);
    cfg.units = 100;
    cfg.mean_demand_fraction = 1.5;
    CHECK_THROWS_AS(run_simulation(cfg), ConfigError);
    cfg.mean_demand_fraction = 0.1;
    cfg.run_filtered = cfg.run_generic = false;
    CHECK_THROWS_AS(run_simulation(cfg), ConfigError);
}

TEST_CASE("max utilization zero means an empty run")
{
    const Network net = generate_gabriel(5, 2);
    SimConfig cfg;
    cfg.topology = &net;
    cfg.units = 100;
    cfg.max_utilization = 0;
    CHECK(run_simulation(cfg).empty());
}

TEST_CASE("a small run terminates with the invariants holding")
{
    const Network topo = generate_gabriel(12, 6);
    SimConfig cfg;
    cfg.topology = &topo;
    cfg.units = 40;
    cfg.mean_demand_fraction = 0.1;
    cfg.seed = 5;
    const auto records = run_simulation(cfg);
    REQUIRE(!records.empty());

    const double total_units = static_cast<double>(topo.edge_count()) * cfg.units;
    double last_util = 0;
    double expected_util = 0;
    int last_index = -1;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const CallRecord& rec = records[i];
        CHECK(rec.utilization_before >= last_util);            // non-decreasing
        CHECK(rec.utilization_before < cfg.max_utilization);   // never examined above cap
        last_util = rec.utilization_before;

        if (rec.call_index != last_index) {
            // first record of this call: utilization must equal the sum of
            // everything allocated so far (spectrum conservation)
            CHECK(rec.utilization_before == doctest::Approx(expected_util).epsilon(1e-12));
            last_index = rec.call_index;
        }
        if (rec.algorithm == Algorithm::Generic && rec.accepted)
            expected_util += rec.hops * rec.window.width / total_units;
    }

    // both-algorithm mode: per-call agreement of outcome and cost
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        if (records[i].call_index != records[i + 1].call_index)
            continue;
        const CallRecord& a = records[i];
        const CallRecord& b = records[i + 1];
        CHECK(a.algorithm != b.algorithm);
        CHECK(a.accepted == b.accepted);
        if (a.accepted) {
            CHECK(a.cost == b.cost);
            CHECK(a.level == b.level);
            CHECK((a.window == b.window));
            CHECK(a.hops == b.hops);
        }
    }

    // replay determinism: identical streams modulo time_ns
    const auto replay = run_simulation(cfg);
    REQUIRE(replay.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].call_index == replay[i].call_index);
        CHECK(records[i].algorithm == replay[i].algorithm);
        CHECK(records[i].accepted == replay[i].accepted);
        CHECK(records[i].cost == replay[i].cost);
        CHECK(records[i].utilization_before == replay[i].utilization_before);
        CHECK((records[i].window == replay[i].window));
    }
}

TEST_CASE("a tiny network hits the block cap or the utilization target")
{
    Network topo({{0, 0}, {1, 0}}, {{0, 1}});
    SimConfig cfg;
    cfg.topology = &topo;
    cfg.units = 10;
    cfg.mean_demand_fraction = 0.1; // mean 1 unit
    cfg.seed = 9;
    cfg.block_cap = 50;
    const auto records = run_simulation(cfg);
    REQUIRE(!records.empty());

    int trailing_blocked = 0;
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        if (it->algorithm != Algorithm::Generic)
            continue;
        if (it->accepted)
            break;
        ++trailing_blocked;
    }
    const double final_util = records.back().utilization_before;
    // terminated either by reaching 0.6 on the next probe or by the cap
    CHECK((final_util >= 0.5 || trailing_blocked == cfg.block_cap));
}
