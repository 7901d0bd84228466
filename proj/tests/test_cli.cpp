#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "eonsp/csv.hpp"

using namespace eonsp;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args)
{
    const std::string command = std::string(EONSP_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[512];
    while (fgets(buf, sizeof buf, pipe))
        result.output += buf;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

struct TempDir {
    fs::path path;
    explicit TempDir(const char* tag)
        : path(fs::temp_directory_path() / (std::string("eonsp_cli_") + tag))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

} // namespace

TEST_CASE("gen-topo is deterministic and validates its arguments")
{
    TempDir dir("gentopo");
    const auto first = run_cli("gen-topo --vertices 25 --count 2 --seed 7 --out " + dir.str()
                               + "/a");
    CHECK(first.exit_code == 0);
    CHECK(fs::exists(dir.path / "a" / "g25_0.topo"));
    CHECK(fs::exists(dir.path / "a" / "g25_1.topo"));

    const auto second = run_cli("gen-topo --vertices 25 --count 2 --seed 7 --out " + dir.str()
                                + "/b");
    CHECK(second.exit_code == 0);
    CHECK(slurp(dir.path / "a" / "g25_0.topo") == slurp(dir.path / "b" / "g25_0.topo"));
    CHECK(slurp(dir.path / "a" / "g25_1.topo") == slurp(dir.path / "b" / "g25_1.topo"));
    CHECK(slurp(dir.path / "a" / "g25_0.topo") != slurp(dir.path / "a" / "g25_1.topo"));

    CHECK(run_cli("gen-topo --vertices 1 --out " + dir.str()).exit_code == 2);
    CHECK(run_cli("definitely-not-a-command").exit_code == 2);
}

TEST_CASE("simulate writes schema-conforming CSV consumable by fit and cdf")
{
    TempDir dir("simulate");
    REQUIRE(run_cli("gen-topo --vertices 25 --count 1 --seed 3 --out " + dir.str()).exit_code
            == 0);
    const std::string topo = (dir.path / "g25_0.topo").string();
    const std::string csv = (dir.path / "calls.csv").string();

    const auto sim = run_cli("simulate --topo " + topo + " --units 100 --mean-demand-frac 0.1 "
                             "--seed 1 --algo both --out " + csv);
    CHECK(sim.exit_code == 0);

    std::ifstream in(csv);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == kCallsCsvHeader);
    const auto rows = read_calls_csv(csv);
    CHECK(rows.size() >= 20);
    // both algorithms present, same call count each
    int filtered = 0, generic = 0;
    for (const auto& row : rows)
        (row.call.algorithm == Algorithm::Filtered ? filtered : generic)++;
    CHECK(filtered == generic);

    const auto cdf = run_cli("cdf --in " + csv + " --out " + (dir.path / "ratios.csv").string()
                             + " --plot " + (dir.path / "cdf.svg").string());
    CHECK(cdf.exit_code == 0);
    CHECK(cdf.output.find("mean_ratio=") != std::string::npos);
    CHECK(slurp(dir.path / "cdf.svg").find("<svg") != std::string::npos);

    const auto fit = run_cli("fit --in " + csv + " --dimension utilization --algo generic");
    CHECK(fit.exit_code == 0);
    CHECK(fit.output.find("power-law") != std::string::npos);

    // deterministic replay: rerunning the simulation yields identical rows
    // except the time_ns column
    const std::string csv2 = (dir.path / "calls2.csv").string();
    REQUIRE(run_cli("simulate --topo " + topo + " --units 100 --mean-demand-frac 0.1 "
                    "--seed 1 --algo both --out " + csv2)
                .exit_code == 0);
    const auto rows2 = read_calls_csv(csv2);
    REQUIRE(rows2.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].call.call_index == rows2[i].call.call_index);
        CHECK(rows[i].call.accepted == rows2[i].call.accepted);
        CHECK(rows[i].call.cost == rows2[i].call.cost);
        CHECK(rows[i].call.utilization_before == rows2[i].call.utilization_before);
    }
}

TEST_CASE("verify passes clean and fails under injected mutations")
{
    const std::string small = "--spectrum-ops 20000 --instances 300 --vertices 10 --graphs 1 "
                              "--units 40 --sim-seeds 1";
    const auto clean = run_cli("verify " + small);
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.find("PASS") != std::string::npos);

    const auto domination = run_cli("verify " + small + " --mutate domination");
    CHECK(domination.exit_code == 1);
    CHECK(domination.output.find("FAIL") != std::string::npos);
    CHECK(domination.output.find("counterexample") != std::string::npos);

    const auto lastfit = run_cli("verify " + small + " --mutate last-fit");
    CHECK(lastfit.exit_code == 1);
    // cost equality survives the window-policy mutation; assignments differ
    CHECK(lastfit.output.find("0 cost") != std::string::npos);
    CHECK(lastfit.output.find("FAIL") != std::string::npos);
}

TEST_CASE("campaign runs a grid, merges, and resumes")
{
    TempDir dir("campaign");
    const std::string out = (dir.path / "camp").string();
    const std::string args = "campaign --vertices 10,12 --graphs 1 --units 40 --fracs 0.1 "
                             "--seeds 2 --out " + out;
    const auto first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("executed 4") != std::string::npos);

    const auto merged = read_calls_csv(out + "/merged.csv");
    std::size_t total = 0;
    for (const char* cell : {"g10_0_S40_f0.1_s1.csv", "g10_0_S40_f0.1_s2.csv",
                             "g12_0_S40_f0.1_s1.csv", "g12_0_S40_f0.1_s2.csv"}) {
        CHECK(fs::exists(fs::path(out) / cell));
        total += read_calls_csv((fs::path(out) / cell).string()).size();
    }
    CHECK(merged.size() == total);

    const auto rerun = run_cli(args);
    CHECK(rerun.exit_code == 0);
    CHECK(rerun.output.find("executed 0") != std::string::npos);
    CHECK(rerun.output.find("skipped 4") != std::string::npos);
}
