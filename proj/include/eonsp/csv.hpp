#ifndef EONSP_CSV_HPP
#define EONSP_CSV_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eonsp/simulator.hpp"

namespace eonsp {

// Identifies the simulation a call record came from.
struct SimMeta {
    std::string topology;
    int vertices = 0;
    int edges = 0;
    int units = 0;
    int mean_demand = 0;
    std::uint64_t seed = 0;
};

// One CSV row: simulation metadata plus one CallRecord.
struct CallRow {
    SimMeta meta;
    CallRecord call;
};

inline const char* kCallsCsvHeader =
    "topology,vertices,edges,units,mean_demand,seed,call_index,utilization,"
    "algorithm,outcome,cost,level,window_start,window_width,hops,time_ns";

std::string format_call_row(const SimMeta& meta, const CallRecord& rec);

// Writes header plus one line per record.
void write_calls_csv(const std::string& path, const SimMeta& meta,
                     const std::vector<CallRecord>& records);

// Reads one or more concatenated calls files (a merged campaign file has a
// single header). Throws ParseError with line diagnostics.
std::vector<CallRow> read_calls_csv(const std::string& path);

// Concatenates per-simulation CSVs into one file with a single header.
void merge_calls_csv(const std::vector<std::string>& inputs, const std::string& output);

} // namespace eonsp

#endif
