#include "eonsp/csv.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <type_traits>

#include "eonsp/errors.hpp"

namespace eonsp {

std::string format_call_row(const SimMeta& meta, const CallRecord& rec)
{
    char buf[320];
    char cost[40] = "";
    char level[16] = "";
    char wstart[16] = "";
    char wwidth[16] = "";
    char hops[16] = "";
    if (rec.accepted) {
        std::snprintf(cost, sizeof cost, "%.17g", rec.cost);
        std::snprintf(level, sizeof level, "%d", rec.level);
        std::snprintf(wstart, sizeof wstart, "%d", rec.window.start);
        std::snprintf(wwidth, sizeof wwidth, "%d", rec.window.width);
        std::snprintf(hops, sizeof hops, "%d", rec.hops);
    }
    std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%d,%llu,%d,%.9g,%s,%s,%s,%s,%s,%s,%s,%lld",
                  meta.topology.c_str(), meta.vertices, meta.edges, meta.units, meta.mean_demand,
                  static_cast<unsigned long long>(meta.seed), rec.call_index,
                  rec.utilization_before, algorithm_name(rec.algorithm),
                  rec.accepted ? "accepted" : "blocked", cost, level, wstart, wwidth, hops,
                  static_cast<long long>(rec.time_ns));
    return buf;
}

void write_calls_csv(const std::string& path, const SimMeta& meta,
                     const std::vector<CallRecord>& records)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open " + path + " for writing");
    out << kCallsCsvHeader << '\n';
    for (const CallRecord& rec : records)
        out << format_call_row(meta, rec) << '\n';
    if (!out.flush())
        throw ParseError("write failed: " + path);
}

namespace {

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

template <typename T>
T parse_number(const std::string& field, const char* what, const std::string& where)
{
    T value{};
    if constexpr (std::is_floating_point_v<T>) {
        char* end = nullptr;
        value = static_cast<T>(std::strtod(field.c_str(), &end));
        if (end != field.c_str() + field.size() || field.empty())
            throw ParseError(where + ": bad " + what + " '" + field + "'");
    } else {
        auto r = std::from_chars(field.data(), field.data() + field.size(), value);
        if (r.ec != std::errc{} || r.ptr != field.data() + field.size())
            throw ParseError(where + ": bad " + what + " '" + field + "'");
    }
    return value;
}

} // namespace

std::vector<CallRow> read_calls_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::vector<CallRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        if (line == kCallsCsvHeader)
            continue; // header (possibly repeated in concatenated files)
        const std::string where = path + ":" + std::to_string(lineno);
        const auto f = split_fields(line);
        if (f.size() != 16)
            throw ParseError(where + ": expected 16 fields, got " + std::to_string(f.size()));
        CallRow row;
        row.meta.topology = f[0];
        row.meta.vertices = parse_number<int>(f[1], "vertices", where);
        row.meta.edges = parse_number<int>(f[2], "edges", where);
        row.meta.units = parse_number<int>(f[3], "units", where);
        row.meta.mean_demand = parse_number<int>(f[4], "mean_demand", where);
        row.meta.seed = parse_number<std::uint64_t>(f[5], "seed", where);
        row.call.call_index = parse_number<int>(f[6], "call_index", where);
        row.call.utilization_before = parse_number<double>(f[7], "utilization", where);
        if (f[8] == "filtered")
            row.call.algorithm = Algorithm::Filtered;
        else if (f[8] == "generic")
            row.call.algorithm = Algorithm::Generic;
        else
            throw ParseError(where + ": bad algorithm '" + f[8] + "'");
        if (f[9] == "accepted")
            row.call.accepted = true;
        else if (f[9] == "blocked")
            row.call.accepted = false;
        else
            throw ParseError(where + ": bad outcome '" + f[9] + "'");
        if (row.call.accepted) {
            row.call.cost = parse_number<double>(f[10], "cost", where);
            row.call.level = parse_number<int>(f[11], "level", where);
            row.call.window.start = parse_number<int>(f[12], "window_start", where);
            row.call.window.width = parse_number<int>(f[13], "window_width", where);
            row.call.hops = parse_number<int>(f[14], "hops", where);
        }
        row.call.time_ns = parse_number<std::int64_t>(f[15], "time_ns", where);
        rows.push_back(std::move(row));
    }
    return rows;
}

void merge_calls_csv(const std::vector<std::string>& inputs, const std::string& output)
{
    std::ofstream out(output);
    if (!out)
        throw ParseError("cannot open " + output + " for writing");
    out << kCallsCsvHeader << '\n';
    for (const std::string& input : inputs) {
        std::ifstream in(input);
        if (!in)
            throw ParseError("cannot open " + input);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line == kCallsCsvHeader)
                continue;
            out << line << '\n';
        }
    }
    if (!out.flush())
        throw ParseError("write failed: " + output);
}

} // namespace eonsp
