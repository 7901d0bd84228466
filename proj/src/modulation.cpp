#include "eonsp/modulation.hpp"

#include <charconv>
#include <cstdio>

#include "eonsp/errors.hpp"

namespace eonsp {

ModulationTable::ModulationTable(std::vector<Level> levels) : levels_(std::move(levels))
{
    if (levels_.empty())
        throw ConfigError("modulation table needs at least one level");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (levels_[i].reach <= 0 || levels_[i].divisor < 1)
            throw ConfigError("modulation level " + std::to_string(i + 1)
                              + ": reach must be positive, divisor >= 1");
        if (i > 0
            && (levels_[i].reach >= levels_[i - 1].reach
                || levels_[i].divisor <= levels_[i - 1].divisor))
            throw ConfigError("modulation levels must have strictly decreasing reach "
                              "and strictly increasing divisors");
    }
}

ModulationTable ModulationTable::default_table(double longest_sp, int levels, double reach_factor)
{
    if (longest_sp <= 0)
        throw ConfigError("default_table: longest shortest path must be positive");
    if (levels < 1)
        throw ConfigError("default_table: need at least one level");
    std::vector<Level> out;
    double reach = reach_factor * longest_sp;
    for (int m = 1; m <= levels; ++m) {
        out.push_back({reach, m});
        reach /= 2;
    }
    return ModulationTable(std::move(out));
}

ModulationTable ModulationTable::from_string(const std::string& text)
{
    std::vector<Level> levels;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    while (p < end) {
        Level lvl;
        char* after = nullptr;
        lvl.reach = std::strtod(p, &after);
        if (after == p || after >= end || *after != ':')
            throw ParseError("modulation table: expected 'reach:divisor' in '" + text + "'");
        auto r = std::from_chars(after + 1, end, lvl.divisor);
        if (r.ec != std::errc{})
            throw ParseError("modulation table: bad divisor in '" + text + "'");
        levels.push_back(lvl);
        p = r.ptr;
        if (p < end) {
            if (*p != ',')
                throw ParseError("modulation table: expected ',' in '" + text + "'");
            ++p;
        }
    }
    return ModulationTable(std::move(levels));
}

std::optional<ModulationTable::Requirement> ModulationTable::requirement(int demand_units,
                                                                         double cost) const
{
    if (cost > levels_.front().reach)
        return std::nullopt;
    // Reaches strictly decrease: the feasible levels form a prefix, and the
    // last of them has the largest divisor, hence the minimal width.
    int best = 1;
    for (int m = 2; m <= level_count(); ++m) {
        if (levels_[m - 1].reach < cost)
            break;
        best = m;
    }
    const int divisor = levels_[best - 1].divisor;
    return Requirement{best, (demand_units + divisor - 1) / divisor};
}

std::optional<int> ModulationTable::required_width(int demand_units, double cost) const
{
    auto req = requirement(demand_units, cost);
    if (!req)
        return std::nullopt;
    return req->width;
}

std::optional<int> ModulationTable::best_level(int demand_units, double cost) const
{
    auto req = requirement(demand_units, cost);
    if (!req)
        return std::nullopt;
    return req->level;
}

std::string ModulationTable::to_string() const
{
    std::string out;
    char buf[64];
    for (const Level& lvl : levels_) {
        if (!out.empty())
            out += ',';
        std::snprintf(buf, sizeof buf, "%.17g:%d", lvl.reach, lvl.divisor);
        out += buf;
    }
    return out;
}

} // namespace eonsp
