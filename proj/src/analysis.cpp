#include "eonsp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <tuple>

#include "eonsp/errors.hpp"

namespace eonsp {

const char* growth_model_name(GrowthModel m)
{
    switch (m) {
    case GrowthModel::PowerLaw: return "power-law";
    case GrowthModel::Logarithmic: return "logarithmic";
    case GrowthModel::Linear: return "linear";
    case GrowthModel::NLogN: return "n-log-n";
    }
    return "?";
}

double FitResult::predict(double x) const
{
    switch (model) {
    case GrowthModel::PowerLaw: return coeff_a * std::pow(x, coeff_b);
    case GrowthModel::Logarithmic: return coeff_a + coeff_b * std::log(x);
    case GrowthModel::Linear: return coeff_a + coeff_b * x;
    case GrowthModel::NLogN: return coeff_a * x * std::log(x);
    }
    return 0;
}

namespace {

struct XY {
    double x;
    double y;
};

// Ordinary least squares y = a + b*f(x); returns (a, b).
template <typename F>
std::pair<double, double> linear_lsq(const std::vector<XY>& pts, F transform)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(pts.size());
    for (const XY& p : pts) {
        const double t = transform(p.x);
        sx += t;
        sy += p.y;
        sxx += t * t;
        sxy += t * p.y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0)
        return {sy / n, 0};
    const double b = (n * sxy - sx * sy) / denom;
    return {(sy - b * sx) / n, b};
}

double r_squared(const std::vector<XY>& pts, const FitResult& fit)
{
    double mean = 0;
    for (const XY& p : pts)
        mean += p.y;
    mean /= static_cast<double>(pts.size());
    double ss_res = 0, ss_tot = 0;
    for (const XY& p : pts) {
        ss_res += (p.y - fit.predict(p.x)) * (p.y - fit.predict(p.x));
        ss_tot += (p.y - mean) * (p.y - mean);
    }
    if (ss_tot == 0)
        return ss_res == 0 ? 1.0 : 0.0;
    return std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
}

std::vector<FitResult> fit_all_models(const std::vector<XY>& means, int sample_count)
{
    std::vector<FitResult> fits;

    { // power law from log-log least squares
        std::vector<XY> logs;
        logs.reserve(means.size());
        for (const XY& p : means)
            logs.push_back({std::log(p.x), std::log(p.y)});
        auto [a, b] = linear_lsq(logs, [](double t) { return t; });
        fits.push_back({GrowthModel::PowerLaw, std::exp(a), b, 0, sample_count});
    }
    {
        auto [a, b] = linear_lsq(means, [](double x) { return std::log(x); });
        fits.push_back({GrowthModel::Logarithmic, a, b, 0, sample_count});
    }
    {
        auto [a, b] = linear_lsq(means, [](double x) { return x; });
        fits.push_back({GrowthModel::Linear, a, b, 0, sample_count});
    }
    { // single coefficient: a = <y, g> / <g, g> with g = x log x
        double num = 0, den = 0;
        for (const XY& p : means) {
            const double g = p.x * std::log(p.x);
            num += p.y * g;
            den += g * g;
        }
        fits.push_back({GrowthModel::NLogN, den == 0 ? 0 : num / den, 0, 0, sample_count});
    }

    for (FitResult& fit : fits)
        fit.r_squared = r_squared(means, fit);
    std::stable_sort(fits.begin(), fits.end(),
                     [](const FitResult& a, const FitResult& b) {
                         return a.r_squared > b.r_squared;
                     });
    return fits;
}

} // namespace

std::vector<FitResult> fit_growth(const std::vector<CallRow>& rows, GrowthDimension dimension,
                                  Algorithm algorithm)
{
    std::map<double, std::pair<double, int>> groups; // x -> (sum t, count)
    for (const CallRow& row : rows) {
        if (row.call.algorithm != algorithm)
            continue;
        double x;
        switch (dimension) {
        case GrowthDimension::Vertices: x = row.meta.vertices; break;
        case GrowthDimension::Units: x = row.meta.units; break;
        case GrowthDimension::Utilization:
            x = (std::floor(row.call.utilization_before / kUtilizationBinWidth) + 0.5)
                * kUtilizationBinWidth;
            break;
        }
        auto& [sum, count] = groups[x];
        sum += static_cast<double>(row.call.time_ns);
        count += 1;
    }
    if (groups.size() < 4)
        throw InsufficientSpread("need at least 4 distinct values, got "
                                 + std::to_string(groups.size()));
    std::vector<XY> means;
    int samples = 0;
    for (const auto& [x, acc] : groups) {
        means.push_back({x, acc.first / acc.second});
        samples += acc.second;
    }
    return fit_all_models(means, samples);
}

UtilizationProfile utilization_profile(const std::vector<CallRow>& rows, Algorithm algorithm)
{
    std::map<int, std::pair<double, int>> bins;
    for (const CallRow& row : rows) {
        if (row.call.algorithm != algorithm)
            continue;
        auto& [sum, count] =
            bins[static_cast<int>(std::floor(row.call.utilization_before / kUtilizationBinWidth))];
        sum += static_cast<double>(row.call.time_ns);
        count += 1;
    }
    UtilizationProfile profile;
    std::vector<XY> pts;
    for (const auto& [bin, acc] : bins) {
        UtilizationBin b;
        b.center = (bin + 0.5) * kUtilizationBinWidth;
        b.mean_time_ns = acc.first / acc.second;
        b.count = acc.second;
        profile.bins.push_back(b);
        pts.push_back({b.center, b.mean_time_ns});
    }
    if (profile.bins.empty())
        return profile;
    const auto peak = std::max_element(profile.bins.begin(), profile.bins.end(),
                                       [](const UtilizationBin& a, const UtilizationBin& b) {
                                           return a.mean_time_ns < b.mean_time_ns;
                                       });
    profile.peak_center = peak->center;
    profile.linear_slope = linear_lsq(pts, [](double x) { return x; }).second;
    return profile;
}

double RatioCdf::quantile(double q) const
{
    if (sorted_ratios.empty())
        return 0;
    const double h = q * (static_cast<double>(sorted_ratios.size()) - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted_ratios.size() - 1);
    return sorted_ratios[lo] + (h - std::floor(h)) * (sorted_ratios[hi] - sorted_ratios[lo]);
}

RatioCdf speedup_cdf(const std::vector<CallRow>& rows)
{
    using Key = std::tuple<std::string, int, int, std::uint64_t, int>;
    std::map<Key, std::pair<std::int64_t, std::int64_t>> pairs; // (filtered, generic)
    for (const CallRow& row : rows) {
        Key key{row.meta.topology, row.meta.units, row.meta.mean_demand, row.meta.seed,
                row.call.call_index};
        auto& [filtered, generic] = pairs[key];
        auto& slot = row.call.algorithm == Algorithm::Filtered ? filtered : generic;
        if (slot != 0)
            throw UnmatchedRecords("duplicate " + std::string(algorithm_name(row.call.algorithm))
                                   + " record for " + row.meta.topology + " call "
                                   + std::to_string(row.call.call_index));
        slot = row.call.time_ns;
    }

    RatioCdf cdf;
    double sum_ratio = 0, sum_filtered = 0, sum_generic = 0;
    for (const auto& [key, times] : pairs) {
        if (times.first == 0 || times.second == 0)
            throw UnmatchedRecords("call " + std::to_string(std::get<4>(key)) + " of "
                                   + std::get<0>(key) + " lacks one algorithm tag");
        const double ratio =
            static_cast<double>(times.first) / static_cast<double>(times.second);
        cdf.sorted_ratios.push_back(ratio);
        sum_ratio += ratio;
        sum_filtered += static_cast<double>(times.first);
        sum_generic += static_cast<double>(times.second);
    }
    std::sort(cdf.sorted_ratios.begin(), cdf.sorted_ratios.end());
    if (!cdf.sorted_ratios.empty()) {
        const double n = static_cast<double>(cdf.sorted_ratios.size());
        cdf.mean_ratio = sum_ratio / n;
        cdf.ratio_of_means = sum_generic == 0 ? 0 : sum_filtered / sum_generic;
        cdf.median = cdf.quantile(0.5);
        cdf.fraction_above_one =
            static_cast<double>(std::count_if(cdf.sorted_ratios.begin(), cdf.sorted_ratios.end(),
                                              [](double r) { return r > 1.0; }))
            / n;
    }
    return cdf;
}

std::string render_cdf_svg(const RatioCdf& cdf)
{
    const int width = 640, height = 420, margin = 50;
    const double xmax = cdf.sorted_ratios.empty() ? 1.0 : std::min(cdf.quantile(0.99), 20.0);
    char buf[256];
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\">\n";
    svg += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", margin,
                  height - margin, width - margin, height - margin);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", margin,
                  margin, margin, height - margin);
    svg += buf;
    auto px = [&](double x) {
        return margin + (width - 2 * margin) * std::min(x, xmax) / xmax;
    };
    auto py = [&](double q) { return height - margin - (height - 2 * margin) * q; };
    svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    const std::size_t n = cdf.sorted_ratios.size();
    const std::size_t step = std::max<std::size_t>(1, n / 512);
    for (std::size_t i = 0; i < n; i += step) {
        std::snprintf(buf, sizeof buf, "%.1f,%.1f ", px(cdf.sorted_ratios[i]),
                      py(static_cast<double>(i + 1) / static_cast<double>(n)));
        svg += buf;
    }
    svg += "\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%d\" font-size=\"12\">time ratio filtered/generic "
                  "(mean %.3g, median %.3g, &gt;1: %.1f%%)</text>\n",
                  margin, margin - 14, cdf.mean_ratio, cdf.median,
                  100 * cdf.fraction_above_one);
    svg += buf;
    for (int tick = 0; tick <= 4; ++tick) {
        const double x = xmax * tick / 4;
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%d\" font-size=\"10\">%.2g</text>\n",
                      px(x) - 6, height - margin + 14, x);
        svg += buf;
        std::snprintf(buf, sizeof buf, "<text x=\"%d\" y=\"%.1f\" font-size=\"10\">%.2g</text>\n",
                      margin - 28, py(tick / 4.0) + 3, tick / 4.0);
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace eonsp
