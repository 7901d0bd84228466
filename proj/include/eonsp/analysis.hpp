#ifndef EONSP_ANALYSIS_HPP
#define EONSP_ANALYSIS_HPP

#include <string>
#include <vector>

#include "eonsp/csv.hpp"

namespace eonsp {

enum class GrowthModel { PowerLaw, Logarithmic, Linear, NLogN };

const char* growth_model_name(GrowthModel m);

// One fitted candidate model. Power law y = a*x^b takes its coefficients
// from least squares on the log-log means; the other models are fit
// directly. r_squared is computed in the original space so models are
// comparable, and clamped to [0, 1].
struct FitResult {
    GrowthModel model = GrowthModel::Linear;
    double coeff_a = 0;
    double coeff_b = 0; // exponent for PowerLaw, slope otherwise (unused by NLogN)
    double r_squared = 0;
    int sample_count = 0; // records behind the grouped means

    double predict(double x) const;
};

enum class GrowthDimension { Vertices, Units, Utilization };

// Groups records of one algorithm by the chosen dimension (utilization is
// binned at width 0.05), averages time per group, fits every candidate
// model, and returns them ranked by descending r_squared. Requires at
// least 4 distinct group values (throws InsufficientSpread).
std::vector<FitResult> fit_growth(const std::vector<CallRow>& rows, GrowthDimension dimension,
                                  Algorithm algorithm);

constexpr double kUtilizationBinWidth = 0.05;

struct UtilizationBin {
    double center = 0;
    double mean_time_ns = 0;
    int count = 0;
};

struct UtilizationProfile {
    std::vector<UtilizationBin> bins; // ascending centers, empty bins omitted
    double peak_center = 0;           // center of the maximum-mean bin
    double linear_slope = 0;          // least-squares slope over bin means
};

UtilizationProfile utilization_profile(const std::vector<CallRow>& rows, Algorithm algorithm);

// Per-call time ratios t_filtered / t_generic over matched record pairs
// (same topology, units, mean demand, seed and call index carrying both
// algorithm tags). Throws UnmatchedRecords when a call index has one tag
// but not the other.
struct RatioCdf {
    std::vector<double> sorted_ratios;
    double mean_ratio = 0;        // mean of per-call ratios (primary)
    double ratio_of_means = 0;    // total filtered time over total generic time
    double median = 0;
    double fraction_above_one = 0;

    // Linear interpolation on the sorted list, q in [0, 1].
    double quantile(double q) const;
};

RatioCdf speedup_cdf(const std::vector<CallRow>& rows);

// Minimal self-contained SVG line chart of the CDF (fraction of calls with
// ratio <= x), for the cdf --plot flag.
std::string render_cdf_svg(const RatioCdf& cdf);

} // namespace eonsp

#endif
