#include "gridfreq/increments.hpp"

#include <cmath>

namespace gridfreq {

IncrementReport increment_report(const IncrementSeries& increments) {
    IncrementReport rep;
    rep.tau = increments.tau;
    rep.moments = moments(increments.values);
    rep.density = kde(increments.values);
    const double sigma = std::sqrt(rep.moments.variance);
    std::size_t over3 = 0, over5 = 0;
    for (double v : increments.values) {
        const double a = std::fabs(v);
        if (a > 3.0 * sigma) ++over3;
        if (a > 5.0 * sigma) ++over5;
    }
    const double n = static_cast<double>(increments.values.size());
    rep.exceed_3sigma = static_cast<double>(over3) / n;
    rep.exceed_5sigma = static_cast<double>(over5) / n;
    return rep;
}

IncrementReport increment_report(const SegmentedSeries& series, double tau) {
    return increment_report(to_increments(series, tau));
}

} // namespace gridfreq
