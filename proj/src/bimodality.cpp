#include "gridfreq/bimodality.hpp"

#include "gridfreq/errors.hpp"
#include "gridfreq/parallel.hpp"
#include "gridfreq/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace gridfreq {

namespace {

using Index = std::ptrdiff_t;

/// Greatest convex minorant touch points of the ECDF on [lo, hi]:
/// lower hull of (x_i, i).
std::vector<Index> lower_hull(const std::vector<double>& x, Index lo, Index hi) {
    std::vector<Index> h;
    for (Index i = lo; i <= hi; ++i) {
        while (h.size() >= 2) {
            const Index a = h[h.size() - 2], b = h.back();
            // pop b unless slope(a->b) < slope(b->i)
            if ((x[i] - x[b]) * static_cast<double>(b - a) >=
                (x[b] - x[a]) * static_cast<double>(i - b))
                h.pop_back();
            else
                break;
        }
        h.push_back(i);
    }
    return h;
}

/// Least concave majorant touch points: upper hull of (x_i, i+1).
std::vector<Index> upper_hull(const std::vector<double>& x, Index lo, Index hi) {
    std::vector<Index> h;
    for (Index i = lo; i <= hi; ++i) {
        while (h.size() >= 2) {
            const Index a = h[h.size() - 2], b = h.back();
            if ((x[i] - x[b]) * static_cast<double>(b - a) <=
                (x[b] - x[a]) * static_cast<double>(i - b))
                h.pop_back();
            else
                break;
        }
        h.push_back(i);
    }
    return h;
}

double interp(const std::vector<double>& x, Index a, Index b, Index t,
              double ya, double yb) {
    if (x[b] == x[a]) return ya;
    return ya + (x[t] - x[a]) * (yb - ya) / (x[b] - x[a]);
}

struct Gap {
    double d = 0.0;
    std::size_t ig = 0; ///< index into gcm: new low
    std::size_t ih = 0; ///< index into lcm: new high
};

/// Max gap between the LCM and the GCM over the touch points of both hulls
/// (in counts). Also picks the modal-interval bracket for the next
/// iteration: at an LCM touch the bracket is [gcm touch below, that LCM
/// touch]; at a GCM touch it is [that GCM touch, lcm touch above].
Gap max_gap(const std::vector<double>& x, const std::vector<Index>& gcm,
            const std::vector<Index>& lcm) {
    Gap best;
    best.ih = lcm.size() - 1;
    std::size_t gi = 0;
    for (std::size_t j = 0; j < lcm.size(); ++j) {
        const Index t = lcm[j];
        while (gi + 1 < gcm.size() && gcm[gi + 1] < t) ++gi;
        const Index a = gcm[gi];
        const Index b = gi + 1 < gcm.size() ? gcm[gi + 1] : gcm[gi];
        double g;
        if (t <= a || b == a)
            g = static_cast<double>(a);
        else
            g = interp(x, a, b, t, static_cast<double>(a), static_cast<double>(b));
        const double gap = static_cast<double>(t + 1) - g;
        if (gap > best.d) {
            best.d = gap;
            best.ig = gi;
            best.ih = j;
        }
    }
    std::size_t li = 0;
    for (std::size_t i = 0; i < gcm.size(); ++i) {
        const Index t = gcm[i];
        while (li + 1 < lcm.size() && lcm[li + 1] < t) ++li;
        const Index a = lcm[li];
        const Index b = li + 1 < lcm.size() ? lcm[li + 1] : lcm[li];
        double l;
        if (t <= a || b == a)
            l = static_cast<double>(a + 1);
        else
            l = interp(x, a, b, t, static_cast<double>(a + 1),
                       static_cast<double>(b + 1));
        const double gap = l - static_cast<double>(t);
        if (gap > best.d) {
            best.d = gap;
            best.ig = i;
            best.ih = (li + 1 < lcm.size() && lcm[li] < t) ? li + 1 : li;
        }
    }
    return best;
}

/// Max deviation of the ECDF above the GCM on [gcm[0], gcm[ig]] (counts).
double gcm_dev(const std::vector<double>& x, const std::vector<Index>& gcm,
               std::size_t ig) {
    double best = 1.0;
    for (std::size_t k = 0; k < ig; ++k) {
        const Index a = gcm[k], b = gcm[k + 1];
        if (x[b] == x[a]) continue;
        for (Index t = a; t <= b; ++t) {
            const double g =
                interp(x, a, b, t, static_cast<double>(a), static_cast<double>(b));
            best = std::max(best, static_cast<double>(t + 1) - g);
        }
    }
    return best;
}

/// Max deviation of the ECDF below the LCM on [lcm[ih], lcm.back()].
double lcm_dev(const std::vector<double>& x, const std::vector<Index>& lcm,
               std::size_t ih) {
    double best = 1.0;
    for (std::size_t k = ih; k + 1 < lcm.size(); ++k) {
        const Index a = lcm[k], b = lcm[k + 1];
        if (x[b] == x[a]) continue;
        for (Index t = a; t <= b; ++t) {
            const double l = interp(x, a, b, t, static_cast<double>(a + 1),
                                    static_cast<double>(b + 1));
            best = std::max(best, l - static_cast<double>(t));
        }
    }
    return best;
}

DipResult dip_sorted(std::vector<double> x) {
    const std::size_t n = x.size();
    Index low = 0, high = static_cast<Index>(n) - 1;
    double dipv = 1.0;
    while (true) {
        const auto gcm = lower_hull(x, low, high);
        const auto lcm = upper_hull(x, low, high);
        double d;
        std::size_t ig, ih;
        Index new_low, new_high;
        if (gcm.size() == 2 && lcm.size() == 2) {
            d = 1.0;
            ig = 0;
            ih = lcm.size() - 1;
            new_low = low;
            new_high = high;
        } else {
            const Gap gap = max_gap(x, gcm, lcm);
            d = gap.d;
            ig = gap.ig;
            ih = gap.ih;
            new_low = gcm[ig];
            new_high = lcm[ih];
        }
        if (d < dipv) break;
        dipv = std::max(dipv, gcm_dev(x, gcm, ig));
        dipv = std::max(dipv, lcm_dev(x, lcm, ih));
        if (new_low == low && new_high == high) {
            dipv = std::max(dipv, d);
            break;
        }
        low = new_low;
        high = new_high;
    }
    DipResult r;
    r.dip = dipv / (2.0 * static_cast<double>(n));
    r.n = n;
    r.modal_lo = x[low];
    r.modal_hi = x[high];
    return r;
}

} // namespace

DipResult dip_statistic(const std::vector<double>& samples) {
    // n = 2 and n = 3 are well defined (the two-point sample {0, 1} is the
    // canonical dip = 0.25 case), so only n < 2 is rejected.
    if (samples.size() < 2)
        throw TooFewSamples("dip_statistic: need at least 2 samples");
    std::vector<double> x(samples);
    std::sort(x.begin(), x.end());
    if (x.front() == x.back())
        throw DegenerateDistribution("dip_statistic: all values identical");
    return dip_sorted(std::move(x));
}

DipResult dip_statistic_pvalue(const std::vector<double>& samples,
                               std::size_t n_boot, std::uint64_t seed) {
    DipResult r = dip_statistic(samples);
    const std::size_t n = samples.size();
    std::vector<double> boot(n_boot);
    parallel_for(n_boot, [&](std::size_t k) {
        Rng rng(derive_seed(seed, k));
        std::vector<double> u(n);
        for (auto& v : u) v = rng.uniform();
        std::sort(u.begin(), u.end());
        boot[k] = dip_sorted(std::move(u)).dip;
    });
    std::size_t exceed = 0;
    for (double b : boot)
        if (b >= r.dip) ++exceed;
    r.p_value = static_cast<double>(1 + exceed) / static_cast<double>(n_boot + 1);
    return r;
}

} // namespace gridfreq
