#ifndef GRIDFREQ_TESTS_DIP_REFERENCE_HPP
#define GRIDFREQ_TESTS_DIP_REFERENCE_HPP

#include <vector>

namespace gridfreq_tests {

/// Independent quadratic-time dip computation: binary search on the band
/// half-width d, with feasibility decided by a convex-polygon DP over
/// (ECDF value, slope) states for the convex and concave chains, including
/// the slope coupling across the modal gap. Used only as a test oracle.
double dip_reference(std::vector<double> samples, double tol = 1e-14);

} // namespace gridfreq_tests

#endif
