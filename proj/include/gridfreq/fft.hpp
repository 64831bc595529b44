#ifndef GRIDFREQ_FFT_HPP
#define GRIDFREQ_FFT_HPP

#include <complex>
#include <vector>

namespace gridfreq {

/// Real-to-complex FFT of a length-n real signal; returns n/2+1 spectrum
/// bins (unnormalized, FFTW convention). Thread-safe: FFTW plan creation is
/// serialized internally.
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

/// Inverse of rfft for an original length n; output is normalized by 1/n so
/// that irfft(rfft(x), n) == x up to round-off.
std::vector<double> irfft(const std::vector<std::complex<double>>& spec,
                          std::size_t n);

} // namespace gridfreq

#endif // GRIDFREQ_FFT_HPP
