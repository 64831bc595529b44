#include "gridfreq/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace gridfreq {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution of an
// existing plan on its own buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

std::vector<std::complex<double>> rfft(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<double> in(x);
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(
            static_cast<int>(n), in.data(),
            reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& spec,
                          std::size_t n) {
    std::vector<std::complex<double>> in(spec);
    std::vector<double> out(n);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_c2r_1d(
            static_cast<int>(n),
            reinterpret_cast<fftw_complex*>(in.data()), out.data(),
            FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : out) v *= scale;
    return out;
}

} // namespace gridfreq
