#include "fft.hpp"

#include <mutex>

#include <fftw3.h>

namespace abh::detail {
namespace {
std::mutex planner_mutex;  // FFTW planning is not thread-safe
}

std::vector<Complex> dft(const std::vector<Complex>& x, bool forward) {
    const int n = static_cast<int>(x.size());
    std::vector<Complex> in = x;
    std::vector<Complex> out(x.size());
    if (n == 0) return out;
    auto* in_ptr = reinterpret_cast<fftw_complex*>(in.data());
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex);
        plan = fftw_plan_dft_1d(n, in_ptr, out_ptr, forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace abh::detail
