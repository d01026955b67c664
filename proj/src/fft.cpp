#include "fracnup/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "fracnup/errors.hpp"

namespace fracnup {

void dft_inplace(std::vector<cplx>& data, int d, int N, int sign) {
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(N);
    require(data.size() == total, ErrorKind::size, "DFT buffer does not match N^d");
    std::vector<int> dims(d, N);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    // Planner calls are not thread safe; execution is.
    static std::mutex planner;
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner);
        plan = fftw_plan_dft(d, dims.data(), buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
    }
    require(plan != nullptr, ErrorKind::precondition, "FFTW failed to create a plan");
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(planner);
    fftw_destroy_plan(plan);
}

}  // namespace fracnup
