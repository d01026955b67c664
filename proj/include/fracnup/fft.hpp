#pragma once

#include <complex>
#include <vector>

namespace fracnup {

using cplx = std::complex<double>;

// Unnormalized d-dimensional complex DFT over an N^d row-major array.
// sign = -1 computes sum_j x_j e^{-2 pi i j k / N}; sign = +1 the inverse kernel.
void dft_inplace(std::vector<cplx>& data, int d, int N, int sign);

}  // namespace fracnup
