#pragma once

#include <vector>

#include "abh/types.hpp"

namespace abh::detail {

/// Unnormalised DFT, X_k = sum_j x_j e^{-+2 pi i jk/N} (minus sign when
/// forward). Any N; backed by FFTW.
std::vector<Complex> dft(const std::vector<Complex>& x, bool forward);

}  // namespace abh::detail
