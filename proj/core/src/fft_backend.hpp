#pragma once

#include <complex>

#include "fsct/grid.hpp"

namespace fsct::fft {

// Unnormalized transforms (plain exponential sums):
//   forward:  out[k] = sum_j in[j] e^{-2 pi i <j,k>/n}
//   backward: out[j] = sum_k in[k] e^{+2 pi i <j,k>/n}
// in and out must hold grid.size() elements and may alias.
void forward(const Grid& grid, const std::complex<double>* in,
             std::complex<double>* out);
void backward(const Grid& grid, const std::complex<double>* in,
              std::complex<double>* out);

}  // namespace fsct::fft
