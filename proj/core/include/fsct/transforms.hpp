#pragma once

#include <span>

#include "fsct/signal.hpp"

namespace fsct {

// Discrete surrogate of the Fourier transform on the unit torus:
//   dft(f)[k]  = cell * sum_j f[j] e^{-2 pi i <j,k>/n}
//   idft(F)[j] =        sum_k F[k] e^{+2 pi i <j,k>/n}
// The pair is unitary in the weighted norms: ||f||_2 == ||dft(f)||_2
// (Plancherel) and idft(dft(f)) == f up to rounding.
Spectrum dft(const Signal& f);
Signal idft(const Spectrum& F);

// Periodized convolution with the cell quadrature weight,
//   (f * g)[j] = cell * sum_i f[i] g[j - i mod n],
// evaluated spectrally as idft(dft(f) . dft(g)).
Signal circular_convolve(const Signal& f, const Signal& g);

// T_t f = f(. - t), t in integer samples per axis (t.size() == d).
Signal translate(const Signal& f, std::span<const int> t);

// M_k f = e^{2 pi i <x,k>} f(x), k an integer frequency vector.
Signal modulate(const Signal& f, std::span<const int> k);

// I f = conj(f(-.)).
Signal involute(const Signal& f);

}  // namespace fsct
