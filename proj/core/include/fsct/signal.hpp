#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fsct/grid.hpp"

namespace fsct {

using Complex = std::complex<double>;

// Complex-valued function sampled on a Grid. Immutable after construction;
// all operations on signals are pure functions returning new values.
class Signal {
 public:
  explicit Signal(const Grid& grid);  // all zeros
  Signal(const Grid& grid, std::vector<Complex> values);

  const Grid& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  // L2 norm with the grid quadrature weight, sqrt(sum |f|^2 * cell).
  double l2() const;
  // L1 norm with the grid quadrature weight.
  double l1() const;
  double max_abs() const;

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

// Frequency-side counterpart of Signal, indexed by integer frequencies in
// [-n/2, n/2)^d (DFT storage layout). Frequency-domain norms carry no
// quadrature weight (counting measure on the integer lattice).
class Spectrum {
 public:
  explicit Spectrum(const Grid& grid);
  Spectrum(const Grid& grid, std::vector<Complex> values);

  const Grid& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  double l2() const;
  double max_abs() const;

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

Signal operator+(const Signal& a, const Signal& b);
Signal operator-(const Signal& a, const Signal& b);
Signal scale(const Signal& f, Complex s);
Spectrum scale(const Spectrum& F, Complex s);
Spectrum pointwise_multiply(const Spectrum& a, const Spectrum& b);

// Pointwise |f|, re-embedded as a complex signal with zero imaginary part.
Signal modulus(const Signal& f);

// <f, g> = sum f * conj(g) * cell  (grid surrogate of the L2 inner product).
Complex inner(const Signal& f, const Signal& g);

// Unit-mass impulse at the origin: value n^d at index 0, so that
// circular_convolve(f, delta) == f under the quadrature-weighted convolution.
Signal delta(const Grid& grid);
Signal constant(const Grid& grid, Complex value);

void require_same_grid(const Grid& a, const Grid& b, const char* where);

}  // namespace fsct
