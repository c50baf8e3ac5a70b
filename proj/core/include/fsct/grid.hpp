#pragma once

#include <cstddef>
#include <string>

namespace fsct {

// Sampling lattice for the unit torus [0,1)^d, d in {1,2}, with n samples
// per axis (n a power of two, n >= 4). Every signal, spectrum, frame and
// deformation field taking part in one computation shares a single Grid.
//
// Frequencies are the integers [-n/2, n/2) per axis, stored in the usual
// DFT layout (index a holds frequency a for a < n/2 and a-n otherwise).
class Grid {
 public:
  Grid(int dim, int samples_per_axis);

  int dim() const { return d_; }
  int n() const { return n_; }
  double spacing() const { return 1.0 / n_; }
  std::size_t size() const { return size_; }

  // Quadrature weight of one cell, spacing^d. All space-domain norms and
  // integrals carry this weight so values track the continuum as n grows.
  double cell() const { return d_ == 1 ? spacing() : spacing() * spacing(); }

  int freq_of_index(int a) const { return a <= n_ / 2 - 1 ? a : a - n_; }
  int index_of_freq(int k) const { return k >= 0 ? k : k + n_; }
  int wrap(int i) const {
    int r = i % n_;
    return r < 0 ? r + n_ : r;
  }

  // Row-major flat index; no wrapping, arguments must be in [0, n).
  std::size_t at(int i0, int i1 = 0) const {
    return d_ == 1 ? static_cast<std::size_t>(i0)
                   : static_cast<std::size_t>(i0) * n_ + i1;
  }

  std::string describe() const;

  bool operator==(const Grid&) const = default;

 private:
  int d_;
  int n_;
  std::size_t size_;
};

}  // namespace fsct
