#include "fsct/transforms.hpp"

#include <cmath>
#include <numbers>

#include "fsct/errors.hpp"
#include "fft_backend.hpp"

namespace fsct {
namespace {

void require_dim(const Grid& grid, std::span<const int> v, const char* where) {
  if (static_cast<int>(v.size()) != grid.dim()) {
    throw ConfigError(std::string(where) + ": expected " +
                      std::to_string(grid.dim()) + " components, got " +
                      std::to_string(v.size()));
  }
}

}  // namespace

Spectrum dft(const Signal& f) {
  std::vector<Complex> out(f.size());
  fft::forward(f.grid(), f.values().data(), out.data());
  const double cell = f.grid().cell();
  for (Complex& z : out) z *= cell;
  return Spectrum(f.grid(), std::move(out));
}

Signal idft(const Spectrum& F) {
  std::vector<Complex> out(F.size());
  fft::backward(F.grid(), F.values().data(), out.data());
  return Signal(F.grid(), std::move(out));
}

Signal circular_convolve(const Signal& f, const Signal& g) {
  require_same_grid(f.grid(), g.grid(), "circular_convolve");
  return idft(pointwise_multiply(dft(f), dft(g)));
}

Signal translate(const Signal& f, std::span<const int> t) {
  const Grid& grid = f.grid();
  require_dim(grid, t, "translate");
  std::vector<Complex> out(f.size());
  if (grid.dim() == 1) {
    for (int i = 0; i < grid.n(); ++i)
      out[grid.at(i)] = f[grid.at(grid.wrap(i - t[0]))];
  } else {
    for (int i0 = 0; i0 < grid.n(); ++i0)
      for (int i1 = 0; i1 < grid.n(); ++i1)
        out[grid.at(i0, i1)] =
            f[grid.at(grid.wrap(i0 - t[0]), grid.wrap(i1 - t[1]))];
  }
  return Signal(grid, std::move(out));
}

Signal modulate(const Signal& f, std::span<const int> k) {
  const Grid& grid = f.grid();
  require_dim(grid, k, "modulate");
  const double step = 2.0 * std::numbers::pi / grid.n();
  std::vector<Complex> out(f.size());
  if (grid.dim() == 1) {
    for (int i = 0; i < grid.n(); ++i)
      out[grid.at(i)] = std::polar(1.0, step * k[0] * i) * f[grid.at(i)];
  } else {
    for (int i0 = 0; i0 < grid.n(); ++i0)
      for (int i1 = 0; i1 < grid.n(); ++i1)
        out[grid.at(i0, i1)] =
            std::polar(1.0, step * (k[0] * i0 + k[1] * i1)) *
            f[grid.at(i0, i1)];
  }
  return Signal(grid, std::move(out));
}

Signal involute(const Signal& f) {
  const Grid& grid = f.grid();
  std::vector<Complex> out(f.size());
  if (grid.dim() == 1) {
    for (int i = 0; i < grid.n(); ++i)
      out[grid.at(i)] = std::conj(f[grid.at(grid.wrap(-i))]);
  } else {
    for (int i0 = 0; i0 < grid.n(); ++i0)
      for (int i1 = 0; i1 < grid.n(); ++i1)
        out[grid.at(i0, i1)] =
            std::conj(f[grid.at(grid.wrap(-i0), grid.wrap(-i1))]);
  }
  return Signal(grid, std::move(out));
}

}  // namespace fsct
