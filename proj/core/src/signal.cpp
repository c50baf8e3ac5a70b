#include "fsct/signal.hpp"

#include <cmath>
#include <utility>

#include "fsct/errors.hpp"

namespace fsct {
namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_values(const Grid& grid, const std::vector<Complex>& v,
                  const char* what) {
  if (v.size() != grid.size()) {
    throw ConfigError(std::string(what) + ": value count " +
                      std::to_string(v.size()) + " does not match grid " +
                      grid.describe());
  }
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ConfigError(std::string(what) + ": non-finite value");
    }
  }
}

double sum_abs2(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

double sum_abs(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::abs(z);
  return s;
}

double max_abs_of(std::span<const Complex> v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

Grid::Grid(int dim, int samples_per_axis) : d_(dim), n_(samples_per_axis) {
  if (d_ != 1 && d_ != 2) {
    throw ConfigError("grid dimension must be 1 or 2, got " +
                      std::to_string(d_));
  }
  if (n_ < 4 || !is_pow2(n_)) {
    throw ConfigError("grid samples per axis must be a power of two >= 4, "
                      "got " +
                      std::to_string(n_));
  }
  size_ = d_ == 1 ? static_cast<std::size_t>(n_)
                  : static_cast<std::size_t>(n_) * n_;
}

std::string Grid::describe() const {
  return "d=" + std::to_string(d_) + " n=" + std::to_string(n_);
}

Signal::Signal(const Grid& grid)
    : grid_(grid), values_(grid.size(), Complex(0.0, 0.0)) {}

Signal::Signal(const Grid& grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  check_values(grid_, values_, "Signal");
}

double Signal::l2() const { return std::sqrt(sum_abs2(values_) * grid_.cell()); }

double Signal::l1() const { return sum_abs(values_) * grid_.cell(); }

double Signal::max_abs() const { return max_abs_of(values_); }

Spectrum::Spectrum(const Grid& grid)
    : grid_(grid), values_(grid.size(), Complex(0.0, 0.0)) {}

Spectrum::Spectrum(const Grid& grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  check_values(grid_, values_, "Spectrum");
}

double Spectrum::l2() const { return std::sqrt(sum_abs2(values_)); }

double Spectrum::max_abs() const { return max_abs_of(values_); }

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (!(a == b)) {
    throw ConfigError(std::string(where) + ": grid mismatch (" + a.describe() +
                      " vs " + b.describe() + ")");
  }
}

Signal operator+(const Signal& a, const Signal& b) {
  require_same_grid(a.grid(), b.grid(), "Signal +");
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Signal(a.grid(), std::move(out));
}

Signal operator-(const Signal& a, const Signal& b) {
  require_same_grid(a.grid(), b.grid(), "Signal -");
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Signal(a.grid(), std::move(out));
}

Signal scale(const Signal& f, Complex s) {
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * f[i];
  return Signal(f.grid(), std::move(out));
}

Spectrum scale(const Spectrum& F, Complex s) {
  std::vector<Complex> out(F.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * F[i];
  return Spectrum(F.grid(), std::move(out));
}

Spectrum pointwise_multiply(const Spectrum& a, const Spectrum& b) {
  require_same_grid(a.grid(), b.grid(), "pointwise_multiply");
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return Spectrum(a.grid(), std::move(out));
}

Signal modulus(const Signal& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = Complex(std::abs(f[i]), 0.0);
  return Signal(f.grid(), std::move(out));
}

Complex inner(const Signal& f, const Signal& g) {
  require_same_grid(f.grid(), g.grid(), "inner");
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
  return s * f.grid().cell();
}

Signal delta(const Grid& grid) {
  std::vector<Complex> out(grid.size(), Complex(0.0, 0.0));
  out[0] = Complex(1.0 / grid.cell(), 0.0);
  return Signal(grid, std::move(out));
}

Signal constant(const Grid& grid, Complex value) {
  return Signal(grid, std::vector<Complex>(grid.size(), value));
}

}  // namespace fsct
