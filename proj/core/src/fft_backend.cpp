#include "fft_backend.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace fsct::fft {
namespace {

// FFTW plans are created with FFTW_ESTIMATE: planning is heuristic only,
// so repeated runs produce bit-identical results. Plans own aligned
// scratch buffers; the cache mutex also serializes execution since the
// buffers are shared.
struct Plan {
  fftw_plan plan = nullptr;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;

  Plan(const Grid& grid, int sign) {
    const std::size_t count = grid.size();
    in = fftw_alloc_complex(count);
    out = fftw_alloc_complex(count);
    if (grid.dim() == 1) {
      plan = fftw_plan_dft_1d(grid.n(), in, out, sign, FFTW_ESTIMATE);
    } else {
      plan = fftw_plan_dft_2d(grid.n(), grid.n(), in, out, sign,
                              FFTW_ESTIMATE);
    }
  }
  ~Plan() {
    if (plan) fftw_destroy_plan(plan);
    if (in) fftw_free(in);
    if (out) fftw_free(out);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
};

class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void execute(const Grid& grid, int sign, const std::complex<double>* in,
               std::complex<double>* out) {
    std::scoped_lock lock(mutex_);
    auto key = std::make_tuple(grid.dim(), grid.n(), sign);
    auto it = plans_.find(key);
    if (it == plans_.end()) {
      it = plans_.emplace(key, std::make_unique<Plan>(grid, sign)).first;
    }
    Plan& p = *it->second;
    const std::size_t bytes = grid.size() * sizeof(fftw_complex);
    std::memcpy(p.in, in, bytes);
    fftw_execute(p.plan);
    // std::complex<double> is layout-compatible with double[2].
    std::memcpy(static_cast<void*>(out), p.out, bytes);
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<Plan>> plans_;
};

}  // namespace

void forward(const Grid& grid, const std::complex<double>* in,
             std::complex<double>* out) {
  PlanCache::instance().execute(grid, FFTW_FORWARD, in, out);
}

void backward(const Grid& grid, const std::complex<double>* in,
              std::complex<double>* out) {
  PlanCache::instance().execute(grid, FFTW_BACKWARD, in, out);
}

}  // namespace fsct::fft
