#include "grain/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstring>
#include <string>

#include "grain/errors.hpp"

namespace grain {
namespace kernels {

namespace {

void pow_transform_scalar(const double* u, double* out, std::size_t n,
                          double r_min, double exponent) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = r_min * std::pow(u[i], exponent);
}

double overlap_area_sum_scalar(const double* u, const double* v,
                               const double* rx, const double* ry,
                               std::size_t n, double X, double Y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ox = std::min(u[i] + rx[i], X) - std::max(u[i], 0.0);
    double oy = std::min(v[i] + ry[i], Y) - std::max(v[i], 0.0);
    if (ox > 0.0 && oy > 0.0) acc += ox * oy;
  }
  return acc;
}

std::size_t cover_count_scalar(const double* u, const double* v,
                               const double* rx, const double* ry,
                               std::size_t n, double x, double y) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool inx = x > u[i] && x <= u[i] + rx[i];
    bool iny = y > v[i] && y <= v[i] + ry[i];
    count += (inx && iny) ? 1 : 0;
  }
  return count;
}

const Ops scalar{"scalar", pow_transform_scalar, overlap_area_sum_scalar,
                 cover_count_scalar};

std::atomic<const Ops*> active{nullptr};

const Ops* pick_auto() {
  if (const Ops* a = avx2_ops()) return a;
  return &scalar;
}

}  // namespace

const Ops& scalar_ops() { return scalar; }

bool avx2_available() { return avx2_ops() != nullptr; }

void set_active(const char* which) {
  std::string w = which ? which : "";
  if (w == "scalar") {
    active.store(&scalar, std::memory_order_relaxed);
  } else if (w == "avx2") {
    const Ops* a = avx2_ops();
    if (!a) throw Error("avx2 kernels are not available on this machine");
    active.store(a, std::memory_order_relaxed);
  } else if (w == "auto") {
    active.store(pick_auto(), std::memory_order_relaxed);
  } else {
    throw Error("unknown kernel set '" + w + "' (scalar, avx2, auto)");
  }
}

const Ops& active_ops() {
  const Ops* cur = active.load(std::memory_order_relaxed);
  if (!cur) {
    cur = pick_auto();
    active.store(cur, std::memory_order_relaxed);
  }
  return *cur;
}

}  // namespace kernels
}  // namespace grain
