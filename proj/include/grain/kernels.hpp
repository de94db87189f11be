#pragma once

#include <cstddef>

namespace grain {
namespace kernels {

// Batched inner loops of the simulators.  Two implementations exist: a plain
// scalar reference and an AVX2 one compiled in its own translation unit; the
// active set is picked at runtime from CPU capabilities and can be forced
// for equivalence testing.  All operate on unit-square grains anchored at
// (u,v) with axis extents (rx, ry).
struct Ops {
  const char* name;

  // out[i] = r_min * u[i]^exponent
  void (*pow_transform)(const double* u, double* out, std::size_t n,
                        double r_min, double exponent);

  // sum of leb((0,X)x(0,Y) cap (u,u+rx]x(v,v+ry])
  double (*overlap_area_sum)(const double* u, const double* v,
                             const double* rx, const double* ry,
                             std::size_t n, double X, double Y);

  // number of grains covering the point (x,y)
  std::size_t (*cover_count)(const double* u, const double* v,
                             const double* rx, const double* ry,
                             std::size_t n, double x, double y);
};

const Ops& scalar_ops();
// nullptr when the binary lacks the AVX2 translation unit or the CPU the
// feature
const Ops* avx2_ops();
bool avx2_available();

// "scalar", "avx2", or "auto"; throws grain::Error on anything else or when
// avx2 is requested but unavailable.
void set_active(const char* which);
const Ops& active_ops();

}  // namespace kernels
}  // namespace grain
