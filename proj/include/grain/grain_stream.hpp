#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "grain/params.hpp"
#include "grain/rng.hpp"

namespace grain {

inline constexpr std::uint64_t default_grain_budget = 100000000;  // 1e8 grains

// Simulation window (0,X) x (0,Y).  Either extent may be 0 to collapse the
// window onto a segment (useful for covariance estimation along a line).
struct ExtendedWindow {
  double X = 1.0;
  double Y = 1.0;
};

struct GrainInstance {
  double u, v;  // anchor: lower-left corner for square grains, center for disks
  double r;     // raw size
};

// Structure-of-arrays batch of grains, pre-scaled to axis extents
// rx = r^p, ry = r^(1-p).  For square grains (u,v) is the lower-left corner
// and the grain is (u, u+rx] x (v, v+ry]; for disk grains (u,v) is the
// center and (rx, ry) the semi-axes.
struct GrainChunk {
  std::vector<double> u, v, rx, ry;
  std::size_t size() const { return u.size(); }
};

struct StreamStats {
  std::uint64_t generated = 0;  // drawn from the boundary decomposition
  std::uint64_t emitted = 0;    // actually passed to the sink
};

// Expected number of grains whose bounding box meets the window; this is
// also the Poisson mean of the generated count.
double expected_grain_count(const ModelParams& params, const ExtendedWindow& win);

// Streams every grain of the stationary model that intersects the window,
// in chunks, without any size truncation: grains anchored outside the
// window are produced by three boundary components with size-tilted Pareto
// draws.  For disk grains candidates whose ellipse misses the window are
// dropped (bounding boxes overshoot by at most ~27%); custom shapes keep
// bounding-box semantics.  Throws BudgetExceeded when the total grain count
// drawn for this window exceeds the budget.
StreamStats grain_stream(const ModelParams& params, const ExtendedWindow& win,
                         SeededStream& rng,
                         const std::function<void(const GrainChunk&)>& sink,
                         std::uint64_t budget = default_grain_budget,
                         std::size_t chunk_size = std::size_t{1} << 16);

}  // namespace grain
