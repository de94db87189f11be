#include "grain/grain_stream.hpp"

#include <algorithm>
#include <cmath>

#include "grain/kernels.hpp"

namespace grain {

namespace {

struct Component {
  bool x_edge;
  bool y_edge;
  double mean;
  double tilt;
};

// ellipse centered (cu,cv) with semi-axes (rx,ry) against (0,X)x(0,Y);
// the anisotropically scaled distance is separable, so clamping per axis
// finds its minimum over the rectangle
bool ellipse_meets_window(double cu, double cv, double rx, double ry,
                          double X, double Y) {
  double dx = (cu - std::clamp(cu, 0.0, X)) / rx;
  double dy = (cv - std::clamp(cv, 0.0, Y)) / ry;
  return dx * dx + dy * dy <= 1.0;
}

}  // namespace

double expected_grain_count(const ModelParams& params,
                            const ExtendedWindow& win) {
  validate(params);
  if (win.X < 0.0 || win.Y < 0.0)
    throw Error("window extents must be non-negative");
  double w = params.shape.width(), h = params.shape.height();
  double p = params.p;
  return win.X * win.Y + win.Y * w * params.moment(p) +
         win.X * h * params.moment(1.0 - p) + w * h * params.moment(1.0);
}

StreamStats grain_stream(const ModelParams& params, const ExtendedWindow& win,
                         SeededStream& rng,
                         const std::function<void(const GrainChunk&)>& sink,
                         std::uint64_t budget, std::size_t chunk_size) {
  validate(params);
  if (win.X < 0.0 || win.Y < 0.0)
    throw Error("window extents must be non-negative");
  const double alpha = params.alpha, p = params.p, r_min = params.r_min;
  const double X = win.X, Y = win.Y;
  const GrainShape& shape = params.shape;
  const double w = shape.width(), h = shape.height();
  const double bx0 = shape.bbox[0], bx1 = shape.bbox[2];
  const double by0 = shape.bbox[1], by1 = shape.bbox[3];

  const Component comps[4] = {
      {false, false, X * Y, 0.0},
      {true, false, Y * w * params.moment(p), p},
      {false, true, X * h * params.moment(1.0 - p), 1.0 - p},
      {true, true, w * h * params.moment(1.0), 1.0},
  };

  // draw all component totals first so the budget check sees the whole cost
  std::uint64_t counts[4];
  std::uint64_t total = 0;
  for (int c = 0; c < 4; ++c) {
    counts[c] = poisson_count(rng, comps[c].mean);
    total += counts[c];
  }
  if (total > budget)
    throw BudgetExceeded("window needs " + std::to_string(total) +
                         " grains, budget is " + std::to_string(budget));

  StreamStats stats;
  stats.generated = total;

  const kernels::Ops& ops = kernels::active_ops();
  const bool thin_disk = shape.kind == ShapeKind::UnitDisk;

  GrainChunk chunk;
  std::vector<double> ur, uu, uv;
  const double rxp_min = std::pow(r_min, p);
  const double ryp_min = std::pow(r_min, 1.0 - p);

  for (int c = 0; c < 4; ++c) {
    const Component& comp = comps[c];
    const double exponent = -1.0 / (alpha - comp.tilt);
    std::uint64_t left = counts[c];
    while (left > 0) {
      std::size_t n = static_cast<std::size_t>(
          std::min<std::uint64_t>(left, chunk_size));
      left -= n;
      ur.resize(n);
      uu.resize(n);
      uv.resize(n);
      chunk.u.resize(n);
      chunk.v.resize(n);
      chunk.rx.resize(n);
      chunk.ry.resize(n);
      rng.fill_unit(ur.data(), n);
      rng.fill_unit(uu.data(), n);
      rng.fill_unit(uv.data(), n);
      // both axis extents come from the same uniform, so no grain size is
      // ever materialized: r^p = r_min^p U^(exponent p)
      ops.pow_transform(ur.data(), chunk.rx.data(), n, rxp_min, exponent * p);
      ops.pow_transform(ur.data(), chunk.ry.data(), n, ryp_min,
                        exponent * (1.0 - p));
      for (std::size_t i = 0; i < n; ++i) {
        double rx = chunk.rx[i], ry = chunk.ry[i];
        chunk.u[i] = comp.x_edge ? -bx1 * rx + uu[i] * w * rx
                                 : uu[i] * X - bx0 * rx;
        chunk.v[i] = comp.y_edge ? -by1 * ry + uv[i] * h * ry
                                 : uv[i] * Y - by0 * ry;
      }
      if (thin_disk) {
        // the disk shape is origin-centered, so the germ anchor is already
        // the ellipse center; drop candidates whose ellipse misses the window
        std::size_t keep = 0;
        for (std::size_t i = 0; i < n; ++i) {
          double cu = chunk.u[i];
          double cv = chunk.v[i];
          if (ellipse_meets_window(cu, cv, chunk.rx[i], chunk.ry[i], X, Y)) {
            chunk.u[keep] = cu;
            chunk.v[keep] = cv;
            chunk.rx[keep] = chunk.rx[i];
            chunk.ry[keep] = chunk.ry[i];
            ++keep;
          }
        }
        chunk.u.resize(keep);
        chunk.v.resize(keep);
        chunk.rx.resize(keep);
        chunk.ry.resize(keep);
      }
      stats.emitted += chunk.size();
      if (chunk.size() > 0) sink(chunk);
    }
  }
  return stats;
}

}  // namespace grain
