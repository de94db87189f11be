#pragma once

#include <array>
#include <functional>
#include <string>

#include "grain/errors.hpp"

namespace grain {

enum class ShapeKind { UnitSquare, UnitDisk, Custom };

// The template set B of the grain model.  A grain attached to (u,v) with
// size r is the image of B under (t,s) = (u + r^p t', v + r^(1-p) s').
//
// UnitSquare is (0,1]^2 (anchored at its lower-left corner), UnitDisk is the
// centered disk of radius 1.  Custom shapes supply an indicator together
// with a bounding box, the area, and the vertical section length
// u -> leb{ s : (u,s) in B }.
struct GrainShape {
  ShapeKind kind = ShapeKind::UnitSquare;
  std::array<double, 4> bbox = {0.0, 0.0, 1.0, 1.0};  // x0, y0, x1, y1
  double area = 1.0;
  std::function<bool(double, double)> indicator;
  std::function<double(double)> section;

  static GrainShape unit_square();
  static GrainShape unit_disk();
  static GrainShape custom(std::function<bool(double, double)> ind,
                           std::array<double, 4> box, double area,
                           std::function<double(double)> section);

  double width() const { return bbox[2] - bbox[0]; }
  double height() const { return bbox[3] - bbox[1]; }
  bool contains(double u, double v) const;
  // Length of the vertical section { s : (u,s) in B }.
  double section_length(double u) const;
  const char* name() const;
};

// Pareto(alpha, r_min) grain sizes: P(R > r) = (r_min/r)^alpha for
// r >= r_min.  The regularly varying tail has scale c_f = alpha*r_min^alpha.
struct ModelParams {
  double alpha = 1.5;
  double p = 0.5;
  double r_min = 1.0;
  GrainShape shape;

  double c_f() const;
  // E R^q, finite only for q < alpha.
  double moment(double q) const;
};

// Throws AlphaOutOfRange / POutOfRange / BadGrain.  The boundary value p = 1
// (grains with no vertical extent) is meaningful for workload aggregation
// but not for the planar field, so it is admitted only when requested.
void validate(const ModelParams& params, bool allow_unit_p = false);

}  // namespace grain
