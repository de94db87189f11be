#include "grain/params.hpp"

#include <cmath>
#include <typeinfo>

#include "grain/errors.hpp"

namespace grain {

GrainShape GrainShape::unit_square() {
  GrainShape s;
  s.kind = ShapeKind::UnitSquare;
  s.bbox = {0.0, 0.0, 1.0, 1.0};
  s.area = 1.0;
  return s;
}

GrainShape GrainShape::unit_disk() {
  GrainShape s;
  s.kind = ShapeKind::UnitDisk;
  s.bbox = {-1.0, -1.0, 1.0, 1.0};
  s.area = 4.0 * std::atan(1.0);  // pi
  return s;
}

GrainShape GrainShape::custom(std::function<bool(double, double)> ind,
                              std::array<double, 4> box, double area,
                              std::function<double(double)> section) {
  GrainShape s;
  s.kind = ShapeKind::Custom;
  s.indicator = std::move(ind);
  s.bbox = box;
  s.area = area;
  s.section = std::move(section);
  return s;
}

bool GrainShape::contains(double u, double v) const {
  switch (kind) {
    case ShapeKind::UnitSquare:
      return u > 0.0 && u <= 1.0 && v > 0.0 && v <= 1.0;
    case ShapeKind::UnitDisk:
      return u * u + v * v <= 1.0;
    case ShapeKind::Custom:
      return indicator && indicator(u, v);
  }
  return false;
}

double GrainShape::section_length(double u) const {
  switch (kind) {
    case ShapeKind::UnitSquare:
      return (u > 0.0 && u <= 1.0) ? 1.0 : 0.0;
    case ShapeKind::UnitDisk:
      return (u > -1.0 && u < 1.0) ? 2.0 * std::sqrt(1.0 - u * u) : 0.0;
    case ShapeKind::Custom:
      return section ? section(u) : 0.0;
  }
  return 0.0;
}

const char* GrainShape::name() const {
  switch (kind) {
    case ShapeKind::UnitSquare: return "unit_square";
    case ShapeKind::UnitDisk: return "unit_disk";
    case ShapeKind::Custom: return "custom";
  }
  return "unknown";
}

double ModelParams::c_f() const { return alpha * std::pow(r_min, alpha); }

double ModelParams::moment(double q) const {
  if (q >= alpha)
    throw AlphaOutOfRange("moment of order q=" + std::to_string(q) +
                          " diverges for alpha=" + std::to_string(alpha));
  return alpha * std::pow(r_min, q) / (alpha - q);
}

void validate(const ModelParams& params, bool allow_unit_p) {
  if (!(params.alpha > 1.0) || !(params.alpha < 2.0))
    throw AlphaOutOfRange("alpha must lie in (1,2), got " +
                          std::to_string(params.alpha));
  bool p_ok = params.p > 0.0 && (allow_unit_p ? params.p <= 1.0 : params.p < 1.0);
  if (!p_ok)
    throw POutOfRange("p must lie in (0,1" +
                      std::string(allow_unit_p ? "]" : ")") + ", got " +
                      std::to_string(params.p));
  if (!(params.r_min > 0.0))
    throw BadGrain("r_min must be positive, got " + std::to_string(params.r_min));
  if (!(params.shape.area > 0.0) || !std::isfinite(params.shape.area))
    throw BadGrain("grain area must be positive and finite");
  if (params.shape.bbox[2] <= params.shape.bbox[0] ||
      params.shape.bbox[3] <= params.shape.bbox[1])
    throw BadGrain("grain bounding box is empty");
  if (params.shape.kind == ShapeKind::Custom &&
      (!params.shape.indicator || !params.shape.section))
    throw BadGrain("custom grain needs an indicator and a section function");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetExceeded*>(&e) ||
      dynamic_cast<const TruncationBudgetExceeded*>(&e))
    return exit_budget;
  if (dynamic_cast<const QuadratureFailure*>(&e) ||
      dynamic_cast<const CovarianceNotPSD*>(&e))
    return exit_numeric;
  if (dynamic_cast<const RegimeMismatch*>(&e)) return exit_regime;
  if (dynamic_cast<const Error*>(&e)) return exit_validation;
  return exit_error;
}

}  // namespace grain
