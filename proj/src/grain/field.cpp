#include "grain/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "grain/covariance.hpp"
#include "grain/kernels.hpp"
#include "grain/parallel.hpp"

namespace grain {

namespace {

bool point_in_grain(const GrainShape& shape, double x, double y, double u,
                    double v, double rx, double ry) {
  switch (shape.kind) {
    case ShapeKind::UnitSquare:
      return x > u && x <= u + rx && y > v && y <= v + ry;
    case ShapeKind::UnitDisk: {
      double dx = (x - u) / rx, dy = (y - v) / ry;
      return dx * dx + dy * dy <= 1.0;
    }
    case ShapeKind::Custom:
      return shape.indicator((x - u) / rx, (y - v) / ry);
  }
  return false;
}

// area of the ellipse centered (cu,cv), semi-axes (rx,ry), clipped to
// [0,X] x [0,Y]; substituting x = cu + rx sin(phi) makes the integrand
// len(phi) rx cos(phi) smooth except where the vertical clipping engages,
// so the phi range is split at those points and Simpson is exact enough
double ellipse_rect_overlap(double cu, double cv, double rx, double ry,
                            double X, double Y) {
  double x0 = std::max(0.0, cu - rx), x1 = std::min(X, cu + rx);
  if (x0 >= x1 || Y <= 0.0) return 0.0;
  double phi0 = std::asin(std::clamp((x0 - cu) / rx, -1.0, 1.0));
  double phi1 = std::asin(std::clamp((x1 - cu) / rx, -1.0, 1.0));
  double cuts[8];
  std::size_t ncuts = 0;
  cuts[ncuts++] = phi0;
  for (double c : {(Y - cv) / ry, cv / ry}) {
    if (c > 0.0 && c < 1.0) {
      double a = std::acos(c);
      for (double s : {-a, a})
        if (s > phi0 && s < phi1) cuts[ncuts++] = s;
    }
  }
  cuts[ncuts++] = phi1;
  std::sort(cuts, cuts + ncuts);
  double total = 0.0;
  for (std::size_t seg = 0; seg + 1 < ncuts; ++seg) {
    double a = cuts[seg], b = cuts[seg + 1];
    if (b - a <= 0.0) continue;
    const int n = 64;
    double h = (b - a) / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      double phi = a + i * h;
      double half = ry * std::cos(phi);
      double len = std::min(cv + half, Y) - std::max(cv - half, 0.0);
      double f = std::max(len, 0.0) * rx * std::cos(phi);
      acc += (i == 0 || i == n) ? f : (i % 2 ? 4.0 * f : 2.0 * f);
    }
    total += acc * h / 3.0;
  }
  return total;
}

}  // namespace

double mean_occupation(const ModelParams& params) {
  validate(params);
  return params.shape.area * params.moment(1.0);
}

std::vector<std::uint32_t> evaluate_occupation(
    const ModelParams& params, const ExtendedWindow& win,
    const std::vector<double>& ts, const std::vector<double>& ss,
    SeededStream& rng, std::uint64_t budget) {
  validate(params);
  if (ts.size() != ss.size())
    throw Error("coordinate lists must have equal length");
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (!(ts[k] >= 0.0 && ts[k] <= win.X && ss[k] >= 0.0 && ss[k] <= win.Y))
      throw Error("evaluation point outside the window");
  }
  std::vector<std::uint64_t> acc(ts.size(), 0);
  const kernels::Ops& ops = kernels::active_ops();
  const bool square = params.shape.kind == ShapeKind::UnitSquare;
  grain_stream(
      params, win, rng,
      [&](const GrainChunk& chunk) {
        std::size_t n = chunk.size();
        for (std::size_t k = 0; k < ts.size(); ++k) {
          if (square) {
            acc[k] += ops.cover_count(chunk.u.data(), chunk.v.data(),
                                      chunk.rx.data(), chunk.ry.data(), n,
                                      ts[k], ss[k]);
          } else {
            for (std::size_t i = 0; i < n; ++i)
              acc[k] += point_in_grain(params.shape, ts[k], ss[k], chunk.u[i],
                                       chunk.v[i], chunk.rx[i], chunk.ry[i]);
          }
        }
      },
      budget);
  std::vector<std::uint32_t> counts(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k)
    counts[k] = static_cast<std::uint32_t>(acc[k]);
  return counts;
}

double simulate_S(const ModelParams& params, double lambda, double gamma,
                  double x, double y, SeededStream& rng,
                  std::uint64_t budget) {
  validate(params);
  if (!(lambda > 0.0) || !std::isfinite(lambda) || !std::isfinite(gamma) ||
      !(x > 0.0) || !(y > 0.0))
    throw Error("window parameters must be positive and finite");
  if (params.shape.kind == ShapeKind::Custom)
    throw BadGrain("window integrals need an exact overlap area, "
                   "which custom grains do not provide");
  ExtendedWindow win{lambda * x, std::pow(lambda, gamma) * y};
  const kernels::Ops& ops = kernels::active_ops();
  const bool square = params.shape.kind == ShapeKind::UnitSquare;
  double occupied = 0.0;
  grain_stream(
      params, win, rng,
      [&](const GrainChunk& chunk) {
        std::size_t n = chunk.size();
        if (square) {
          occupied += ops.overlap_area_sum(chunk.u.data(), chunk.v.data(),
                                           chunk.rx.data(), chunk.ry.data(),
                                           n, win.X, win.Y);
        } else {
          for (std::size_t i = 0; i < n; ++i)
            occupied += ellipse_rect_overlap(chunk.u[i], chunk.v[i],
                                             chunk.rx[i], chunk.ry[i], win.X,
                                             win.Y);
        }
      },
      budget);
  double mean = win.X * win.Y * params.shape.area * params.moment(1.0);
  return occupied - mean;
}

std::vector<double> simulate_S_nested(const ModelParams& params,
                                      const std::vector<double>& lambdas,
                                      double gamma, double x, double y,
                                      SeededStream& rng,
                                      std::uint64_t budget) {
  validate(params);
  if (lambdas.empty()) throw Error("no lambda values given");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0) || !std::isfinite(lambdas[i]))
      throw Error("window parameters must be positive and finite");
    if (i > 0 && !(lambdas[i] > lambdas[i - 1]))
      throw Error("lambda values must be strictly increasing");
  }
  if (!std::isfinite(gamma) || !(x > 0.0) || !(y > 0.0))
    throw Error("window parameters must be positive and finite");
  if (params.shape.kind == ShapeKind::Custom)
    throw BadGrain("window integrals need an exact overlap area, "
                   "which custom grains do not provide");
  std::size_t m = lambdas.size();
  std::vector<double> Xs(m), Ys(m), occupied(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    Xs[j] = lambdas[j] * x;
    Ys[j] = std::pow(lambdas[j], gamma) * y;
  }
  ExtendedWindow win{Xs.back(), Ys.back()};
  const kernels::Ops& ops = kernels::active_ops();
  const bool square = params.shape.kind == ShapeKind::UnitSquare;
  grain_stream(
      params, win, rng,
      [&](const GrainChunk& chunk) {
        std::size_t n = chunk.size();
        for (std::size_t j = 0; j < m; ++j) {
          if (square) {
            occupied[j] += ops.overlap_area_sum(chunk.u.data(),
                                                chunk.v.data(),
                                                chunk.rx.data(),
                                                chunk.ry.data(), n, Xs[j],
                                                Ys[j]);
          } else {
            for (std::size_t i = 0; i < n; ++i)
              occupied[j] += ellipse_rect_overlap(chunk.u[i], chunk.v[i],
                                                  chunk.rx[i], chunk.ry[i],
                                                  Xs[j], Ys[j]);
          }
        }
      },
      budget);
  double unit_mean = params.shape.area * params.moment(1.0);
  for (std::size_t j = 0; j < m; ++j)
    occupied[j] -= Xs[j] * Ys[j] * unit_mean;
  return occupied;
}

std::vector<double> simulate_S_batch(const ModelParams& params, double lambda,
                                     double gamma, double x, double y,
                                     std::size_t reps, std::uint64_t seed,
                                     int threads, std::uint64_t budget) {
  std::vector<double> out(reps);
  parallel_replicates(reps, threads, [&](std::size_t rep) {
    SeededStream rng(seed, rep);
    out[rep] = simulate_S(params, lambda, gamma, x, y, rng, budget);
  });
  return out;
}

double field_normalization(const FieldRegime& regime, double lambda) {
  if (!(lambda > 1.0))
    throw Error("normalization needs lambda > 1");
  double norm = std::pow(lambda, regime.H);
  if (regime.log_correction) norm *= std::sqrt(std::log(lambda));
  return norm;
}

namespace {

// grid coordinates on one axis: multiples of the smallest positive lag
// component when every component is a near-integer multiple of it,
// otherwise just the distinct components themselves
std::vector<double> covariance_axis(std::vector<double> deltas) {
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  if (deltas.empty() || deltas.back() == 0.0) return {0.0};
  std::vector<double> positive;
  for (double d : deltas)
    if (d > 0.0) positive.push_back(d);
  double pitch = positive.front();
  bool commensurate = true;
  for (double d : positive) {
    double k = d / pitch;
    if (std::fabs(k - std::round(k)) > 1e-9 * std::max(1.0, k)) {
      commensurate = false;
      break;
    }
  }
  std::vector<double> pts;
  if (commensurate) {
    long m = std::lround(positive.back() / pitch);
    for (long i = 0; i <= m; ++i) pts.push_back(i * pitch);
  } else {
    pts.push_back(0.0);
    pts.insert(pts.end(), positive.begin(), positive.end());
  }
  return pts;
}

std::size_t axis_index(const std::vector<double>& axis, double value) {
  double tol = 1e-9 * std::max(1.0, std::fabs(axis.back()));
  for (std::size_t i = 0; i < axis.size(); ++i)
    if (std::fabs(axis[i] - value) <= tol) return i;
  return axis.size();
}

}  // namespace

std::vector<CovarianceEstimate> empirical_covariance(
    const ModelParams& params, const std::vector<CovarianceLag>& lags,
    std::size_t reps, std::uint64_t seed, int threads) {
  validate(params);
  if (lags.empty()) throw Error("no covariance lags given");
  if (reps < 2) throw InsufficientData("need at least two replicates");
  for (const CovarianceLag& lag : lags) {
    if (!(lag.dt >= 0.0) || !(lag.ds >= 0.0) || !std::isfinite(lag.dt) ||
        !std::isfinite(lag.ds))
      throw Error("covariance lags must be non-negative and finite");
  }

  std::vector<double> dts, dss;
  for (const CovarianceLag& lag : lags) {
    dts.push_back(lag.dt);
    dss.push_back(lag.ds);
  }
  std::vector<double> taxis = covariance_axis(dts);
  std::vector<double> saxis = covariance_axis(dss);
  std::size_t nt = taxis.size(), ns = saxis.size();

  std::vector<double> ts, ss;
  ts.reserve(nt * ns);
  ss.reserve(nt * ns);
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = 0; j < ns; ++j) {
      ts.push_back(taxis[i]);
      ss.push_back(saxis[j]);
    }

  // flattened anchor pairs for each lag, fixed before any simulation
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairs(
      lags.size());
  for (std::size_t l = 0; l < lags.size(); ++l) {
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < ns; ++j) {
        std::size_t i2 = axis_index(taxis, taxis[i] + lags[l].dt);
        std::size_t j2 = axis_index(saxis, saxis[j] + lags[l].ds);
        if (i2 >= nt || j2 >= ns) continue;
        pairs[l].emplace_back(static_cast<std::uint32_t>(i * ns + j),
                              static_cast<std::uint32_t>(i2 * ns + j2));
      }
    if (pairs[l].empty())
      throw Error("no anchor pairs realize lag (" +
                  std::to_string(lags[l].dt) + ", " +
                  std::to_string(lags[l].ds) + ")");
  }

  // lags along a single axis leave the other axis degenerate; give the
  // window unit extent there so the anchors still sit inside it
  ExtendedWindow win{std::max(taxis.back(), 1.0),
                     std::max(saxis.back(), 1.0)};
  const double mu = mean_occupation(params);
  std::vector<double> per_rep(reps * lags.size());
  parallel_replicates(reps, threads, [&](std::size_t rep) {
    SeededStream rng(seed, rep);
    std::vector<std::uint32_t> counts =
        evaluate_occupation(params, win, ts, ss, rng);
    for (std::size_t l = 0; l < lags.size(); ++l) {
      double acc = 0.0;
      for (const auto& pr : pairs[l])
        acc += (counts[pr.first] - mu) * (counts[pr.second] - mu);
      per_rep[rep * lags.size() + l] = acc / pairs[l].size();
    }
  });

  std::vector<CovarianceEstimate> out(lags.size());
  for (std::size_t l = 0; l < lags.size(); ++l) {
    double mean = 0.0;
    for (std::size_t rep = 0; rep < reps; ++rep)
      mean += per_rep[rep * lags.size() + l];
    mean /= reps;
    double ssq = 0.0;
    for (std::size_t rep = 0; rep < reps; ++rep) {
      double d = per_rep[rep * lags.size() + l] - mean;
      ssq += d * d;
    }
    out[l].dt = lags[l].dt;
    out[l].ds = lags[l].ds;
    out[l].exact = covariance_exact(params, lags[l].dt, lags[l].ds);
    out[l].estimate = mean;
    out[l].se = std::sqrt(ssq / (reps - 1.0) / reps);
    out[l].pairs = pairs[l].size();
  }
  return out;
}

}  // namespace grain
