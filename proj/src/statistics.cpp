#include "fcomplex/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "fcomplex/complexity.hpp"
#include "fcomplex/error.hpp"

namespace fcomplex {

namespace {

constexpr double kCollinearTolerance = 1e-12;

void check_lengths(std::size_t a, std::size_t b, std::size_t minimum) {
  if (a != b) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("sample lengths differ ({} vs {})", a, b));
  }
  if (a < minimum) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("need at least {} observations, got {}", minimum, a));
  }
}

double weighted_mean(std::span<const double> xs, std::span<const double> ws, double total_weight) {
  CompensatedSum sum;
  for (std::size_t k = 0; k < xs.size(); ++k) sum.add(ws[k] * xs[k]);
  return sum.value() / total_weight;
}

bool constant(std::span<const double> xs, std::span<const double> ws) {
  bool seen = false;
  double first = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (ws[k] == 0.0) continue;
    if (!seen) {
      first = xs[k];
      seen = true;
    } else if (xs[k] != first) {
      return false;
    }
  }
  return true;
}

// Two-pass weighted moments.
double correlate(std::span<const double> xs, std::span<const double> ys, std::span<const double> ws) {
  CompensatedSum weight_sum;
  for (double w : ws) {
    if (!(w >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "weights must be non-negative");
    weight_sum.add(w);
  }
  const double total = weight_sum.value();
  if (!(total > 0.0)) throw Error(ErrorKind::kDegenerate, "total weight is zero");
  if (constant(xs, ws) || constant(ys, ws)) {
    throw Error(ErrorKind::kDegenerate, "correlation undefined: a variable has zero variance");
  }
  const double mx = weighted_mean(xs, ws, total);
  const double my = weighted_mean(ys, ws, total);
  CompensatedSum sxy;
  CompensatedSum sxx;
  CompensatedSum syy;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double dx = xs[k] - mx;
    const double dy = ys[k] - my;
    sxy.add(ws[k] * dx * dy);
    sxx.add(ws[k] * dx * dx);
    syy.add(ws[k] * dy * dy);
  }
  if (!(sxx.value() > 0.0) || !(syy.value() > 0.0)) {
    throw Error(ErrorKind::kDegenerate, "correlation undefined: a variable has zero variance");
  }
  const double r = sxy.value() / std::sqrt(sxx.value() * syy.value());
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
  check_lengths(xs.size(), ys.size(), 2);
  const std::vector<double> ones(xs.size(), 1.0);
  return correlate(xs, ys, ones);
}

double weighted_pearson(std::span<const double> xs, std::span<const double> ys,
                        std::span<const double> weights) {
  check_lengths(xs.size(), ys.size(), 2);
  check_lengths(xs.size(), weights.size(), 2);
  return correlate(xs, ys, weights);
}

double multiple_correlation_from(double r_y1, double r_y2, double r_12) {
  const double denom = 1.0 - r_12 * r_12;
  if (denom <= kCollinearTolerance) {
    throw Error(ErrorKind::kDegenerate, "predictors are collinear");
  }
  const double r_squared = (r_y1 * r_y1 + r_y2 * r_y2 - 2.0 * r_y1 * r_y2 * r_12) / denom;
  return std::sqrt(std::clamp(r_squared, 0.0, 1.0));
}

double multiple_correlation(std::span<const double> y, std::span<const double> x1,
                            std::span<const double> x2) {
  check_lengths(y.size(), x1.size(), 3);
  check_lengths(y.size(), x2.size(), 3);
  return multiple_correlation_from(pearson(y, x1), pearson(y, x2), pearson(x1, x2));
}

double weighted_multiple_correlation(std::span<const double> y, std::span<const double> x1,
                                     std::span<const double> x2, std::span<const double> weights) {
  check_lengths(y.size(), x1.size(), 3);
  check_lengths(y.size(), x2.size(), 3);
  return multiple_correlation_from(weighted_pearson(y, x1, weights), weighted_pearson(y, x2, weights),
                                   weighted_pearson(x1, x2, weights));
}

}  // namespace fcomplex
