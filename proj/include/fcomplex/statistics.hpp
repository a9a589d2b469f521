#pragma once

#include <span>

namespace fcomplex {

/// Sample Pearson product-moment correlation.
/// Throws Error{kInvalidArgument} for mismatched or short inputs and
/// Error{kDegenerate} when either variable has zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Pearson correlation where observation k counts weights[k] times. With
/// integer weights this equals pearson() over the expanded sample.
double weighted_pearson(std::span<const double> xs, std::span<const double> ys,
                        std::span<const double> weights);

/// Multiple correlation of y on two predictors from the pairwise
/// coefficients: sqrt((r_y1^2 + r_y2^2 - 2 r_y1 r_y2 r_12) / (1 - r_12^2)).
/// Throws Error{kDegenerate} when |r_12| is 1 (collinear predictors).
double multiple_correlation_from(double r_y1, double r_y2, double r_12);

double multiple_correlation(std::span<const double> y, std::span<const double> x1,
                            std::span<const double> x2);

double weighted_multiple_correlation(std::span<const double> y, std::span<const double> x1,
                                     std::span<const double> x2, std::span<const double> weights);

}  // namespace fcomplex
