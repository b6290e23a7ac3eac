#pragma once

#include <optional>
#include <span>

namespace opinet {

enum class TrendDirection { Increasing, Decreasing };

/// One-tailed significance test of the OLS slope of ys on xs.
struct TrendTest {
    double slope = 0.0;
    double intercept = 0.0;
    double standard_error = 0.0;
    double t_statistic = 0.0;
    /// Tail probability in the hypothesised direction under t(n - 2).
    double p_value = 0.5;
    TrendDirection direction = TrendDirection::Increasing;
    std::size_t n = 0;
};

/// Regularized incomplete beta function I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x);

/// P(T > t) for Student's t with `df` degrees of freedom.
double t_tail(double t, double df);

/// Throws std::invalid_argument when fewer than three samples are given,
/// sizes differ, or xs has zero variance.
TrendTest trend_test(std::span<const double> xs, std::span<const double> ys,
                     TrendDirection direction);

/// |model - data| / data * 100; empty when data is zero.
std::optional<double> percent_error(double model, double data);

}  // namespace opinet
