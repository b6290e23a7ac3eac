#include "opinet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace opinet {

namespace {

// Modified Lentz evaluation of the continued fraction for I_x(a, b); converges
// quickly for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIterations = 10000;
    constexpr double kEpsilon = 1e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny)
        d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEpsilon)
            return h;
    }
    throw std::runtime_error("incomplete beta continued fraction did not converge");
}

// I_x(a, b) with y = 1 - x supplied separately to avoid cancellation.
double incomplete_beta(double a, double b, double x, double y) {
    if (x <= 0.0)
        return 0.0;
    if (y <= 0.0)
        return 1.0;
    const double log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log(y);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, y) / b;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("incomplete beta requires a, b > 0");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("incomplete beta requires x in [0, 1]");
    return incomplete_beta(a, b, x, 1.0 - x);
}

double t_tail(double t, double df) {
    if (!(df > 0.0))
        throw std::invalid_argument("t_tail requires df > 0");
    if (std::isnan(t))
        return t;
    if (t == 0.0)
        return 0.5;
    if (std::isinf(t))
        return t > 0.0 ? 0.0 : 1.0;
    const double t2 = t * t;
    const double x = df / (df + t2);
    const double y = t2 / (df + t2);
    const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, x, y);
    return t > 0.0 ? tail : 1.0 - tail;
}

TrendTest trend_test(std::span<const double> xs, std::span<const double> ys,
                     TrendDirection direction) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("trend_test: xs and ys differ in length");
    const std::size_t n = xs.size();
    if (n < 3)
        throw std::invalid_argument("trend_test: need at least 3 samples");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("trend_test: xs have zero variance");

    TrendTest out;
    out.n = n;
    out.direction = direction;
    if (std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys[0]; })) {
        out.intercept = ys[0];
        return out;
    }

    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (ys[i] - my) - out.slope * (xs[i] - mx);
        sse += r * r;
    }
    const double df = static_cast<double>(n - 2);
    out.standard_error = std::sqrt(sse / df / sxx);

    if (out.standard_error == 0.0)
        out.t_statistic = std::copysign(std::numeric_limits<double>::infinity(), out.slope);
    else
        out.t_statistic = out.slope / out.standard_error;

    const double signed_t =
        direction == TrendDirection::Increasing ? out.t_statistic : -out.t_statistic;
    out.p_value = t_tail(signed_t, df);
    return out;
}

std::optional<double> percent_error(double model, double data) {
    if (data == 0.0)
        return std::nullopt;
    return std::abs(model - data) / data * 100.0;
}

}  // namespace opinet
