#include "ctfreq/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctfreq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double crb_bound(double t, double n_probes, double total_time, double f_mod) {
    if (!(t > 0)) throw std::invalid_argument("crb_bound: t must be > 0");
    if (f_mod < 0 || f_mod > 1.0 + 1e-12)
        throw std::invalid_argument("crb_bound: |f| must lie in [0, 1]");
    if (f_mod == 0.0) return kInf;
    const double num = 1.0 + (n_probes / 4.0) * (1.0 / (f_mod * f_mod) - 1.0);
    return num / (n_probes * n_probes * total_time * t);
}

BoundCurve minimize_bound(const SystemParams& p, double n_probes, double total_time,
                          std::pair<double, double> t_window, int grid_points) {
    const auto [t_lo, t_hi] = t_window;
    if (!(t_lo > 0) || !(t_hi > t_lo))
        throw std::invalid_argument("minimize_bound: empty or invalid window");
    if (t_hi > total_time * (1.0 + 1e-12))
        throw std::invalid_argument("minimize_bound: window must lie within (0, T]");
    grid_points = std::max(grid_points, 512);

    auto objective = [&](double t) {
        return crb_bound(t, n_probes, total_time, std::abs(f_basic(t, p))) * total_time;
    };

    BoundCurve curve;
    curve.times.resize(grid_points);
    curve.values.resize(grid_points);
    const double lr = std::log(t_hi / t_lo);
    int best = 0;
    for (int i = 0; i < grid_points; ++i) {
        const double t = t_lo * std::exp(lr * i / (grid_points - 1));
        curve.times[i] = t;
        curve.values[i] = objective(t);
        if (curve.values[i] < curve.values[best]) best = i;
    }

    // golden-section refinement on the bracketing grid interval
    double a = curve.times[std::max(best - 1, 0)];
    double b = curve.times[std::min(best + 1, grid_points - 1)];
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > 1e-13 * std::max(1.0, b)) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = objective(d);
        }
    }
    curve.t_opt = 0.5 * (a + b);
    curve.min_value = objective(curve.t_opt);
    if (curve.values[best] < curve.min_value) {  // refinement never loses to the grid
        curve.t_opt = curve.times[best];
        curve.min_value = curve.values[best];
    }
    return curve;
}

double asymptotic_entangled_error(double n_probes, double total_time, double lambda) {
    if (!(n_probes > 0) || !(total_time > 0) || !(lambda > 0))
        throw std::invalid_argument("asymptotic_entangled_error: arguments must be positive");
    return lambda / (total_time * std::pow(n_probes, 1.5));
}

double ramsey_signal(Complex f_tilde) {
    if (std::abs(f_tilde) > 1.0 + 1e-9)
        throw std::invalid_argument("ramsey_signal: |f~| must not exceed 1");
    return 0.5 * (1.0 + f_tilde.real());
}

double ramsey_uncertainty(double p_signal, double dp_domega, double t_bar, double n_probes,
                          double total_time) {
    if (p_signal < -1e-12 || p_signal > 1.0 + 1e-12)
        throw std::invalid_argument("ramsey_uncertainty: P must lie in [0, 1]");
    if (!(t_bar > 0)) throw std::invalid_argument("ramsey_uncertainty: t_bar must be > 0");
    if (dp_domega == 0.0) return kInf;
    const double pq = std::clamp(p_signal, 0.0, 1.0);
    return pq * (1.0 - pq) * t_bar / (n_probes * total_time * dp_domega * dp_domega);
}

double ct_min_error(double n_probes, double total_time, double t_bar, double c_inf) {
    if (!(c_inf > 0) || c_inf > 1.0)
        throw std::invalid_argument("ct_min_error: C_inf must lie in (0, 1]");
    if (!(n_probes > 0) || !(total_time > 0) || !(t_bar > 0))
        throw std::invalid_argument("ct_min_error: arguments must be positive");
    return 1.0 / (c_inf * c_inf * n_probes * total_time * t_bar);
}

double gain(double n_probes, double t_bar, double lambda, double lambda_tilde) {
    if (!(n_probes > 0) || !(t_bar > 0) || !(lambda > 0))
        throw std::invalid_argument("gain: N, t_bar and lambda must be positive");
    if (lambda_tilde == 0.0) throw std::invalid_argument("gain: lambda_tilde must be nonzero");
    const double cinf = c_infinity(lambda, lambda_tilde);
    return lambda * t_bar * cinf * cinf / std::sqrt(8.0 * n_probes);
}

std::vector<std::pair<double, double>> signal_derivative(
    const std::vector<std::pair<double, double>>& p_grid) {
    const int n = static_cast<int>(p_grid.size());
    if (n < 3) throw std::invalid_argument("signal_derivative: need at least 3 points");
    const double h = p_grid[1].first - p_grid[0].first;
    if (!(h > 0)) throw std::invalid_argument("signal_derivative: grid must be strictly increasing");
    for (int i = 1; i < n; ++i) {
        const double hi = p_grid[i].first - p_grid[i - 1].first;
        if (std::abs(hi - h) > 1e-6 * h)
            throw std::invalid_argument("signal_derivative: grid must be uniform");
    }

    std::vector<std::pair<double, double>> out(n);
    for (int i = 0; i < n; ++i) out[i].first = p_grid[i].first;
    out[0].second = (-3.0 * p_grid[0].second + 4.0 * p_grid[1].second - p_grid[2].second) / (2.0 * h);
    for (int i = 1; i < n - 1; ++i)
        out[i].second = (p_grid[i + 1].second - p_grid[i - 1].second) / (2.0 * h);
    out[n - 1].second =
        (3.0 * p_grid[n - 1].second - 4.0 * p_grid[n - 2].second + p_grid[n - 3].second) / (2.0 * h);
    return out;
}

}  // namespace ctfreq
