#include "upsc/growth.hpp"

#include "upsc/errors.hpp"
#include "upsc/textio.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace upsc {
namespace {

using Vec2 = std::array<double, 2>; // (x, N)

Vec2 rhs(const Vec2& y, const ModelParameters& p) {
    const double k1 = p.mu_max * y[1] / (p.K_N + y[1]);
    return {(k1 - p.k2) * y[0], -k1 * y[0] / p.Y_xN};
}

// Dormand-Prince 5(4) tableau. The last stage is FSAL.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 5th-order weights minus the embedded 4th-order weights
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

} // namespace

double monod_rate(double nutrient, const ModelParameters& params) {
    if (nutrient < 0.0)
        throw ValidationError("monod_rate: nutrient concentration must be non-negative");
    return params.mu_max * nutrient / (params.K_N + nutrient);
}

std::pair<double, double> ode_rhs(const GrowthState& state, const ModelParameters& params) {
    const double k1 = monod_rate(state.N, params);
    return {(k1 - params.k2) * state.x, -k1 * state.x / params.Y_xN};
}

GrowthTrajectory integrate_growth(const GrowthState& initial, double t_end,
                                  const ModelParameters& params,
                                  const IntegratorOptions& options) {
    if (!(t_end > initial.t))
        throw ValidationError("integrate_growth: t_end must exceed the initial time");
    if (!(options.rel_tol > 0.0) || !(options.abs_tol > 0.0))
        throw ValidationError("integrate_growth: tolerances must be positive");
    if (initial.x < 0.0 || initial.N < 0.0)
        throw ValidationError("integrate_growth: initial concentrations must be non-negative");

    GrowthTrajectory traj;
    traj.states.push_back(initial);

    double t = initial.t;
    Vec2 y{initial.x, initial.N};
    Vec2 k1 = rhs(y, params);

    const double span = t_end - initial.t;
    double h = span / 100.0;

    const auto clamp_state = [&](Vec2& v, double time) {
        for (double& c : v) {
            if (c < 0.0) {
                if (c >= -options.abs_tol)
                    c = 0.0;
                else
                    throw NumericalError("integrate_growth: state went negative (" +
                                         std::to_string(c) + ") at t=" + std::to_string(time));
            }
        }
    };

    while (t < t_end) {
        const double h_floor = 16.0 * std::numeric_limits<double>::epsilon() *
                               std::max(std::abs(t), 1.0);
        if (h < h_floor)
            throw NumericalError("integrate_growth: step size underflow at t=" +
                                 std::to_string(t));
        if (t + h > t_end)
            h = t_end - t;

        Vec2 y2, y3, y4, y5, y6, y_new;
        for (int i = 0; i < 2; ++i)
            y2[i] = y[i] + h * a21 * k1[i];
        const Vec2 k2v = rhs(y2, params);
        for (int i = 0; i < 2; ++i)
            y3[i] = y[i] + h * (a31 * k1[i] + a32 * k2v[i]);
        const Vec2 k3 = rhs(y3, params);
        for (int i = 0; i < 2; ++i)
            y4[i] = y[i] + h * (a41 * k1[i] + a42 * k2v[i] + a43 * k3[i]);
        const Vec2 k4 = rhs(y4, params);
        for (int i = 0; i < 2; ++i)
            y5[i] = y[i] + h * (a51 * k1[i] + a52 * k2v[i] + a53 * k3[i] + a54 * k4[i]);
        const Vec2 k5 = rhs(y5, params);
        for (int i = 0; i < 2; ++i)
            y6[i] = y[i] + h * (a61 * k1[i] + a62 * k2v[i] + a63 * k3[i] + a64 * k4[i] +
                                a65 * k5[i]);
        const Vec2 k6 = rhs(y6, params);
        for (int i = 0; i < 2; ++i)
            y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                   b6 * k6[i]);
        const Vec2 k7 = rhs(y_new, params);

        double err_sq = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
            const double sc = options.abs_tol +
                              options.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            err_sq += (e / sc) * (e / sc);
        }
        const double err = std::sqrt(err_sq / 2.0);

        if (err <= 1.0) {
            t += h;
            y = y_new;
            clamp_state(y, t);
            k1 = (y == y_new) ? k7 : rhs(y, params); // FSAL unless the clamp fired
            traj.states.push_back({t, y[0], y[1]});
            ++traj.accepted_steps;
            const double factor = (err == 0.0) ? 5.0
                                               : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
            h *= factor;
        } else {
            ++traj.rejected_steps;
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 0.9);
        }
    }

    return traj;
}

void write_trajectory_csv(const GrowthTrajectory& trajectory,
                          const std::filesystem::path& path) {
    std::ostringstream out;
    out << "t_s,x_g_per_m3,n_g_per_m3\n";
    for (const auto& s : trajectory.states)
        out << sci12(s.t) << ',' << sci12(s.x) << ',' << sci12(s.N) << '\n';
    write_text_file(path, out.str());
}

} // namespace upsc
