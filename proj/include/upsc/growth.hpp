#pragma once

#include "upsc/parameters.hpp"

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

namespace upsc {

/// Anode-chamber state at one time instant.
struct GrowthState {
    double t = 0.0; ///< s
    double x = 0.0; ///< cell concentration, g/m^3
    double N = 0.0; ///< nutrient concentration, g/m^3
};

struct GrowthTrajectory {
    std::vector<GrowthState> states; ///< accepted steps, time-ascending
    std::uint64_t accepted_steps = 0;
    std::uint64_t rejected_steps = 0;

    const GrowthState& final_state() const { return states.back(); }
};

/// Monod growth rate k1 = mu_max * N / (K_N + N), 1/s. Bounded by mu_max.
double monod_rate(double nutrient, const ModelParameters& params);

/// Right-hand side of the batch growth/decay system:
/// dx/dt = (k1 - k2) x, dN/dt = -k1 x / Y_xN.
std::pair<double, double> ode_rhs(const GrowthState& state, const ModelParameters& params);

struct IntegratorOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12; ///< g/m^3; doubles as the negative-undershoot clamp
};

/// Adaptive embedded Runge-Kutta 5(4) integration from initial.t to t_end.
/// Concentrations that undershoot zero by no more than abs_tol are clamped;
/// larger undershoots and step-size underflow raise NumericalError.
GrowthTrajectory integrate_growth(const GrowthState& initial, double t_end,
                                  const ModelParameters& params,
                                  const IntegratorOptions& options = {});

/// CSV dump: `t_s,x_g_per_m3,n_g_per_m3`.
void write_trajectory_csv(const GrowthTrajectory& trajectory,
                          const std::filesystem::path& path);

} // namespace upsc
