#pragma once

#include "upsc/growth.hpp"
#include "upsc/parameters.hpp"

#include <filesystem>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace upsc {

/// One steady operating point of the cell.
struct PolarizationPoint {
    double r_ext = 0.0;     ///< external load, ohm
    double i = 0.0;         ///< cell current, A
    double v = 0.0;         ///< cell voltage, V
    double j = 0.0;         ///< current density, A/m^2
    double p = 0.0;         ///< power density, W/m^2
    double k = 0.0;         ///< characteristic rate constant used, 1/m^2
    double eta_act = 0.0;   ///< anodic activation overpotential, V
    double x_at_eval = 0.0; ///< cell concentration at evaluation, g/m^3
};

/// Inputs of one algebraic solve: load, rate constant, cell concentration.
struct OperatingProblem {
    double r_ext = 0.0;
    double k = 0.0;
    double x = 0.0;
    ModelParameters params;

    void validate() const;
};

/// Exchange current density
///   j0 = K n F (L0 C_f A_s Q eta_eff x / (N_Av x_max))^alpha,  A/m^2.
double exchange_current_density(double k, double x, const ModelParameters& params);

/// Butler-Volmer balance residual
///   f(i) = A_E j0 [exp(c1 eta) - exp(-c2 eta)] - i,  eta = E0 - i (R_ext + R_int),
/// with c1 = alpha n F / (R T), c2 = (1 - alpha) n F / (R T). Exponential
/// arguments saturate at +-700 so the residual stays finite for trial points
/// far outside the physical bracket.
double bv_residual(double i, const OperatingProblem& problem);

/// Solves f(i) = 0 on [0, E0/(R_ext+R_int)] and fills the derived fields.
/// f is strictly decreasing on the bracket, so the root is unique.
PolarizationPoint solve_operating_point(const OperatingProblem& problem);

/// Per-load rate-constant provider used by sweeps.
using KSource = std::function<double(double r_ext)>;

/// Solves the loads in order. Before each point the growth state advances by
/// `dwell_s` seconds and the resulting cell concentration feeds the solve;
/// dwell_s == 0 keeps x at x0 for every point.
std::vector<PolarizationPoint> polarization_sweep(std::span<const double> loads,
                                                  const KSource& k_source,
                                                  const ModelParameters& params,
                                                  double dwell_s);

/// (current density, power density) pairs with p = v i / A_E.
std::vector<std::pair<double, double>> power_curve(std::span<const PolarizationPoint> points,
                                                   const ModelParameters& params);

/// CSV: `r_ext_ohm,i_amp,v_volt,j_a_per_m2,p_w_per_m2,k_per_m2,eta_act_volt,x_g_per_m3`.
std::string polarization_csv(std::span<const PolarizationPoint> points);

/// CSV: `j_a_per_m2,p_w_per_m2`.
std::string power_csv(std::span<const std::pair<double, double>> curve);

} // namespace upsc
