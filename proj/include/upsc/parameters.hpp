#pragma once

#include "upsc/constants.hpp"

#include <filesystem>
#include <string>

namespace upsc {

/// Full lumped-model parameter set. Defaults are the standard simulation
/// values; any subset can be overridden from a `key = value` file.
struct ModelParameters {
    PhysicalConstants constants;

    double x0 = 12.2;        ///< initial cell concentration, g/m^3
    double N0 = 2890.0;      ///< initial nutrient concentration, g/m^3
    double mu_max = 5e-5;    ///< max specific growth rate, 1/s
    double K_N = 4.0;        ///< half-saturation constant, g/m^3
    double k2 = 5.32e-6;     ///< cell death rate, 1/s
    double Y_xN = 10.0;      ///< cell/nutrient yield coefficient
    double x_max = 1e5;      ///< maximum cell density, g/m^3
    double R_int = 599.0;    ///< internal resistance, ohm
    double L0 = 625.0;       ///< light intensity, lux
    double C_f = 1e16;       ///< lux -> photons/s conversion factor
    double Q = 0.742;        ///< quantum yield, electrons/photon
    double eta_eff = 0.5;    ///< photon-uptake efficiency
    double A_s = 6.25e-4;    ///< illumination area, m^2
    double A_E = 4.84e-4;    ///< electrode area, m^2
    double alpha = 0.005;    ///< charge-transfer-like exponent
    double n = 2.0;          ///< electrons transferred
    double E0 = 1.241;       ///< standard cell potential, V

    /// Throws ValidationError naming the offending key.
    void validate() const;
};

/// Parses a flat `key = value` file ('#' comments, blank lines allowed).
/// Unspecified keys keep their defaults. Keys match the field names above;
/// physical constants are addressable as R, F, N_Av, T.
ModelParameters load_parameters(const std::filesystem::path& path);

/// Parses parameter text directly (same grammar as load_parameters).
ModelParameters parse_parameters(const std::string& text, const std::string& origin);

/// Emits every key at full precision; load(serialize(p)) reproduces p bitwise.
std::string serialize_parameters(const ModelParameters& params);

void save_parameters(const ModelParameters& params, const std::filesystem::path& path);

} // namespace upsc
