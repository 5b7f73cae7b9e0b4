#pragma once

namespace upsc {

/// Universal constants and the operating temperature.
struct PhysicalConstants {
    double gas_constant = 8.314;       ///< R, J/(mol K)
    double faraday = 96486.0;          ///< F, C/mol
    double avogadro = 6.023e23;        ///< 1/mol
    double temperature = 298.0;        ///< K

    void validate() const;
};

/// Standard half-cell potentials of the electrode reactions, stored in
/// millivolts so the tabulated decimals are exact in binary.
struct HalfCellTable {
    double anode_oxidation_mv = -11.0;     ///< reduced-mediator oxidation
    double cathode_reduction_mv = 1230.0;  ///< oxygen reduction
};

/// Standard cell potential E0 = E_cathode - E_anode, volts.
double standard_cell_potential(const HalfCellTable& table = {});

} // namespace upsc
