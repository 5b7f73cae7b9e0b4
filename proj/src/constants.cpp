#include "upsc/constants.hpp"

#include "upsc/errors.hpp"

namespace upsc {

void PhysicalConstants::validate() const {
    if (!(gas_constant > 0.0))
        throw ValidationError("R must be strictly positive");
    if (!(faraday > 0.0))
        throw ValidationError("F must be strictly positive");
    if (!(avogadro > 0.0))
        throw ValidationError("N_Av must be strictly positive");
    if (!(temperature > 0.0))
        throw ValidationError("T must be strictly positive");
}

double standard_cell_potential(const HalfCellTable& table) {
    return (table.cathode_reduction_mv - table.anode_oxidation_mv) / 1000.0;
}

} // namespace upsc
