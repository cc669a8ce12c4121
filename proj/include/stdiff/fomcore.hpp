#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stdiff/chemforma.hpp"
#include "stdiff/quantities.hpp"
#include "stdiff/record.hpp"

namespace stdiff {

/// Quantities derived from one record.
struct FomResult {
    double n_nuclei = 0.0;
    Quantity sqrt_sf{0.0, Unit::ForceAsd};
    Quantity sqrt_sa{0.0, Unit::AccelAsd};
    Quantity fom{0.0, Unit::Fom};
    std::optional<Quantity> thermal_sqrt_sf;
    std::optional<Quantity> thermal_fom;
    bool thermally_limited = false;
    bool show_thermal_marker = false;
    // Measured force noise below the computed thermal floor.
    bool below_thermal_floor = false;
    std::vector<std::string> warnings;
};

/// sqrt(S_a) = sqrt(S_F) / m.
Quantity accel_asd_from_force(const Quantity& sqrt_sf, const Quantity& mass);
/// sqrt(S_F) = m sqrt(S_a).
Quantity force_asd_from_accel(const Quantity& sqrt_sa, const Quantity& mass);

/// FOM = S_a N.
Quantity fom_from_psd(const Quantity& s_a, double n);
/// FOM = sigma_a^2 N dT, evaluated as fom_from_psd(sigma_a^2 dT, N).
Quantity fom_from_variance(const Quantity& sigma_a, double n, const Quantity& delta_t);

/// Fluctuation-dissipation force floor 4 k_B T m omega0 / Q, in N^2/Hz.
Quantity thermal_force_psd(const Quantity& temp, const Quantity& mass, const Quantity& omega0, double q,
                           const Constants& c = default_constants());

/// FOM of a thermally limited measurement, 4 N k_B T omega0 / (m Q).
Quantity thermal_fom(double n, const Quantity& temp, const Quantity& omega0, const Quantity& mass, double q,
                     const Constants& c = default_constants());

struct ThermalClass {
    bool thermally_limited = false;
    bool show_thermal_marker = false;
};

/// Both rules compare amplitude spectral densities. Thermally limited when
/// the thermal floor exceeds half the measured noise; the thermal marker is
/// shown when the measured noise is at least twice the floor.
ThermalClass classify_thermal(const Quantity& measured_sqrt_sf, const Quantity& thermal_sqrt_sf);

/// Full per-record pipeline: nucleus count, the missing spectral density,
/// FOM, and the thermal fields when T, f0 and Q are all known.
FomResult evaluate_record(const ExperimentRecord& rec, const PeriodicTable& pt = PeriodicTable::standard(),
                          const Constants& c = default_constants());

}  // namespace stdiff
