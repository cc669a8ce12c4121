#include "stdiff/fomcore.hpp"

#include <cmath>

#include "stdiff/errors.hpp"

namespace stdiff {

namespace {

void require_positive_mass(const Quantity& mass) {
    require_unit(mass, Unit::Kilogram, "mass");
    if (!(mass.value() > 0)) throw NonPositiveMass();
}

}  // namespace

Quantity accel_asd_from_force(const Quantity& sqrt_sf, const Quantity& mass) {
    require_unit(sqrt_sf, Unit::ForceAsd, "sqrt_sf");
    require_positive_mass(mass);
    if (sqrt_sf.value() < 0) throw NegativeInput("sqrt_sf");
    return accel_asd(sqrt_sf.value() / mass.value());
}

Quantity force_asd_from_accel(const Quantity& sqrt_sa, const Quantity& mass) {
    require_unit(sqrt_sa, Unit::AccelAsd, "sqrt_sa");
    require_positive_mass(mass);
    if (sqrt_sa.value() < 0) throw NegativeInput("sqrt_sa");
    return force_asd(sqrt_sa.value() * mass.value());
}

Quantity fom_from_psd(const Quantity& s_a, double n) {
    require_unit(s_a, Unit::AccelPsd, "s_a");
    if (s_a.value() < 0) throw NegativeInput("s_a");
    if (n < 0) throw NegativeInput("nucleus count");
    return fom_value(s_a.value() * n);
}

Quantity fom_from_variance(const Quantity& sigma_a, double n, const Quantity& delta_t) {
    require_unit(sigma_a, Unit::Acceleration, "sigma_a");
    require_unit(delta_t, Unit::Second, "delta_t");
    if (sigma_a.value() < 0) throw NegativeInput("sigma_a");
    if (delta_t.value() < 0) throw NegativeInput("delta_t");
    return fom_from_psd(accel_psd(sigma_a.value() * sigma_a.value() * delta_t.value()), n);
}

Quantity thermal_force_psd(const Quantity& temp, const Quantity& mass, const Quantity& omega0, double q,
                           const Constants& c) {
    require_unit(temp, Unit::Kelvin, "temp");
    require_unit(omega0, Unit::RadianPerSecond, "omega0");
    require_positive_mass(mass);
    if (temp.value() < 0) throw NegativeInput("temp");
    if (!(omega0.value() > 0)) throw NonPositive("omega0");
    if (!(q > 0)) throw NonPositive("quality factor");
    return force_psd(4.0 * c.k_B * temp.value() * mass.value() * omega0.value() / q);
}

Quantity thermal_fom(double n, const Quantity& temp, const Quantity& omega0, const Quantity& mass, double q,
                     const Constants& c) {
    require_unit(temp, Unit::Kelvin, "temp");
    require_unit(omega0, Unit::RadianPerSecond, "omega0");
    require_positive_mass(mass);
    if (!(q > 0)) throw NonPositive("quality factor");
    if (n < 0) throw NegativeInput("nucleus count");
    if (temp.value() < 0) throw NegativeInput("temp");
    if (omega0.value() < 0) throw NegativeInput("omega0");
    return fom_value(4.0 * n * c.k_B * temp.value() * omega0.value() / (mass.value() * q));
}

ThermalClass classify_thermal(const Quantity& measured_sqrt_sf, const Quantity& thermal_sqrt_sf) {
    require_unit(measured_sqrt_sf, Unit::ForceAsd, "measured_sqrt_sf");
    require_unit(thermal_sqrt_sf, Unit::ForceAsd, "thermal_sqrt_sf");
    if (measured_sqrt_sf.value() < 0) throw NegativeInput("measured_sqrt_sf");
    if (thermal_sqrt_sf.value() < 0) throw NegativeInput("thermal_sqrt_sf");

    ThermalClass out;
    out.thermally_limited = thermal_sqrt_sf.value() > measured_sqrt_sf.value() / 2.0;
    out.show_thermal_marker = !out.thermally_limited && measured_sqrt_sf.value() >= 2.0 * thermal_sqrt_sf.value();
    return out;
}

FomResult evaluate_record(const ExperimentRecord& rec, const PeriodicTable& pt, const Constants& c) {
    validate(rec);

    FomResult r;
    r.n_nuclei = rec.n_override ? *rec.n_override : nuclei_count(rec.mass, rec.material, pt, c);

    if (rec.sqrt_sf) {
        r.sqrt_sf = *rec.sqrt_sf;
        r.sqrt_sa = accel_asd_from_force(*rec.sqrt_sf, rec.mass);
        if (rec.sqrt_sa && rec.sqrt_sa->value() > 0) {
            const double rel = std::abs(r.sqrt_sa.value() / rec.sqrt_sa->value() - 1.0);
            if (rel > 0.02) {
                r.warnings.push_back("sqrt_sf/m and sqrt_sa disagree by more than 2%; using sqrt_sf");
            }
        }
    } else {
        r.sqrt_sa = *rec.sqrt_sa;
        r.sqrt_sf = force_asd_from_accel(*rec.sqrt_sa, rec.mass);
    }
    r.fom = fom_from_psd(asd_to_psd(r.sqrt_sa), r.n_nuclei);

    if (rec.temp && rec.f0 && rec.quality) {
        const auto omega0 = angular_frequency(*rec.f0);
        r.thermal_sqrt_sf = psd_to_asd(thermal_force_psd(*rec.temp, rec.mass, omega0, *rec.quality, c));
        r.thermal_fom = thermal_fom(r.n_nuclei, *rec.temp, omega0, rec.mass, *rec.quality, c);
        const auto cls = classify_thermal(r.sqrt_sf, *r.thermal_sqrt_sf);
        r.thermally_limited = cls.thermally_limited;
        r.show_thermal_marker = cls.show_thermal_marker;
        if (r.sqrt_sf.value() < r.thermal_sqrt_sf->value()) {
            r.below_thermal_floor = true;
            r.warnings.push_back("measured force noise is below the thermal floor");
        }
    }
    return r;
}

}  // namespace stdiff
