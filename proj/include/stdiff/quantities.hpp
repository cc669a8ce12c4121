#pragma once

#include <array>
#include <compare>
#include <string_view>

namespace stdiff {

// Closed set of units that occur in the analysis. Spectral densities are
// kept apart as amplitude (per sqrt(Hz)) and power (per Hz) forms.
enum class Unit {
    Kilogram,
    Hertz,
    RadianPerSecond,
    Kelvin,
    Second,
    Force,           // N
    Acceleration,    // m s^-2
    ForceAsd,        // N / sqrt(Hz)
    AccelAsd,        // m s^-2 / sqrt(Hz)
    ForcePsd,        // N^2 / Hz
    AccelPsd,        // m^2 s^-4 / Hz
    Fom,             // m^2 s^-3
    KilogramPerMole,
    PerMole,
    Dimensionless,
};

inline constexpr std::array kAllUnits = {
    Unit::Kilogram, Unit::Hertz,    Unit::RadianPerSecond, Unit::Kelvin,          Unit::Second,
    Unit::Force,    Unit::Acceleration, Unit::ForceAsd,    Unit::AccelAsd,        Unit::ForcePsd,
    Unit::AccelPsd, Unit::Fom,      Unit::KilogramPerMole, Unit::PerMole,         Unit::Dimensionless,
};

std::string_view unit_symbol(Unit u) noexcept;

// A finite real value tagged with its unit. Adding or comparing values with
// different units throws UnitMismatch.
class Quantity {
public:
    Quantity(double value, Unit unit);

    double value() const noexcept { return value_; }
    Unit unit() const noexcept { return unit_; }

    Quantity& operator+=(const Quantity& rhs);
    Quantity& operator-=(const Quantity& rhs);

    friend Quantity operator+(Quantity lhs, const Quantity& rhs) { return lhs += rhs; }
    friend Quantity operator-(Quantity lhs, const Quantity& rhs) { return lhs -= rhs; }
    friend Quantity operator*(const Quantity& q, double s) { return {q.value_ * s, q.unit_}; }
    friend Quantity operator*(double s, const Quantity& q) { return q * s; }
    friend Quantity operator/(const Quantity& q, double s) { return {q.value_ / s, q.unit_}; }

    friend bool operator==(const Quantity&, const Quantity&) = default;
    // Ordering is only defined between equal units.
    std::partial_ordering operator<=>(const Quantity& rhs) const;

private:
    double value_;
    Unit unit_;
};

// Throws UnitMismatch naming `what` when q is not in unit `expected`.
void require_unit(const Quantity& q, Unit expected, std::string_view what);

inline Quantity kilograms(double v) { return {v, Unit::Kilogram}; }
inline Quantity hertz(double v) { return {v, Unit::Hertz}; }
inline Quantity radians_per_second(double v) { return {v, Unit::RadianPerSecond}; }
inline Quantity kelvin(double v) { return {v, Unit::Kelvin}; }
inline Quantity seconds(double v) { return {v, Unit::Second}; }
inline Quantity acceleration(double v) { return {v, Unit::Acceleration}; }
inline Quantity force_asd(double v) { return {v, Unit::ForceAsd}; }
inline Quantity accel_asd(double v) { return {v, Unit::AccelAsd}; }
inline Quantity force_psd(double v) { return {v, Unit::ForcePsd}; }
inline Quantity accel_psd(double v) { return {v, Unit::AccelPsd}; }
inline Quantity fom_value(double v) { return {v, Unit::Fom}; }
inline Quantity dimensionless(double v) { return {v, Unit::Dimensionless}; }

/// Squares an amplitude spectral density into the matching power spectral
/// density (ForceAsd -> ForcePsd, AccelAsd -> AccelPsd).
Quantity asd_to_psd(const Quantity& asd);
/// Exact inverse of asd_to_psd for non-negative inputs.
Quantity psd_to_asd(const Quantity& psd);

/// omega_0 = 2*pi*f_0. All thermal formulas take angular frequency; records
/// carry f_0 in Hz.
Quantity angular_frequency(const Quantity& f0);

// Physical constants in SI units. r_N and m_N are model parameters rather
// than measured constants and are expected to be overridden.
struct Constants {
    double G;    // m^3 kg^-1 s^-2
    double N_A;  // mol^-1
    double k_B;  // J/K
    double l_P;  // m
    double m_P;  // kg
    double r_N;  // m, nucleus radius
    double m_N;  // kg, nucleus mass

    friend bool operator==(const Constants&, const Constants&) = default;
};

/// The embedded defaults file, in the same "name value" format that
/// load_constants accepts.
std::string_view default_constants_text() noexcept;

const Constants& default_constants();

/// Parses "name value" lines ('#' starts a comment) on top of the defaults.
/// Throws UnknownConstant, NonPositive, or ParseError.
Constants load_constants(std::string_view text);

}  // namespace stdiff
