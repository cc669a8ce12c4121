#include "stdiff/quantities.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stdiff/errors.hpp"
#include "text_util.hpp"

namespace stdiff {

std::string_view unit_symbol(Unit u) noexcept {
    switch (u) {
        case Unit::Kilogram: return "kg";
        case Unit::Hertz: return "Hz";
        case Unit::RadianPerSecond: return "rad/s";
        case Unit::Kelvin: return "K";
        case Unit::Second: return "s";
        case Unit::Force: return "N";
        case Unit::Acceleration: return "m/s^2";
        case Unit::ForceAsd: return "N/rtHz";
        case Unit::AccelAsd: return "m s^-2/rtHz";
        case Unit::ForcePsd: return "N^2/Hz";
        case Unit::AccelPsd: return "m^2 s^-4/Hz";
        case Unit::Fom: return "m^2/s^3";
        case Unit::KilogramPerMole: return "kg/mol";
        case Unit::PerMole: return "1/mol";
        case Unit::Dimensionless: return "1";
    }
    return "?";
}

Quantity::Quantity(double value, Unit unit) : value_(value), unit_(unit) {
    if (!std::isfinite(value)) {
        throw Error("non-finite quantity in " + std::string(unit_symbol(unit)));
    }
}

namespace {

void check_same(Unit a, Unit b, const char* op) {
    if (a != b) {
        throw UnitMismatch(std::string("cannot ") + op + " " + std::string(unit_symbol(a)) +
                           " and " + std::string(unit_symbol(b)));
    }
}

}  // namespace

Quantity& Quantity::operator+=(const Quantity& rhs) {
    check_same(unit_, rhs.unit_, "add");
    *this = Quantity(value_ + rhs.value_, unit_);
    return *this;
}

Quantity& Quantity::operator-=(const Quantity& rhs) {
    check_same(unit_, rhs.unit_, "subtract");
    *this = Quantity(value_ - rhs.value_, unit_);
    return *this;
}

std::partial_ordering Quantity::operator<=>(const Quantity& rhs) const {
    check_same(unit_, rhs.unit_, "compare");
    return value_ <=> rhs.value_;
}

void require_unit(const Quantity& q, Unit expected, std::string_view what) {
    if (q.unit() != expected) {
        throw UnitMismatch(std::string(what) + ": expected " + std::string(unit_symbol(expected)) +
                           ", got " + std::string(unit_symbol(q.unit())));
    }
}

Quantity asd_to_psd(const Quantity& asd) {
    Unit out{};
    switch (asd.unit()) {
        case Unit::ForceAsd: out = Unit::ForcePsd; break;
        case Unit::AccelAsd: out = Unit::AccelPsd; break;
        default: throw UnitMismatch("asd_to_psd: not an amplitude spectral density");
    }
    if (asd.value() < 0) throw NegativeInput("amplitude spectral density");
    return {asd.value() * asd.value(), out};
}

Quantity psd_to_asd(const Quantity& psd) {
    Unit out{};
    switch (psd.unit()) {
        case Unit::ForcePsd: out = Unit::ForceAsd; break;
        case Unit::AccelPsd: out = Unit::AccelAsd; break;
        default: throw UnitMismatch("psd_to_asd: not a power spectral density");
    }
    if (psd.value() < 0) throw NegativeInput("power spectral density");
    return {std::sqrt(psd.value()), out};
}

Quantity angular_frequency(const Quantity& f0) {
    require_unit(f0, Unit::Hertz, "angular_frequency");
    return radians_per_second(2.0 * std::numbers::pi * f0.value());
}

std::string_view default_constants_text() noexcept {
    return "# SI defaults (CODATA 2018; r_N and m_N are model parameters)\n"
           "G 6.674e-11\n"
           "N_A 6.02214076e23\n"
           "k_B 1.380649e-23\n"
           "l_P 1.616255e-35\n"
           "m_P 2.176434e-8\n"
           "r_N 1.0e-15\n"
           "m_N 1.6726e-27\n";
}

namespace {

double* slot(Constants& c, std::string_view name) {
    if (name == "G") return &c.G;
    if (name == "N_A") return &c.N_A;
    if (name == "k_B") return &c.k_B;
    if (name == "l_P") return &c.l_P;
    if (name == "m_P") return &c.m_P;
    if (name == "r_N") return &c.r_N;
    if (name == "m_N") return &c.m_N;
    return nullptr;
}

void apply(Constants& c, std::string_view text) {
    std::size_t offset = 0;
    while (offset <= text.size()) {
        auto nl = text.find('\n', offset);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(offset, nl - offset);
        const auto line_start = offset;
        offset = nl + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) throw ParseError("missing value for '" + std::string(line) + "'", line_start);
        auto name = line.substr(0, sep);
        auto value_text = detail::trim(line.substr(sep));

        double* target = slot(c, name);
        if (!target) throw UnknownConstant(std::string(name));
        auto value = detail::parse_double(value_text);
        if (!value || !std::isfinite(*value)) {
            throw ParseError("bad number '" + std::string(value_text) + "'", line_start + sep);
        }
        if (*value <= 0) throw NonPositive(std::string(name));
        *target = *value;
    }
}

}  // namespace

const Constants& default_constants() {
    static const Constants defaults = [] {
        Constants c{};
        apply(c, default_constants_text());
        return c;
    }();
    return defaults;
}

Constants load_constants(std::string_view text) {
    Constants c = default_constants();
    apply(c, text);
    return c;
}

}  // namespace stdiff
