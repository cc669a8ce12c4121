#include "stdiff/record.hpp"

#include "stdiff/errors.hpp"

namespace stdiff {

std::string_view to_string(Category c) noexcept {
    switch (c) {
        case Category::Nanotube: return "nanotube";
        case Category::Nanowire: return "nanowire";
        case Category::Nanobeam: return "nanobeam";
        case Category::Membrane: return "membrane";
        case Category::Mesoscopic: return "mesoscopic";
        case Category::Massive: return "massive";
        case Category::TrappedIon: return "trapped-ion";
        case Category::OpticalLevitation: return "optical-levitation";
        case Category::MagneticLevitation: return "magnetic-levitation";
        case Category::AtomInterferometry: return "atom-interferometry";
    }
    return "?";
}

std::optional<Category> parse_category(std::string_view text) noexcept {
    for (auto c : kAllCategories) {
        if (to_string(c) == text) return c;
    }
    return std::nullopt;
}

std::string_view to_string(Mode m) noexcept {
    return m == Mode::Differential ? "differential" : "absolute";
}

std::string_view to_string(Location l) noexcept {
    return l == Location::Space ? "space" : "earth";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
    if (text == "absolute") return Mode::Absolute;
    if (text == "differential") return Mode::Differential;
    return std::nullopt;
}

std::optional<Location> parse_location(std::string_view text) noexcept {
    if (text == "earth") return Location::Earth;
    if (text == "space") return Location::Space;
    return std::nullopt;
}

void validate(const ExperimentRecord& rec) {
    if (rec.name.empty()) throw Error("record name is empty");
    const auto where = "record '" + rec.name + "': ";
    require_unit(rec.mass, Unit::Kilogram, where + "mass");
    if (!(rec.mass.value() > 0)) throw Error(where + "mass must be > 0");
    if (!rec.sqrt_sf && !rec.sqrt_sa) throw MissingNoise(rec.name);
    if (rec.sqrt_sf) {
        require_unit(*rec.sqrt_sf, Unit::ForceAsd, where + "sqrt_sf");
        if (rec.sqrt_sf->value() < 0) throw Error(where + "sqrt_sf must be >= 0");
    }
    if (rec.sqrt_sa) {
        require_unit(*rec.sqrt_sa, Unit::AccelAsd, where + "sqrt_sa");
        if (rec.sqrt_sa->value() < 0) throw Error(where + "sqrt_sa must be >= 0");
    }
    if (rec.n_override && !(*rec.n_override >= 1)) throw Error(where + "n_override must be >= 1");
    if (rec.quality && !(*rec.quality > 0)) throw Error(where + "quality must be > 0");
    if (rec.f0) {
        require_unit(*rec.f0, Unit::Hertz, where + "f0");
        if (!(rec.f0->value() > 0)) throw Error(where + "f0 must be > 0");
    }
    if (rec.temp) {
        require_unit(*rec.temp, Unit::Kelvin, where + "temp");
        if (rec.temp->value() < 0) throw Error(where + "temp must be >= 0");
    }
}

}  // namespace stdiff
