#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "stdiff/chemforma.hpp"
#include "stdiff/quantities.hpp"

namespace stdiff {

enum class Category {
    Nanotube,
    Nanowire,
    Nanobeam,
    Membrane,
    Mesoscopic,
    Massive,
    TrappedIon,
    OpticalLevitation,
    MagneticLevitation,
    AtomInterferometry,
};

inline constexpr std::array kAllCategories = {
    Category::Nanotube,   Category::Nanowire,          Category::Nanobeam,
    Category::Membrane,   Category::Mesoscopic,        Category::Massive,
    Category::TrappedIon, Category::OpticalLevitation, Category::MagneticLevitation,
    Category::AtomInterferometry,
};

std::string_view to_string(Category c) noexcept;
std::optional<Category> parse_category(std::string_view text) noexcept;

enum class Mode { Absolute, Differential };
enum class Location { Earth, Space };

std::string_view to_string(Mode m) noexcept;
std::string_view to_string(Location l) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;
std::optional<Location> parse_location(std::string_view text) noexcept;

/// One force/acceleration-noise experiment. Optional quantities are absent
/// when the source does not report them.
struct ExperimentRecord {
    std::string name;
    int year = 0;
    std::string reference;
    Category category = Category::Massive;
    MaterialSpec material;
    Quantity mass;                        // kg
    std::optional<double> n_override;     // replaces the material-derived nucleus count
    std::optional<Quantity> f0;           // Hz
    std::optional<Quantity> sqrt_sf;      // N/rtHz
    std::optional<Quantity> sqrt_sa;      // m s^-2/rtHz
    std::optional<Quantity> temp;         // K
    std::optional<double> quality;
    Mode mode = Mode::Absolute;
    Location location = Location::Earth;
    bool secondhand = false;  // value taken from a review rather than the original publication
    std::string notes;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Throws Error naming the first violated record invariant.
void validate(const ExperimentRecord& rec);

}  // namespace stdiff
