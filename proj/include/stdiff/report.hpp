#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stdiff/bounds.hpp"
#include "stdiff/catalog.hpp"

namespace stdiff {

/// `digits` significant figures, mantissa-e-exponent with no '+' sign or
/// exponent padding.
std::string format_sig(double v, int digits);

/// Three significant figures in the reference-table style: "2.41e-11",
/// "2.79e11", "1.85e0". Exact ties round half to even.
std::string format_sig3(double v);

/// Recomputed table as CSV, one row per record (after `filter`) ascending by
/// FOM.
std::string emit_table(const Catalog& cat, std::span<const FomResult> results,
                       RankFilter filter = RankFilter::All);

enum class Marker { Circle, CircleOpen };

std::string_view to_string(Marker m) noexcept;

struct ThermalDiamond {
    double mass;
    double fom;
};

struct FigurePoint {
    std::string name;
    Category category;
    double mass;
    double fom;
    Marker marker;  // open for differential measurements
    std::optional<ThermalDiamond> thermal_diamond;
    bool in_figure = false;
};

/// One point per record; in_figure marks the k best of each category.
std::vector<FigurePoint> figure_points(const Catalog& cat, std::span<const FomResult> results, int k = 3);

struct AnchorPair {
    BoundAnchor discrete = default_anchor(ModelId::UltraLocalDiscrete);
    BoundAnchor continuous = default_anchor(ModelId::NonLocalContinuous);
};

/// Default anchors, re-pinned to the recomputed FOM of the anchor record
/// when the catalog contains it.
AnchorPair anchors_for(const Catalog& cat, std::span<const FomResult> results);

struct FigureFiles {
    std::string svg;
    std::string dat;
};

/// Log-log FOM versus mass scatter of the in_figure points, with the two
/// lower-bound regions shaded. The data file lists every drawn marker as
/// "name category mass fom marker". Throws EmptyInput.
FigureFiles emit_figure(std::span<const FigurePoint> points, const AnchorPair& anchors);

/// Line-keyed "key: value" summary of the best FOMs and both model bounds.
std::string emit_bounds_summary(const Catalog& cat, std::span<const FomResult> results, const AnchorPair& anchors,
                                const Constants& c = default_constants(),
                                RankFilter filter = RankFilter::AbsoluteOnEarth);

}  // namespace stdiff
