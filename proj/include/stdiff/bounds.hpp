#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "stdiff/quantities.hpp"

namespace stdiff {

enum class ModelId { UltraLocalDiscrete, NonLocalContinuous };

std::string_view to_string(ModelId m) noexcept;

/// FOM of the torsion-balance baseline (N = 1e26, sigma_a = 1e-7 m/s^2,
/// dT = 100 s).
inline constexpr double kCavendishFom = 1e14;

/// Links a reference FOM to a published dimensionless bound, so other FOMs
/// can be scaled linearly. `anchor_record` names the catalog entry whose
/// FOM the reference value came from.
struct BoundAnchor {
    ModelId model;
    double fom_ref;      // m^2/s^3
    double bound_ref;    // dimensionless
    double lower_bound;  // dimensionless
    std::string anchor_record;

    friend bool operator==(const BoundAnchor&, const BoundAnchor&) = default;
};

/// Published anchors: discrete 1e-16 (lower 1e-25), continuous 1e-24
/// (lower 1e-35), both at FOM 2.98e-1 from the nanowire measurement.
BoundAnchor default_anchor(ModelId model);

/// Re-pins the anchor to a recomputed FOM of the anchor record.
BoundAnchor calibrated(BoundAnchor a, double recomputed_fom);

/// Direct SI evaluation of the right-hand side of the model inequality:
/// discrete fom r_N^4 / (m_N G^2), continuous fom r_N^3 / G^2.
double si_bound(ModelId model, const Quantity& fom, const Constants& c = default_constants());

/// bound_ref * fom / fom_ref. Throws ModelMismatch.
double anchored_bound(ModelId model, const Quantity& fom, const BoundAnchor& a);

/// Inverse of anchored_bound: the FOM that maps onto `bound`.
Quantity fom_threshold(ModelId model, double bound, const BoundAnchor& a);

/// log10(baseline / fom).
double orders_of_improvement(const Quantity& fom, const Quantity& baseline_fom);

struct BoundReport {
    ModelId model;
    double fom;
    double anchored_bound;
    double si_bound;
    bool below_lower_bound;
    double orders_vs_cavendish;
};

BoundReport bound_report(ModelId model, const Quantity& fom, const BoundAnchor& a,
                         const Constants& c = default_constants());

}  // namespace stdiff
