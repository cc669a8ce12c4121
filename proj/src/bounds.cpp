#include "stdiff/bounds.hpp"

#include <cmath>

#include "stdiff/errors.hpp"

namespace stdiff {

std::string_view to_string(ModelId m) noexcept {
    return m == ModelId::UltraLocalDiscrete ? "ultra-local-discrete" : "non-local-continuous";
}

BoundAnchor default_anchor(ModelId model) {
    switch (model) {
        case ModelId::UltraLocalDiscrete: return {model, 2.98e-1, 1e-16, 1e-25, "Gisler '22"};
        case ModelId::NonLocalContinuous: return {model, 2.98e-1, 1e-24, 1e-35, "Gisler '22"};
    }
    throw ModelMismatch("unknown model");
}

BoundAnchor calibrated(BoundAnchor a, double recomputed_fom) {
    if (!(recomputed_fom > 0)) throw NonPositive("anchor FOM");
    a.fom_ref = recomputed_fom;
    return a;
}

double si_bound(ModelId model, const Quantity& fom, const Constants& c) {
    require_unit(fom, Unit::Fom, "fom");
    if (fom.value() < 0) throw NegativeInput("fom");
    const double g2 = c.G * c.G;
    const double r3 = c.r_N * c.r_N * c.r_N;
    switch (model) {
        case ModelId::UltraLocalDiscrete: return fom.value() * (r3 * c.r_N) / (c.m_N * g2);
        case ModelId::NonLocalContinuous: return fom.value() * r3 / g2;
    }
    throw ModelMismatch("unknown model");
}

namespace {

void check_anchor(ModelId model, const BoundAnchor& a) {
    if (a.model != model) {
        throw ModelMismatch("anchor is for " + std::string(to_string(a.model)) + ", requested " +
                            std::string(to_string(model)));
    }
    if (!(a.fom_ref > 0) || !(a.bound_ref > 0) || !(a.lower_bound > 0)) throw NonPositive("anchor value");
}

}  // namespace

double anchored_bound(ModelId model, const Quantity& fom, const BoundAnchor& a) {
    check_anchor(model, a);
    require_unit(fom, Unit::Fom, "fom");
    if (fom.value() < 0) throw NegativeInput("fom");
    return a.bound_ref * (fom.value() / a.fom_ref);
}

Quantity fom_threshold(ModelId model, double bound, const BoundAnchor& a) {
    check_anchor(model, a);
    if (!(bound > 0)) throw NonPositive("bound");
    return fom_value(a.fom_ref * (bound / a.bound_ref));
}

double orders_of_improvement(const Quantity& fom, const Quantity& baseline_fom) {
    require_unit(fom, Unit::Fom, "fom");
    require_unit(baseline_fom, Unit::Fom, "baseline_fom");
    if (!(fom.value() > 0)) throw NonPositive("fom");
    if (!(baseline_fom.value() > 0)) throw NonPositive("baseline fom");
    return std::log10(baseline_fom.value() / fom.value());
}

BoundReport bound_report(ModelId model, const Quantity& fom, const BoundAnchor& a, const Constants& c) {
    BoundReport r{};
    r.model = model;
    r.fom = fom.value();
    r.anchored_bound = anchored_bound(model, fom, a);
    r.si_bound = si_bound(model, fom, c);
    r.below_lower_bound = r.anchored_bound < a.lower_bound;
    r.orders_vs_cavendish = orders_of_improvement(fom, fom_value(kCavendishFom));
    return r;
}

}  // namespace stdiff
