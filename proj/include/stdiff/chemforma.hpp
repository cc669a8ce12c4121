#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stdiff/quantities.hpp"

namespace stdiff {

/// Standard atomic weights, keyed by element symbol. The embedded table holds
/// the abridged CIAAW values (conventional values for elements with an
/// interval), in kg/mol.
class PeriodicTable {
public:
    explicit PeriodicTable(std::map<std::string, double, std::less<>> weights_kg_per_mol);

    /// Table built from the embedded standard atomic weights.
    static const PeriodicTable& standard();

    bool contains(std::string_view symbol) const;
    /// Throws UnknownElement.
    double atomic_weight(std::string_view symbol) const;
    std::size_t size() const noexcept { return weights_.size(); }

private:
    std::map<std::string, double, std::less<>> weights_;
};

struct FormulaTerm {
    std::string symbol;
    int count = 1;

    friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

/// A parsed chemical formula: element symbols with multiplicities, in input
/// order. A trailing ionic charge is recorded and otherwise ignored.
struct Formula {
    std::vector<FormulaTerm> terms;
    bool charge_ignored = false;
    char charge_sign = '\0';  // '+' or '-' when charge_ignored

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// Grammar: (Upper [lower] [digits])+ ['+' | '-']. Counts must be >= 1 and
/// written without leading zeros. Throws ParseError or UnknownElement.
Formula parse_formula(std::string_view text, const PeriodicTable& pt = PeriodicTable::standard());

/// Canonical text: counts of 1 omitted, charge sign appended if present.
std::string to_string(const Formula& f);

/// Sum of count * atomic weight, in kg/mol.
Quantity molar_mass(const Formula& f, const PeriodicTable& pt = PeriodicTable::standard());

int nuclei_per_formula(const Formula& f);

struct MaterialComponent {
    Formula formula;
    double mass_fraction = 1.0;

    friend bool operator==(const MaterialComponent&, const MaterialComponent&) = default;
};

/// Test-mass composition by mass fraction.
class MaterialSpec {
public:
    /// Validates fractions in (0, 1] summing to 1 within 1e-9.
    explicit MaterialSpec(std::vector<MaterialComponent> components);

    static MaterialSpec pure(Formula f);

    const std::vector<MaterialComponent>& components() const noexcept { return components_; }

    friend bool operator==(const MaterialSpec&, const MaterialSpec&) = default;

private:
    std::vector<MaterialComponent> components_;
};

/// Accepts either a bare formula ("Si3N4") or a mass-fraction mixture
/// ("0.8*SiO2+0.2*B2O3"). No whitespace.
MaterialSpec parse_material(std::string_view text, const PeriodicTable& pt = PeriodicTable::standard());

/// Inverse of parse_material; fractions use the shortest exact decimal form.
std::string to_string(const MaterialSpec& m);

/// Number of atomic nuclei in `mass` of material `mat`.
double nuclei_count(const Quantity& mass, const MaterialSpec& mat,
                    const PeriodicTable& pt = PeriodicTable::standard(),
                    const Constants& c = default_constants());

}  // namespace stdiff
