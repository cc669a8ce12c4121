#include "stdiff/chemforma.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "stdiff/errors.hpp"
#include "text_util.hpp"

namespace stdiff {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses one formula; `base` shifts reported positions when the formula is
// embedded in a larger expression.
Formula parse_formula_at(std::string_view text, const PeriodicTable& pt, std::size_t base) {
    if (text.empty()) throw ParseError("empty formula", base);

    Formula f;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (static_cast<unsigned char>(c) > 0x7f) throw ParseError("non-ASCII character", base + i);

        if (c == '+' || c == '-') {
            if (f.terms.empty()) throw ParseError("charge without element", base + i);
            if (i + 1 != text.size()) throw ParseError("charge must be the last token", base + i);
            f.charge_ignored = true;
            f.charge_sign = c;
            break;
        }
        if (is_digit(c)) throw ParseError("count without element", base + i);
        if (!is_upper(c)) throw ParseError(std::string("unexpected character '") + c + "'", base + i);

        const std::size_t sym_start = i++;
        if (i < text.size() && is_lower(text[i])) ++i;
        std::string symbol(text.substr(sym_start, i - sym_start));
        if (!pt.contains(symbol)) throw UnknownElement(symbol);

        int count = 1;
        if (i < text.size() && is_digit(text[i])) {
            if (text[i] == '0') throw ParseError("zero or zero-padded count", base + i);
            const std::size_t num_start = i;
            long long n = 0;
            while (i < text.size() && is_digit(text[i])) {
                n = n * 10 + (text[i] - '0');
                if (n > std::numeric_limits<int>::max()) throw ParseError("count too large", base + num_start);
                ++i;
            }
            count = static_cast<int>(n);
        }
        f.terms.push_back({std::move(symbol), count});
    }
    return f;
}

}  // namespace

Formula parse_formula(std::string_view text, const PeriodicTable& pt) {
    return parse_formula_at(text, pt, 0);
}

std::string to_string(const Formula& f) {
    std::string out;
    for (const auto& t : f.terms) {
        out += t.symbol;
        if (t.count != 1) out += std::to_string(t.count);
    }
    if (f.charge_ignored) out += f.charge_sign;
    return out;
}

Quantity molar_mass(const Formula& f, const PeriodicTable& pt) {
    double sum = 0.0;
    for (const auto& t : f.terms) sum += t.count * pt.atomic_weight(t.symbol);
    return {sum, Unit::KilogramPerMole};
}

int nuclei_per_formula(const Formula& f) {
    int n = 0;
    for (const auto& t : f.terms) n += t.count;
    return n;
}

MaterialSpec::MaterialSpec(std::vector<MaterialComponent> components) : components_(std::move(components)) {
    if (components_.empty()) throw Error("material has no components");
    double total = 0.0;
    for (const auto& c : components_) {
        if (!(c.mass_fraction > 0.0 && c.mass_fraction <= 1.0)) {
            throw Error("mass fraction of " + to_string(c.formula) + " outside (0, 1]");
        }
        if (c.formula.terms.empty()) throw Error("material component has an empty formula");
        total += c.mass_fraction;
    }
    if (std::abs(total - 1.0) > 1e-9) throw Error("mass fractions sum to " + detail::shortest(total) + ", not 1");
}

MaterialSpec MaterialSpec::pure(Formula f) {
    return MaterialSpec({MaterialComponent{std::move(f), 1.0}});
}

MaterialSpec parse_material(std::string_view text, const PeriodicTable& pt) {
    if (text.find('*') == std::string_view::npos) return MaterialSpec::pure(parse_formula(text, pt));

    std::vector<MaterialComponent> parts;
    std::size_t i = 0;
    while (true) {
        const std::size_t frac_start = i;
        const auto star = text.find('*', i);
        if (star == std::string_view::npos) throw ParseError("expected 'fraction*formula'", frac_start);
        auto fraction = detail::parse_double(text.substr(frac_start, star - frac_start));
        if (!fraction) throw ParseError("bad mass fraction", frac_start);

        // Formula body runs to the next separator '+' that starts a new
        // fraction; a '+' at the end or before another '+' is a charge.
        const std::size_t f_start = star + 1;
        std::size_t j = f_start;
        while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
        if (j < text.size() && text[j] == '-') {
            ++j;
        } else if (j < text.size() && text[j] == '+') {
            const bool at_end = j + 1 == text.size();
            const bool doubled = !at_end && text[j + 1] == '+';
            if (at_end || doubled) ++j;
        }
        Formula f = parse_formula_at(text.substr(f_start, j - f_start), pt, f_start);
        parts.push_back({std::move(f), *fraction});

        if (j == text.size()) break;
        if (text[j] != '+') throw ParseError(std::string("unexpected character '") + text[j] + "'", j);
        i = j + 1;
        if (i == text.size()) throw ParseError("dangling '+'", j);
    }
    return MaterialSpec(std::move(parts));
}

std::string to_string(const MaterialSpec& m) {
    const auto& comps = m.components();
    if (comps.size() == 1 && comps.front().mass_fraction == 1.0) return to_string(comps.front().formula);
    std::string out;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (k) out += '+';
        out += detail::shortest(comps[k].mass_fraction);
        out += '*';
        out += to_string(comps[k].formula);
    }
    return out;
}

double nuclei_count(const Quantity& mass, const MaterialSpec& mat, const PeriodicTable& pt, const Constants& c) {
    require_unit(mass, Unit::Kilogram, "nuclei_count mass");
    if (mass.value() < 0) throw NegativeInput("mass");
    double n = 0.0;
    for (const auto& comp : mat.components()) {
        const double moles = mass.value() * comp.mass_fraction / molar_mass(comp.formula, pt).value();
        n += moles * c.N_A * nuclei_per_formula(comp.formula);
    }
    return n;
}

}  // namespace stdiff
