#include "stdiff/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "stdiff/errors.hpp"
#include "text_util.hpp"

namespace stdiff {

std::string format_sig3(double v) { return format_sig(v, 3); }

std::string format_sig(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*e", std::max(digits - 1, 0), v);
    std::string_view s(buf);
    const auto e = s.find('e');
    std::string out(s.substr(0, e));
    out += 'e';
    auto exp = s.substr(e + 1);
    if (exp.front() == '-') {
        out += '-';
        exp.remove_prefix(1);
    } else if (exp.front() == '+') {
        exp.remove_prefix(1);
    }
    while (exp.size() > 1 && exp.front() == '0') exp.remove_prefix(1);
    out += exp;
    return out;
}

std::string_view to_string(Marker m) noexcept {
    return m == Marker::CircleOpen ? "circle-open" : "circle";
}

std::string emit_table(const Catalog& cat, std::span<const FomResult> results, RankFilter filter) {
    std::string out = "reference,type,element,m,N,f0,sqrt_SF,sqrt_Sa,FOM\n";
    for (auto i : rank(cat, results, filter)) {
        const auto& rec = cat[i];
        const auto& r = results[i];
        const std::string cells[] = {
            detail::csv_text(rec.name),
            std::string(to_string(rec.category)),
            detail::csv_text(to_string(rec.material)),
            format_sig3(rec.mass.value()),
            format_sig3(r.n_nuclei),
            rec.f0 ? format_sig3(rec.f0->value()) : "-",
            format_sig3(r.sqrt_sf.value()),
            format_sig3(r.sqrt_sa.value()),
            format_sig3(r.fom.value()),
        };
        for (std::size_t c = 0; c < std::size(cells); ++c) {
            if (c) out += ',';
            out += cells[c];
        }
        out += '\n';
    }
    return out;
}

std::vector<FigurePoint> figure_points(const Catalog& cat, std::span<const FomResult> results, int k) {
    const auto selected = select_for_figure(cat, results, k);
    std::vector<FigurePoint> pts;
    pts.reserve(cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& rec = cat[i];
        const auto& r = results[i];
        FigurePoint p{
            .name = rec.name,
            .category = rec.category,
            .mass = rec.mass.value(),
            .fom = r.fom.value(),
            .marker = rec.mode == Mode::Differential ? Marker::CircleOpen : Marker::Circle,
            .thermal_diamond = std::nullopt,
            .in_figure = std::find(selected.begin(), selected.end(), i) != selected.end(),
        };
        if (r.show_thermal_marker && r.thermal_fom) p.thermal_diamond = ThermalDiamond{p.mass, r.thermal_fom->value()};
        pts.push_back(std::move(p));
    }
    return pts;
}

AnchorPair anchors_for(const Catalog& cat, std::span<const FomResult> results) {
    AnchorPair a;
    const auto idx = cat.find(a.discrete.anchor_record);
    if (idx < cat.size() && idx < results.size() && results[idx].fom.value() > 0) {
        a.discrete = calibrated(a.discrete, results[idx].fom.value());
        a.continuous = calibrated(a.continuous, results[idx].fom.value());
    }
    return a;
}

namespace {

// Fixed axes: the reference mass span and the FOM span padded by a decade.
constexpr double kXMinExp = -27, kXMaxExp = 3;
constexpr double kYMinExp = -13, kYMaxExp = 15;
constexpr double kWidth = 960, kHeight = 640;
constexpr double kPlotX = 90, kPlotY = 30, kPlotW = 640, kPlotH = 540;

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

const char* color_of(Category c) { return kPalette[static_cast<std::size_t>(c)]; }

double map_x(double mass) {
    const double e = std::clamp(std::log10(mass), kXMinExp, kXMaxExp);
    return kPlotX + (e - kXMinExp) / (kXMaxExp - kXMinExp) * kPlotW;
}

double map_y(double fom) {
    const double e = fom > 0 ? std::clamp(std::log10(fom), kYMinExp, kYMaxExp) : kYMinExp;
    return kPlotY + kPlotH - (e - kYMinExp) / (kYMaxExp - kYMinExp) * kPlotH;
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string token(std::string_view name) {
    std::string out(name);
    std::replace_if(out.begin(), out.end(), [](char c) { return c == ' ' || c == '\t'; }, '_');
    return out;
}

std::string decade_label(int exp) {
    return "10<tspan baseline-shift=\"super\" font-size=\"9\">" + std::to_string(exp) + "</tspan>";
}

void band(std::string& svg, const BoundAnchor& a, const char* fill, const char* opacity) {
    const double threshold = fom_threshold(a.model, a.lower_bound, a).value();
    const double top = map_y(threshold);
    svg += "<rect class=\"band\" data-model=\"" + std::string(to_string(a.model)) + "\" data-fom-threshold=\"" +
           format_sig3(threshold) + "\" x=\"" + px(kPlotX) + "\" y=\"" + px(top) + "\" width=\"" + px(kPlotW) +
           "\" height=\"" + px(kPlotY + kPlotH - top) + "\" fill=\"" + fill + "\" fill-opacity=\"" + opacity +
           "\"/>\n";
}

}  // namespace

FigureFiles emit_figure(std::span<const FigurePoint> points, const AnchorPair& anchors) {
    std::vector<const FigurePoint*> drawn;
    for (const auto& p : points) {
        if (p.in_figure) drawn.push_back(&p);
    }
    if (drawn.empty()) throw EmptyInput("no points selected for the figure");

    FigureFiles out;
    auto& svg = out.svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) + "\" height=\"" + px(kHeight) +
           "\" viewBox=\"0 0 " + px(kWidth) + " " + px(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + px(kWidth) + "\" height=\"" + px(kHeight) + "\" fill=\"white\"/>\n";

    band(svg, anchors.discrete, "#9e9e9e", "0.25");
    band(svg, anchors.continuous, "#424242", "0.35");

    svg += "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
    for (int e = static_cast<int>(kXMinExp); e <= static_cast<int>(kXMaxExp); ++e) {
        const double x = map_x(std::pow(10.0, e));
        svg += "<line x1=\"" + px(x) + "\" y1=\"" + px(kPlotY) + "\" x2=\"" + px(x) + "\" y2=\"" +
               px(kPlotY + kPlotH) + "\"/>\n";
    }
    for (int e = static_cast<int>(kYMinExp); e <= static_cast<int>(kYMaxExp); ++e) {
        const double y = map_y(std::pow(10.0, e));
        svg += "<line x1=\"" + px(kPlotX) + "\" y1=\"" + px(y) + "\" x2=\"" + px(kPlotX + kPlotW) + "\" y2=\"" +
               px(y) + "\"/>\n";
    }
    svg += "</g>\n";
    svg += "<rect x=\"" + px(kPlotX) + "\" y=\"" + px(kPlotY) + "\" width=\"" + px(kPlotW) + "\" height=\"" +
           px(kPlotH) + "\" fill=\"none\" stroke=\"black\"/>\n";

    svg += "<g class=\"ticks\" text-anchor=\"middle\">\n";
    for (int e = static_cast<int>(kXMinExp); e <= static_cast<int>(kXMaxExp); e += 3) {
        svg += "<text x=\"" + px(map_x(std::pow(10.0, e))) + "\" y=\"" + px(kPlotY + kPlotH + 18) + "\">" +
               decade_label(e) + "</text>\n";
    }
    svg += "</g>\n<g class=\"ticks\" text-anchor=\"end\">\n";
    for (int e = static_cast<int>(kYMinExp) + 1; e <= static_cast<int>(kYMaxExp); e += 2) {
        svg += "<text x=\"" + px(kPlotX - 6) + "\" y=\"" + px(map_y(std::pow(10.0, e)) + 4) + "\">" +
               decade_label(e) + "</text>\n";
    }
    svg += "</g>\n";
    svg += "<text x=\"" + px(kPlotX + kPlotW / 2) + "\" y=\"" + px(kHeight - 16) +
           "\" text-anchor=\"middle\">test mass m [kg]</text>\n";
    svg += "<text transform=\"translate(24 " + px(kPlotY + kPlotH / 2) +
           ") rotate(-90)\" text-anchor=\"middle\">FOM_D2 [m^2 s^-3]</text>\n";

    auto& dat = out.dat;
    svg += "<g class=\"points\">\n";
    for (const auto* p : drawn) {
        const char* color = color_of(p->category);
        const auto name = xml_escape(p->name);
        const double x = map_x(p->mass);
        const double y = map_y(p->fom);
        if (p->marker == Marker::CircleOpen) {
            svg += "<circle class=\"marker circle-open\" data-name=\"" + name + "\" cx=\"" + px(x) + "\" cy=\"" +
                   px(y) + "\" r=\"5\" fill=\"white\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        } else {
            svg += "<circle class=\"marker circle\" data-name=\"" + name + "\" cx=\"" + px(x) + "\" cy=\"" + px(y) +
                   "\" r=\"5\" fill=\"" + color + "\" stroke=\"" + color + "\" stroke-width=\"1\"/>\n";
        }
        dat += token(p->name) + ' ' + std::string(to_string(p->category)) + ' ' + format_sig3(p->mass) + ' ' +
               format_sig3(p->fom) + ' ' + std::string(to_string(p->marker)) + '\n';

        if (p->thermal_diamond) {
            const double dx = map_x(p->thermal_diamond->mass);
            const double dy = map_y(p->thermal_diamond->fom);
            svg += "<path class=\"marker diamond\" data-name=\"" + name + "\" d=\"M " + px(dx) + " " + px(dy - 6) +
                   " L " + px(dx + 6) + " " + px(dy) + " L " + px(dx) + " " + px(dy + 6) + " L " + px(dx - 6) + " " +
                   px(dy) + " Z\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
            dat += token(p->name) + ' ' + std::string(to_string(p->category)) + ' ' +
                   format_sig3(p->thermal_diamond->mass) + ' ' + format_sig3(p->thermal_diamond->fom) + " diamond\n";
        }
    }
    svg += "</g>\n";

    // Legend: categories present, then marker and band semantics.
    svg += "<g class=\"legend\">\n";
    double ly = kPlotY + 10;
    for (auto c : kAllCategories) {
        const bool present = std::any_of(drawn.begin(), drawn.end(), [c](const FigurePoint* p) { return p->category == c; });
        if (!present) continue;
        svg += "<circle cx=\"" + px(kPlotX + kPlotW + 24) + "\" cy=\"" + px(ly) + "\" r=\"5\" fill=\"" +
               color_of(c) + "\"/>\n";
        svg += "<text x=\"" + px(kPlotX + kPlotW + 36) + "\" y=\"" + px(ly + 4) + "\">" +
               std::string(to_string(c)) + "</text>\n";
        ly += 20;
    }
    ly += 10;
    svg += "<circle cx=\"" + px(kPlotX + kPlotW + 24) + "\" cy=\"" + px(ly) +
           "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + px(kPlotX + kPlotW + 36) + "\" y=\"" + px(ly + 4) + "\">differential</text>\n";
    ly += 20;
    svg += "<path d=\"M " + px(kPlotX + kPlotW + 24) + " " + px(ly - 6) + " l 6 6 l -6 6 l -6 -6 Z\" fill=\"none\" "
           "stroke=\"black\"/>\n";
    svg += "<text x=\"" + px(kPlotX + kPlotW + 36) + "\" y=\"" + px(ly + 4) + "\">thermal floor</text>\n";
    ly += 20;
    svg += "<rect x=\"" + px(kPlotX + kPlotW + 18) + "\" y=\"" + px(ly - 6) +
           "\" width=\"12\" height=\"12\" fill=\"#9e9e9e\" fill-opacity=\"0.25\"/>\n";
    svg += "<text x=\"" + px(kPlotX + kPlotW + 36) + "\" y=\"" + px(ly + 4) + "\">discrete lower bound</text>\n";
    ly += 20;
    svg += "<rect x=\"" + px(kPlotX + kPlotW + 18) + "\" y=\"" + px(ly - 6) +
           "\" width=\"12\" height=\"12\" fill=\"#424242\" fill-opacity=\"0.35\"/>\n";
    svg += "<text x=\"" + px(kPlotX + kPlotW + 36) + "\" y=\"" + px(ly + 4) + "\">continuous lower bound</text>\n";
    svg += "</g>\n</svg>\n";
    return out;
}

namespace {

std::string orders_text(double orders) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", orders);
    std::string s(buf);
    return s == "-0.0" ? "0.0" : s;
}

void line(std::string& out, std::string_view key, std::string_view value) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
}

}  // namespace

std::string emit_bounds_summary(const Catalog& cat, std::span<const FomResult> results, const AnchorPair& anchors,
                                const Constants& c, RankFilter filter) {
    const auto absolute = rank(cat, results, RankFilter::AbsoluteOnEarth);
    const auto overall = rank(cat, results, RankFilter::All);
    const auto selected = rank(cat, results, filter);
    const auto baseline = fom_value(kCavendishFom);

    std::string out;
    line(out, "baseline_fom", format_sig3(kCavendishFom));
    line(out, "anchor_record", anchors.discrete.anchor_record);
    line(out, "anchor_fom", format_sig3(anchors.discrete.fom_ref));

    auto best = [&](std::string_view key, const std::vector<std::size_t>& ranked) {
        if (ranked.empty()) {
            line(out, key, "none");
            return;
        }
        line(out, key, cat[ranked.front()].name);
        line(out, std::string(key) + "_fom", format_sig3(results[ranked.front()].fom.value()));
        line(out, "orders." + std::string(key),
             orders_text(orders_of_improvement(results[ranked.front()].fom, baseline)));
    };
    best("best_absolute_on_earth", absolute);
    best("best_overall", overall);
    line(out, "selected_filter", to_string(filter));

    for (const auto* a : {&anchors.discrete, &anchors.continuous}) {
        const std::string m(to_string(a->model));
        line(out, m + ".lower_bound", format_sig3(a->lower_bound));
        line(out, m + ".lower_bound_fom_threshold", format_sig3(fom_threshold(a->model, a->lower_bound, *a).value()));
        auto bounds_for = [&](std::string_view tag, const std::vector<std::size_t>& ranked) {
            if (ranked.empty()) return;
            const auto rep = bound_report(a->model, results[ranked.front()].fom, *a, c);
            line(out, m + "." + std::string(tag) + "_bound", format_sig3(rep.anchored_bound));
            line(out, m + "." + std::string(tag) + "_si_bound", format_sig3(rep.si_bound));
            line(out, m + "." + std::string(tag) + "_below_lower_bound", rep.below_lower_bound ? "true" : "false");
        };
        bounds_for("conservative", absolute);
        bounds_for("overall", overall);
        bounds_for("selected", selected);
    }

    if (!absolute.empty()) {
        const auto& fom = results[absolute.front()].fom;
        const double d = anchored_bound(ModelId::UltraLocalDiscrete, fom, anchors.discrete);
        const double n = anchored_bound(ModelId::NonLocalContinuous, fom, anchors.continuous);
        line(out, "conservative.ultra-local-discrete",
             format_sig3(d) + " >= l_P^3 D_2 / m_P >= " + format_sig3(anchors.discrete.lower_bound));
        line(out, "conservative.non-local-continuous",
             format_sig3(n) + " >= l_P^2 D_2 >= " + format_sig3(anchors.continuous.lower_bound));
    }
    return out;
}

}  // namespace stdiff
